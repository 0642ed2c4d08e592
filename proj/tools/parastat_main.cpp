// Command-line front end: verification reports, structure constants, pattern
// enumeration, and Fock dimension/Gram data as JSON or CSV.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include "parastat/engine.hpp"
#include "parastat/fock.hpp"
#include "parastat/gz.hpp"
#include "parastat/json_io.hpp"
#include "parastat/relations.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace parastat;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f)
        throw std::runtime_error("cannot open output file: " + out_path);
    f << text << "\n";
}

std::string gen_name(int mode, Sign s) {
    std::ostringstream os;
    os << (mode < 0 ? "f(" : "b(") << mode << (s == Sign::plus ? ",+)" : ",-)");
    return os.str();
}

std::string e_name(int j, int k) {
    return "E(" + std::to_string(j) + "," + std::to_string(k) + ")";
}

json term_list(const std::vector<std::pair<std::string, QSqrt2>> &terms) {
    json out = json::array();
    for (const auto &[name, coeff] : terms)
        if (!coeff.is_zero())
            out.push_back(json{{"basis", name}, {"coeff", to_json(coeff)}});
    return out;
}

std::vector<int> mode_range(int n) {
    std::vector<int> modes;
    for (int i = -n; i <= n; ++i)
        if (i != 0)
            modes.push_back(i);
    return modes;
}

// ---- algebra ---------------------------------------------------------------

int run_algebra(int n, int max_rank, const std::string &out_path) {
    if (n < 1 || n > max_rank) {
        std::cerr << "algebra: rank must be in [1," << max_rank << "]\n";
        return kExitUsage;
    }
    json doc;
    doc["schema"] = 1;
    doc["n"] = n;
    doc["closureDimension"] = bracket_closure_dim(n);

    json gens = json::array();
    for (int i : mode_range(n))
        for (Sign s : {Sign::plus, Sign::minus})
            gens.push_back(json{{"name", gen_name(i, s)}, {"matrix", to_json(generator(i, s))}});
    doc["generators"] = gens;

    json cartan = json::array();
    for (int i : mode_range(n))
        cartan.push_back(json{{"name", "h(" + std::to_string(i) + ")"},
                              {"matrix", to_json(cartan_h(i))}});
    doc["cartan"] = cartan;

    json glbasis = json::array();
    for (int j : mode_range(n))
        for (int k : mode_range(n))
            glbasis.push_back(json{{"name", e_name(j, k)}, {"matrix", to_json(gl_E(j, k))}});
    doc["glBasis"] = glbasis;

    // Structure constants over the named basis; every expansion is verified
    // against the bracket matrix before being emitted.
    json sc = json::array();
    const QSqrt2 one(Rational(1), Rational(0));
    for (int j : mode_range(n))
        for (int k : mode_range(n)) {
            // [[c_j^+, c_k^-]] = 2 E(j,k)
            AlgebraElement br =
                graded_bracket(generator(j, Sign::plus), generator(k, Sign::minus));
            if (br != gl_E(j, k).scaled(QSqrt2(Rational(2), Rational(0))))
                throw std::logic_error("structure constant check failed");
            sc.push_back(json{{"x", gen_name(j, Sign::plus)},
                              {"y", gen_name(k, Sign::minus)},
                              {"bracket",
                               term_list({{e_name(j, k), QSqrt2(Rational(2), Rational(0))}})}});
        }
    for (int i : mode_range(n))
        for (int l : mode_range(n))
            for (Sign s : {Sign::plus, Sign::minus}) {
                // [[h_i, c_l^s]]: a multiple of c_l^s, read off the adjoint weight
                AlgebraElement br = graded_bracket(cartan_h(i), generator(l, s));
                Rational lambda = adjoint_weight(generator(l, s), n).get(i);
                if (br != generator(l, s).scaled(QSqrt2(lambda, Rational(0))))
                    throw std::logic_error("structure constant check failed");
                if (lambda.is_zero())
                    continue;
                sc.push_back(json{{"x", "h(" + std::to_string(i) + ")"},
                                  {"y", gen_name(l, s)},
                                  {"bracket", term_list({{gen_name(l, s),
                                                          QSqrt2(lambda, Rational(0))}})}});
            }
    for (int j : mode_range(n))
        for (int k : mode_range(n))
            for (int l : mode_range(n))
                for (int m : mode_range(n)) {
                    const int sgn = gl_E(j, k).grade()->bracket_sign(*gl_E(l, m).grade());
                    std::vector<std::pair<std::string, QSqrt2>> terms;
                    AlgebraElement expect;
                    if (k == l) {
                        terms.push_back({e_name(j, m), one});
                        expect = expect + gl_E(j, m);
                    }
                    if (j == m) {
                        terms.push_back({e_name(l, k), QSqrt2(Rational(-sgn), Rational(0))});
                        expect = expect - gl_E(l, k).scaled(QSqrt2(Rational(sgn), Rational(0)));
                    }
                    if (terms.empty())
                        continue;
                    if (graded_bracket(gl_E(j, k), gl_E(l, m)) != expect)
                        throw std::logic_error("structure constant check failed");
                    sc.push_back(json{{"x", e_name(j, k)},
                                      {"y", e_name(l, m)},
                                      {"bracket", term_list(terms)}});
                }
    doc["structureConstants"] = sc;
    write_output(doc.dump(2), out_path);
    return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int run_verify(int n, unsigned long seed, bool rel_pf_must_pass) {
    if (n < 1) {
        std::cerr << "verify: rank must be >= 1\n";
        return kExitUsage;
    }
    bool ok = true;

    const long random_triples = n == 1 ? 0 : 200;
    AxiomReport ax = axiom_check(n, random_triples, seed);
    std::cout << "axioms (grading, antisymmetry, jacobi): " << ax.triples << " triples, "
              << ax.failures << " failures\n";
    if (!ax.all_passed()) {
        std::cout << "  first failure: " << ax.first_failure << "\n";
        ok = false;
    }

    auto report = [&](RelationFamily fam, bool expect_pass) {
        RelationReport r = relation_check(fam, n);
        const bool as_expected = expect_pass ? r.all_passed() : r.failed > 0;
        std::cout << family_name(fam) << ": " << r.passed << "/" << r.total << " passed";
        if (!expect_pass)
            std::cout << " (failures expected for these generators: " << r.failed << ")";
        std::cout << (as_expected ? " [ok]" : " [UNEXPECTED]") << "\n";
        if (r.first_counterexample && (expect_pass || !as_expected)) {
            const RelationInstance &ins = *r.first_counterexample;
            std::cout << "  first counterexample: sub=" << ins.sub << " j=" << ins.j
                      << " k=" << ins.k << " l=" << ins.l << " signs=("
                      << (ins.xi == Sign::plus ? '+' : '-')
                      << (ins.eta == Sign::plus ? '+' : '-')
                      << (ins.eps == Sign::plus ? '+' : '-') << ")\n";
        }
        if (!as_expected)
            ok = false;
    };
    report(RelationFamily::parafermion, true);
    report(RelationFamily::paraboson, true);
    report(RelationFamily::relative_paraboson, true);
    report(RelationFamily::relative_parafermion, rel_pf_must_pass);

    std::cout << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
    return ok ? kExitOk : kExitVerificationFailure;
}

// ---- patterns --------------------------------------------------------------

std::optional<TopRow> parse_top(const std::string &text) {
    // "a,b;c,d" with the negative side first
    TopRow t;
    const auto semi = text.find(';');
    if (semi == std::string::npos)
        return std::nullopt;
    auto parse_side = [](const std::string &side, std::vector<int> &out) {
        std::stringstream ss(side);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                out.push_back(std::stoi(item));
    };
    try {
        parse_side(text.substr(0, semi), t.neg);
        parse_side(text.substr(semi + 1), t.pos);
    } catch (const std::exception &) {
        return std::nullopt;
    }
    if (t.neg.size() != t.pos.size() || t.neg.empty())
        return std::nullopt;
    t.n = static_cast<int>(t.neg.size());
    return t;
}

int run_patterns_top(const TopRow &top, long p, const std::string &format,
                     const std::string &out_path) {
    GzVerdict vt = validate_top(top);
    if (!vt.ok) {
        std::cerr << "patterns: invalid top row (" << vt.condition << ": " << vt.detail
                  << ")\n";
        return kExitUsage;
    }
    auto pats = enumerate_patterns(top);
    bool round_trips_ok = true;
    json arr = json::array();
    std::map<std::string, long> weight_counts;
    std::ostringstream csv;
    csv << "index,stability,weight,rows\n";
    for (std::size_t i = 0; i < pats.size(); ++i) {
        const GZPattern &pat = pats[i];
        auto stab = stability_index(pat);
        const std::string ws = pattern_weight(pat, Rational(p)).str(pat.n);
        ++weight_counts[ws];
        json entry{{"rows", to_json(pat)}, {"weight", ws}};
        if (stab) {
            entry["stability"] = *stab;
            const bool rt = phi_from_infinite(phi_to_infinite(pat), 2 * pat.n) == pat;
            round_trips_ok = round_trips_ok && rt;
        } else {
            entry["stability"] = nullptr;
        }
        arr.push_back(entry);
        csv << i << "," << (stab ? std::to_string(*stab) : "-") << ",\"" << ws << "\",\""
            << to_json(pat).dump() << "\"\n";
    }
    if (format == "csv") {
        write_output(csv.str(), out_path);
    } else {
        json counts = json::array();
        for (const auto &[ws, c] : weight_counts)
            counts.push_back(json{{"weight", ws}, {"count", c}});
        json doc{{"schema", 1},
                 {"top", top.str()},
                 {"p", std::to_string(p)},
                 {"count", pats.size()},
                 {"countsPerWeight", counts},
                 {"phiRoundTrip", round_trips_ok},
                 {"patterns", arr}};
        write_output(doc.dump(2), out_path);
    }
    return round_trips_ok ? kExitOk : kExitVerificationFailure;
}

int run_patterns_counts(int n, long p, int level, const std::string &weight_filter,
                        const std::string &format, const std::string &out_path) {
    if (n < 1 || p < 1 || level < 0) {
        std::cerr << "patterns: need n >= 1, integer p >= 1, level >= 0\n";
        return kExitUsage;
    }
    auto with = count_basis(n, p, level, Cutoff::apply);
    auto without = count_basis(n, p, level, Cutoff::ignore);
    json counts = json::array();
    std::ostringstream csv;
    csv << "weight,count,countNoCutoff\n";
    for (const auto &[w, c] : without) {
        const std::string ws = w.str(n);
        if (!weight_filter.empty() && ws != weight_filter)
            continue;
        const long cut = with.count(w) ? with.at(w) : 0;
        counts.push_back(json{{"weight", ws}, {"count", cut}, {"countNoCutoff", c}});
        csv << "\"" << ws << "\"," << cut << "," << c << "\n";
    }
    if (format == "csv") {
        write_output(csv.str(), out_path);
    } else {
        json doc{{"schema", 1}, {"n", n},      {"p", std::to_string(p)},
                 {"L", level},  {"counts", counts}};
        write_output(doc.dump(2), out_path);
    }
    return kExitOk;
}

// ---- fock ------------------------------------------------------------------

int run_fock(int n, const Rational &p, int max_level, bool certify,
             const std::string &weight_filter, const std::string &format,
             const std::string &out_path) {
    if (n < 1 || max_level < 0 || p.sign() <= 0) {
        std::cerr << "fock: need n >= 1, maxLevel >= 0, p > 0\n";
        return kExitUsage;
    }
    if (certify && !p.is_integer()) {
        std::cerr << "fock: certification mode requires a positive integer p "
                     "(use --no-certify for exploratory runs)\n";
        return kExitUsage;
    }
    ModuleSnapshot snap = build_snapshot(n, p, max_level);

    json levels = json::array();
    std::ostringstream csv;
    csv << "L,weight,words,rank,radicalDim\n";
    for (int level = 0; level <= max_level; ++level) {
        json blocks = json::array();
        for (const LevelBlock &b : snap.levels[level]) {
            const std::string ws = b.weight.str(n);
            if (!weight_filter.empty() && ws != weight_filter)
                continue;
            blocks.push_back(block_summary(b));
            csv << level << ",\"" << ws << "\"," << b.words.size() << "," << b.rank << ","
                << (b.words.size() - b.rank) << "\n";
        }
        levels.push_back(json{{"L", level}, {"blocks", blocks}});
    }

    json doc{{"schema", 1}, {"n", n}, {"p", p.str()}, {"levels", levels}};
    bool ok = true;
    if (certify) {
        CheckReport lw = lowest_weight_check(n, p);
        CheckReport psd = unitarity_check(snap);
        CheckReport gz = gz_equivalence_check(n, p.numerator().get_si(), max_level);
        doc["lowestWeight"] = lw.ok;
        doc["psd"] = psd.ok;
        doc["gzEquivalent"] = gz.ok;
        if (!lw.ok)
            doc["lowestWeightDetail"] = lw.detail;
        if (!psd.ok)
            doc["psdDetail"] = psd.detail;
        if (!gz.ok)
            doc["gzDetail"] = gz.detail;
        ok = lw.ok && psd.ok && gz.ok;
    }
    write_output(format == "csv" ? csv.str() : doc.dump(2), out_path);
    return ok ? kExitOk : kExitVerificationFailure;
}

// ---- infinite --------------------------------------------------------------

int run_infinite(int mode, const std::string &sign_text, const std::string &word_text,
                 const Rational &p, const std::string &out_path) {
    if (mode == 0 || (sign_text != "+" && sign_text != "-")) {
        std::cerr << "infinite: need a nonzero --mode and --sign +|-\n";
        return kExitUsage;
    }
    const Sign sign = sign_text == "+" ? Sign::plus : Sign::minus;
    CreationWord w;
    std::stringstream ss(word_text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            w.push_back(std::stoi(item));
    const FockVector v = FockVector::single(w);

    const int n0 = minimal_truncation(mode, v);
    const std::vector<int> truncations = {n0, n0 + 1, n0 + 3};
    std::vector<FockVector> results;
    for (int rank : truncations)
        results.push_back(infinite_action(mode, sign, v, p, rank));
    const bool independent = results[0] == results[1] && results[1] == results[2];

    json doc{{"schema", 1},
             {"mode", mode},
             {"sign", sign_text},
             {"word", to_json(w)},
             {"p", p.str()},
             {"truncations", truncations},
             {"result", to_json(results[0])},
             {"truncationIndependent", independent}};
    write_output(doc.dump(2), out_path);
    return independent ? kExitOk : kExitVerificationFailure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact-arithmetic toolkit for the Z2xZ2-graded Lie superalgebra "
                 "pso(2n+1|2n) and its parastatistics Fock spaces"};
    app.require_subcommand(1);

    int n = 1;
    int max_rank = 4;
    int level = 4;
    std::string p_text = "1";
    std::string format = "json";
    std::string out_path;
    std::string weight_filter;
    std::string top_text;
    std::string word_text;
    std::string sign_text = "+";
    int mode = 1;
    unsigned long seed = 12345;
    bool rel_pf_must_pass = false;
    bool no_certify = false;

    auto *algebra = app.add_subcommand("algebra", "dump generators and structure constants");
    algebra->add_option("-n,--rank", n, "rank")->required();
    algebra->add_option("--max-rank", max_rank, "largest admissible rank");
    algebra->add_option("--out", out_path, "output path");

    auto *verify = app.add_subcommand("verify", "axioms and triple relation families");
    verify->add_option("-n,--rank", n, "rank")->required();
    verify->add_option("--seed", seed, "seed for random homogeneous triples");
    verify->add_flag("--rel-pf-must-pass", rel_pf_must_pass,
                     "require the relative-parafermion family to pass (negative control)");

    auto *patterns = app.add_subcommand("patterns", "GZ pattern enumeration and counts");
    patterns->add_option("--top", top_text, "top row \"a,..;b,..\" (negative side first)");
    patterns->add_option("-n,--rank", n, "rank");
    patterns->add_option("-p,--order", p_text, "order (positive integer)");
    patterns->add_option("-L,--level", level, "level (top-row total)");
    patterns->add_option("--weight", weight_filter, "only this weight (format \"a,..;b,..\")");
    patterns->add_option("--format", format, "json|csv");
    patterns->add_option("--out", out_path, "output path");

    auto *fock = app.add_subcommand("fock", "Fock space dimensions, radicals, verdicts");
    fock->add_option("-n,--rank", n, "rank")->required();
    fock->add_option("-p,--order", p_text, "order (rational; integer in certification mode)");
    fock->add_option("-L,--level", level, "maximal level");
    fock->add_option("--weight", weight_filter, "only this weight");
    fock->add_option("--format", format, "json|csv");
    fock->add_option("--out", out_path, "output path");
    fock->add_flag("--no-certify", no_certify, "skip verdicts; allows rational p");

    auto *infinite = app.add_subcommand("infinite", "truncation-independent action");
    infinite->add_option("--mode", mode, "mode index (nonzero integer)")->required();
    infinite->add_option("--sign", sign_text, "+ or -")->required();
    infinite->add_option("--word", word_text, "comma-separated word (empty = vacuum)");
    infinite->add_option("-p,--order", p_text, "order");
    infinite->add_option("--out", out_path, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            app.exit(e);
            return kExitOk;
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (format != "json" && format != "csv") {
            std::cerr << "unknown format: " << format << "\n";
            return kExitUsage;
        }
        Rational p(1);
        try {
            p = Rational::parse(p_text);
        } catch (const std::exception &) {
            std::cerr << "cannot parse order p: " << p_text << "\n";
            return kExitUsage;
        }

        if (algebra->parsed())
            return run_algebra(n, max_rank, out_path);
        if (verify->parsed())
            return run_verify(n, seed, rel_pf_must_pass);
        if (patterns->parsed()) {
            if (!p.is_integer() || p.sign() <= 0) {
                std::cerr << "patterns: integer p >= 1 required\n";
                return kExitUsage;
            }
            if (!top_text.empty()) {
                auto top = parse_top(top_text);
                if (!top) {
                    std::cerr << "patterns: cannot parse top row\n";
                    return kExitUsage;
                }
                return run_patterns_top(*top, p.numerator().get_si(), format, out_path);
            }
            return run_patterns_counts(n, p.numerator().get_si(), level, weight_filter,
                                       format, out_path);
        }
        if (fock->parsed())
            return run_fock(n, p, level, !no_certify, weight_filter, format, out_path);
        if (infinite->parsed())
            return run_infinite(mode, sign_text, word_text, p, out_path);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
