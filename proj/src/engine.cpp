#include "parastat/engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace parastat {

Grade word_grade(const CreationWord &w) {
    Grade g(0, 0);
    for (int i : w)
        g = g + mode_grade(i);
    return g;
}

FockVector FockVector::single(CreationWord w, Rational c) {
    FockVector v;
    v.add(w, c);
    return v;
}

void FockVector::add(const CreationWord &w, const Rational &c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

Rational FockVector::coeff(const CreationWord &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

FockVector FockVector::operator+(const FockVector &o) const {
    FockVector out = *this;
    out += o;
    return out;
}

FockVector &FockVector::operator+=(const FockVector &o) {
    for (const auto &[w, c] : o.terms_)
        add(w, c);
    return *this;
}

FockVector FockVector::operator-(const FockVector &o) const {
    FockVector out = *this;
    for (const auto &[w, c] : o.terms_)
        out.add(w, -c);
    return out;
}

FockVector FockVector::scaled(const Rational &c) const {
    FockVector out;
    if (c.is_zero())
        return out;
    for (const auto &[w, x] : terms_)
        out.terms_.emplace(w, x * c);
    return out;
}

namespace {

// Reads a combination of single generators off a matrix supported on row 0
// and column 0. Throws if the matrix is not such a combination.
std::vector<GeneratorTerm> decompose_in_generators(const AlgebraElement &y) {
    const QSqrt2 s2 = QSqrt2::sqrt2();
    std::map<std::pair<int, int>, Rational> coeffs; // (mode, sign as +1/-1)
    // Column-0 entries determine the candidate coefficients...
    for (const auto &[pos, val] : y.entries()) {
        const auto [r, c] = pos;
        if (c != 0)
            continue;
        int mode;
        Sign sign;
        QSqrt2 unit; // generator's own (r,0) entry
        if (r < 0) {
            if (r % 2 == 0) {
                mode = r / 2;
                sign = Sign::plus;
                unit = s2;
            } else {
                mode = (r - 1) / 2;
                sign = Sign::minus;
                unit = -s2;
            }
        } else {
            if (r % 2 == 1) {
                mode = (r + 1) / 2;
                sign = Sign::plus;
                unit = s2;
            } else {
                mode = r / 2;
                sign = Sign::minus;
                unit = -s2;
            }
        }
        coeffs[{mode, sign_value(sign)}] = (val / unit).rational_part_checked();
    }
    // ...and the reconstruction must reproduce y exactly (this also pins the
    // row-0 entries and rejects anything outside the generator span).
    AlgebraElement rebuilt;
    std::vector<GeneratorTerm> terms;
    for (const auto &[key, c] : coeffs) {
        if (c.is_zero())
            continue;
        const Sign s = key.second > 0 ? Sign::plus : Sign::minus;
        rebuilt = rebuilt + generator(key.first, s).scaled(QSqrt2(c, Rational(0)));
        terms.push_back({key.first, s, c});
    }
    if (rebuilt != y)
        throw std::logic_error("decompose_in_generators: not a generator combination");
    return terms;
}

} // namespace

std::vector<GeneratorTerm> triple_constants(int j, Sign xi, int k, Sign eta, int l, Sign eps) {
    return triple_constants(j, xi, k, eta, l, eps,
                            std::max({std::abs(j), std::abs(k), std::abs(l)}));
}

std::vector<GeneratorTerm> triple_constants(int j, Sign xi, int k, Sign eta, int l, Sign eps,
                                            int ambient_rank) {
    if (j == 0 || k == 0 || l == 0)
        throw std::invalid_argument("triple_constants: modes must be nonzero");
    if (ambient_rank < std::max({std::abs(j), std::abs(k), std::abs(l)}))
        throw std::invalid_argument("triple_constants: ambient rank too small");

    // Memoized; lock-protected so gram entries may be computed from several
    // threads without changing results.
    using Key = std::tuple<int, int, int, int, int, int>;
    static std::map<Key, std::vector<GeneratorTerm>> cache;
    static std::mutex cache_mutex;
    const Key key{j, sign_value(xi), k, sign_value(eta), l, sign_value(eps)};
    std::vector<GeneratorTerm> terms;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto hit = cache.find(key);
        if (hit == cache.end()) {
            AlgebraElement y = graded_bracket(
                graded_bracket(generator(j, xi), generator(k, eta)), generator(l, eps));
            hit = cache.emplace(key, decompose_in_generators(y)).first;
        }
        terms = hit->second;
    }
    for (const auto &t : terms)
        if (std::abs(t.mode) > ambient_rank)
            throw std::logic_error("triple_constants: mode outside ambient rank");
    return terms;
}

FockVector apply_creation(int i, const FockVector &v) {
    if (i == 0)
        throw std::invalid_argument("apply_creation: mode 0 is not allowed");
    FockVector out;
    for (const auto &[w, c] : v.terms()) {
        CreationWord nw;
        nw.reserve(w.size() + 1);
        nw.push_back(i);
        nw.insert(nw.end(), w.begin(), w.end());
        out.add(nw, c);
    }
    return out;
}

FockVector apply_annihilation(int l, const FockVector &v, const Rational &p) {
    return apply_annihilation(l, v, p, 0);
}

FockVector pair_apply(int j, Sign xi, int k, Sign eta, const FockVector &v, const Rational &p) {
    return pair_apply(j, xi, k, eta, v, p, 0);
}

// ambient_rank == 0 means "minimal rank per call"; a positive value is passed
// through to triple_constants so truncation independence can be exercised.
FockVector apply_annihilation(int l, const FockVector &v, const Rational &p, int ambient_rank) {
    if (l == 0)
        throw std::invalid_argument("apply_annihilation: mode 0 is not allowed");
    FockVector out;
    for (const auto &[w, c] : v.terms()) {
        if (w.empty())
            continue; // c_l^- |0> = 0
        const int k = w.front();
        const FockVector rest = FockVector::single(CreationWord(w.begin() + 1, w.end()));
        // c_l^- c_k^+ = [[c_l^-, c_k^+]] + (-1)^(a.b) c_k^+ c_l^-
        out += pair_apply(l, Sign::minus, k, Sign::plus, rest, p, ambient_rank).scaled(c);
        FockVector deeper = apply_annihilation(l, rest, p, ambient_rank);
        const int sgn = mode_grade(l).bracket_sign(mode_grade(k));
        out += apply_creation(k, deeper).scaled(c * Rational(sgn));
    }
    return out;
}

FockVector pair_apply(int j, Sign xi, int k, Sign eta, const FockVector &v, const Rational &p,
                      int ambient_rank) {
    if (j == 0 || k == 0)
        throw std::invalid_argument("pair_apply: modes must be nonzero");
    const Grade pair_grade = mode_grade(j) + mode_grade(k);
    FockVector out;
    for (const auto &[w, c] : v.terms()) {
        if (w.empty()) {
            // Vacuum values of [[c_j^xi, c_k^eta]] |0>.
            if (xi == Sign::minus && eta == Sign::plus) {
                if (j == k)
                    out.add({}, c * p);
            } else if (xi == Sign::plus && eta == Sign::minus) {
                if (j == k) {
                    const int sgn = mode_grade(j).bracket_sign(mode_grade(k));
                    out.add({}, -Rational(sgn) * c * p);
                }
            } else if (xi == Sign::plus && eta == Sign::plus) {
                const int sgn = mode_grade(j).bracket_sign(mode_grade(k));
                out.add({j, k}, c);
                out.add({k, j}, -Rational(sgn) * c);
            }
            // minus,minus: both annihilate the vacuum.
            continue;
        }
        const int m = w.front();
        const FockVector rest = FockVector::single(CreationWord(w.begin() + 1, w.end()));
        // [[P, c_m^+]] expanded into single generators...
        int rank = ambient_rank;
        if (rank > 0 && std::abs(m) > rank)
            throw std::invalid_argument("pair_apply: word mode outside ambient rank");
        auto terms = rank > 0 ? triple_constants(j, xi, k, eta, m, Sign::plus, rank)
                              : triple_constants(j, xi, k, eta, m, Sign::plus);
        for (const auto &t : terms) {
            if (t.sign == Sign::plus)
                out += apply_creation(t.mode, rest).scaled(c * t.coeff);
            else
                out += apply_annihilation(t.mode, rest, p, ambient_rank).scaled(c * t.coeff);
        }
        // ...plus the commuted term (-1)^(gP.gm) c_m^+ P rest.
        const int sgn = pair_grade.bracket_sign(mode_grade(m));
        FockVector commuted = pair_apply(j, xi, k, eta, rest, p, ambient_rank);
        out += apply_creation(m, commuted).scaled(c * Rational(sgn));
    }
    return out;
}

Rational inner_product(const FockVector &w1, const FockVector &w2, const Rational &p) {
    Rational out(0);
    for (const auto &[u, cu] : w1.terms()) {
        FockVector cur = w2;
        // <u| = <0| c_{iL}^- ... c_{i1}^-, so the first letter of u is the
        // first annihilator to reach w2.
        for (int mode : u) {
            if (cur.is_zero())
                break;
            cur = apply_annihilation(mode, cur, p);
        }
        out += cu * cur.vacuum_coeff();
    }
    return out;
}

ExactMatrix gram_matrix(const std::vector<CreationWord> &words, const Rational &p) {
    ExactMatrix g(words.size(), words.size());
    for (std::size_t r = 0; r < words.size(); ++r)
        for (std::size_t s = r; s < words.size(); ++s) {
            Rational val =
                inner_product(FockVector::single(words[r]), FockVector::single(words[s]), p);
            g.at(r, s) = val;
            g.at(s, r) = val;
        }
    return g;
}

} // namespace parastat
