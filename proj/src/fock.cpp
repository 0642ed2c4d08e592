#include "parastat/fock.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace parastat {

const LevelBlock *ModuleSnapshot::find_block(int level, const WeightVector &w) const {
    if (level < 0 || level > max_level)
        return nullptr;
    for (const LevelBlock &b : levels[level])
        if (b.weight == w)
            return &b;
    return nullptr;
}

std::size_t ModuleSnapshot::level_dim(int level) const {
    std::size_t d = 0;
    for (const LevelBlock &b : levels[level])
        d += b.rank;
    return d;
}

WeightVector word_weight(const CreationWord &w, int n, const Rational &p) {
    WeightVector out = vacuum_weight(n, p);
    for (int mode : w) {
        if (mode == 0 || std::abs(mode) > n)
            throw std::invalid_argument("word_weight: mode outside [-n,n]*");
        out.set(mode, out.get(mode) + Rational(1));
    }
    return out;
}

namespace {

std::vector<std::size_t> pick_representatives(const ExactMatrix &gram, std::size_t rank) {
    std::vector<std::size_t> reps;
    for (std::size_t w = 0; w < gram.rows() && reps.size() < rank; ++w) {
        std::vector<std::size_t> cand = reps;
        cand.push_back(w);
        if (exact_rank(gram.submatrix(cand, cand)) == cand.size())
            reps.push_back(w);
    }
    return reps;
}

} // namespace

std::vector<LevelBlock> build_level(int n, const Rational &p, int level) {
    if (n < 1 || level < 0)
        throw std::invalid_argument("build_level: need n >= 1, level >= 0");
    std::vector<int> modes;
    for (int i = -n; i <= n; ++i)
        if (i != 0)
            modes.push_back(i);

    // Words in lexicographic order over the mode alphabet.
    std::map<WeightVector, std::vector<CreationWord>> by_weight;
    CreationWord cur(level);
    std::function<void(int)> rec = [&](int slot) {
        if (slot == level) {
            by_weight[word_weight(cur, n, p)].push_back(cur);
            return;
        }
        for (int m : modes) {
            cur[slot] = m;
            rec(slot + 1);
        }
    };
    rec(0);

    std::vector<LevelBlock> out;
    for (auto &[weight, words] : by_weight) {
        LevelBlock b;
        b.n = n;
        b.p = p;
        b.level = level;
        b.weight = weight;
        b.words = std::move(words);
        b.gram = gram_matrix(b.words, p);
        b.rank = exact_rank(b.gram);
        b.radical = exact_kernel(b.gram);
        b.representatives = pick_representatives(b.gram, b.rank);
        out.push_back(std::move(b));
    }
    return out;
}

ModuleSnapshot build_snapshot(int n, const Rational &p, int max_level) {
    ModuleSnapshot snap;
    snap.n = n;
    snap.p = p;
    snap.max_level = max_level;
    snap.levels.resize(max_level + 1);
    for (int level = 0; level <= max_level; ++level)
        snap.levels[level] = build_level(n, p, level);
    return snap;
}

std::map<std::pair<int, WeightVector>, std::size_t>
dimension_table(const ModuleSnapshot &snap) {
    std::map<std::pair<int, WeightVector>, std::size_t> out;
    for (int level = 0; level <= snap.max_level; ++level)
        for (const LevelBlock &b : snap.levels[level])
            out[{level, b.weight}] = b.rank;
    return out;
}

std::map<std::pair<int, WeightVector>, std::size_t>
dimension_table(int n, const Rational &p, int max_level) {
    return dimension_table(build_snapshot(n, p, max_level));
}

namespace {

// Offset of each block's representative coordinates in the concatenated
// level coordinate vector.
std::vector<std::size_t> block_offsets(const std::vector<LevelBlock> &blocks) {
    std::vector<std::size_t> off(blocks.size() + 1, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        off[i + 1] = off[i] + blocks[i].representatives.size();
    return off;
}

// Coordinates of a Fock vector (living at one level) in the representative
// coordinates of that level: solve G_rep x = <rep, v>.
void quotient_coordinates(const ModuleSnapshot &snap, int level, const FockVector &v,
                          ExactMatrix &target, std::size_t col) {
    if (v.is_zero())
        return;
    const auto &blocks = snap.levels[level];
    const auto off = block_offsets(blocks);
    // Group v by weight block; inner products only see the matching block.
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const LevelBlock &b = blocks[bi];
        FockVector part;
        for (const auto &[w, c] : v.terms())
            if (word_weight(w, snap.n, snap.p) == b.weight)
                part.add(w, c);
        if (part.is_zero())
            continue;
        const std::size_t k = b.representatives.size();
        if (k == 0)
            continue; // block is pure radical; image vanishes in the quotient
        ExactMatrix rhs(k, 1);
        for (std::size_t r = 0; r < k; ++r)
            rhs.at(r, 0) = inner_product(
                FockVector::single(b.words[b.representatives[r]]), part, snap.p);
        ExactMatrix grep = b.gram.submatrix(b.representatives, b.representatives);
        ExactMatrix x = solve_linear(grep, rhs);
        for (std::size_t r = 0; r < k; ++r)
            target.at(off[bi] + r, col) = x.at(r, 0);
    }
}

} // namespace

ExactMatrix level_rep_gram(const ModuleSnapshot &snap, int level) {
    const auto &blocks = snap.levels[level];
    const auto off = block_offsets(blocks);
    ExactMatrix g(off.back(), off.back());
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const LevelBlock &b = blocks[bi];
        ExactMatrix grep = b.gram.submatrix(b.representatives, b.representatives);
        for (std::size_t r = 0; r < grep.rows(); ++r)
            for (std::size_t c = 0; c < grep.cols(); ++c)
                g.at(off[bi] + r, off[bi] + c) = grep.at(r, c);
    }
    return g;
}

ExactMatrix generator_action(int i, Sign sign, const ModuleSnapshot &snap, int level) {
    if (level < 0 || level > snap.max_level)
        throw std::invalid_argument("generator_action: level out of range");
    const int target_level = level + (sign == Sign::plus ? 1 : -1);
    if (target_level < 0 || target_level > snap.max_level)
        throw std::invalid_argument("generator_action: target level out of range");

    const auto &src = snap.levels[level];
    const auto src_off = block_offsets(src);
    const auto tgt_off = block_offsets(snap.levels[target_level]);
    ExactMatrix a(tgt_off.back(), src_off.back());

    for (std::size_t bi = 0; bi < src.size(); ++bi) {
        const LevelBlock &b = src[bi];
        for (std::size_t r = 0; r < b.representatives.size(); ++r) {
            const FockVector u = FockVector::single(b.words[b.representatives[r]]);
            FockVector image = sign == Sign::plus
                                   ? apply_creation(i, u)
                                   : apply_annihilation(i, u, snap.p);
            quotient_coordinates(snap, target_level, image, a, src_off[bi] + r);
        }
    }
    return a;
}

CheckReport lowest_weight_check(int n, const Rational &p) {
    CheckReport rep;
    const FockVector vac = FockVector::vacuum();
    if (inner_product(vac, vac, p) != Rational(1))
        return {false, "<0|0> != 1"};
    for (int j = -n; j <= n; ++j) {
        if (j == 0)
            continue;
        if (!apply_annihilation(j, vac, p).is_zero())
            return {false, "c_" + std::to_string(j) + "^- |0> != 0"};
        for (int k = -n; k <= n; ++k) {
            if (k == 0)
                continue;
            FockVector pair = pair_apply(j, Sign::minus, k, Sign::plus, vac, p);
            FockVector expect =
                j == k ? vac.scaled(p) : FockVector();
            if (pair != expect)
                return {false, "pair eigenvalue mismatch at (" + std::to_string(j) + "," +
                                   std::to_string(k) + ")"};
        }
        // h_j |0> = -(p/2)|0> for j<0, +(p/2)|0> for j>0.
        FockVector h = pair_apply(j, Sign::plus, j, Sign::minus, vac, p)
                           .scaled(Rational(1, 2));
        const Rational expect = j < 0 ? -(p / Rational(2)) : p / Rational(2);
        if (h != vac.scaled(expect))
            return {false, "Cartan eigenvalue mismatch at h_" + std::to_string(j)};
    }
    return rep;
}

CheckReport irreducibility_probe(int n, const Rational &p, int max_level) {
    if (max_level < 1)
        throw std::invalid_argument("irreducibility_probe: max_level >= 1 required");
    ModuleSnapshot snap = build_snapshot(n, p, max_level);
    for (int level = 1; level <= max_level; ++level) {
        // (a) quotient basis vectors are creation words by construction.
        for (const LevelBlock &b : snap.levels[level])
            for (std::size_t r : b.representatives)
                if (static_cast<int>(b.words[r].size()) != level)
                    return {false, "representative is not a level-" +
                                       std::to_string(level) + " word"};
        // (b) joint kernel of all annihilation maps is zero.
        const std::size_t cols = [&] {
            std::size_t c = 0;
            for (const LevelBlock &b : snap.levels[level])
                c += b.representatives.size();
            return c;
        }();
        if (cols == 0)
            continue;
        std::vector<ExactMatrix> maps;
        std::size_t rows = 0;
        for (int i = -n; i <= n; ++i) {
            if (i == 0)
                continue;
            maps.push_back(generator_action(i, Sign::minus, snap, level));
            rows += maps.back().rows();
        }
        ExactMatrix stacked(rows, cols);
        std::size_t roff = 0;
        for (const ExactMatrix &m : maps) {
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < cols; ++c)
                    stacked.at(roff + r, c) = m.at(r, c);
            roff += m.rows();
        }
        if (!exact_kernel(stacked).empty())
            return {false, "joint annihilator kernel at level " + std::to_string(level)};
    }
    return {};
}

CheckReport unitarity_check(const ModuleSnapshot &snap) {
    for (int level = 0; level <= snap.max_level; ++level)
        for (const LevelBlock &b : snap.levels[level]) {
            PsdVerdict v = psd_certificate(b.gram);
            if (!v.positive_semidefinite) {
                std::ostringstream os;
                os << "gram not PSD at level " << level << ", weight "
                   << b.weight.str(snap.n) << " (witness value "
                   << v.witness_value.str() << ")";
                return {false, os.str()};
            }
        }
    return {};
}

CheckReport gz_equivalence_check(int n, long p, int max_level) {
    ModuleSnapshot snap = build_snapshot(n, Rational(p), max_level);
    for (int level = 0; level <= max_level; ++level) {
        std::map<WeightVector, long> counts = count_basis(n, p, level, Cutoff::apply);
        std::map<WeightVector, long> ranks;
        for (const LevelBlock &b : snap.levels[level])
            if (b.rank > 0)
                ranks[b.weight] = static_cast<long>(b.rank);
        // Drop zero counts so both maps list exactly the nonzero weights.
        for (auto it = counts.begin(); it != counts.end();)
            it = it->second == 0 ? counts.erase(it) : std::next(it);
        if (counts != ranks) {
            std::ostringstream os;
            os << "dimension mismatch at n=" << n << " p=" << p << " L=" << level;
            for (const auto &[w, c] : counts)
                if (ranks.find(w) == ranks.end() || ranks[w] != c) {
                    os << "; weight " << w.str(n) << ": patterns " << c << ", rank "
                       << (ranks.count(w) ? ranks[w] : 0);
                    break;
                }
            for (const auto &[w, c] : ranks)
                if (counts.find(w) == counts.end()) {
                    os << "; weight " << w.str(n) << ": patterns 0, rank " << c;
                    break;
                }
            return {false, os.str()};
        }
    }
    return {};
}

int minimal_truncation(int i, const FockVector &v) {
    int m = std::abs(i);
    for (const auto &[w, c] : v.terms())
        for (int mode : w)
            m = std::max(m, std::abs(mode));
    return m + 1;
}

FockVector infinite_action(int i, Sign sign, const FockVector &v, const Rational &p) {
    return infinite_action(i, sign, v, p, minimal_truncation(i, v));
}

FockVector infinite_action(int i, Sign sign, const FockVector &v, const Rational &p,
                           int truncation_rank) {
    if (truncation_rank < minimal_truncation(i, v))
        throw std::invalid_argument("infinite_action: truncation rank too small");
    return sign == Sign::plus ? apply_creation(i, v)
                              : apply_annihilation(i, v, p, truncation_rank);
}

} // namespace parastat
