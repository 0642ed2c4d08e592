#pragma once

#include "parastat/engine.hpp"
#include "parastat/exact_matrix.hpp"
#include "parastat/gz.hpp"
#include "parastat/word.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace parastat {

// One weight block of a level of the induced module: its words, their Gram
// matrix, the Gram rank (= dimension of the block in the unitary quotient)
// and a basis of the Gram kernel.
struct LevelBlock {
    int n = 0;
    Rational p;
    int level = 0;
    WeightVector weight;
    std::vector<CreationWord> words; // lexicographic
    ExactMatrix gram;
    std::size_t rank = 0;
    std::vector<std::vector<Rational>> radical; // kernel basis of gram
    // Greedy maximal subset of word indices whose Gram principal submatrix
    // has full rank; these words coordinatize the quotient block.
    std::vector<std::size_t> representatives;
};

struct ModuleSnapshot {
    int n = 0;
    Rational p;
    int max_level = 0;
    std::vector<std::vector<LevelBlock>> levels; // levels[L], blocks sorted by weight

    const LevelBlock *find_block(int level, const WeightVector &w) const;
    std::size_t level_dim(int level) const; // sum of block ranks
};

// Vacuum weight plus one eps per letter. Modes must lie in [-n,n]*.
WeightVector word_weight(const CreationWord &w, int n, const Rational &p);

// All words of length L over [-n,n]* grouped by weight, with Gram data.
std::vector<LevelBlock> build_level(int n, const Rational &p, int level);

ModuleSnapshot build_snapshot(int n, const Rational &p, int max_level);

// (level, weight) -> quotient dimension.
std::map<std::pair<int, WeightVector>, std::size_t>
dimension_table(const ModuleSnapshot &snap);
std::map<std::pair<int, WeightVector>, std::size_t>
dimension_table(int n, const Rational &p, int max_level);

// Matrix of c_i^sign from the level-L quotient coordinates to level L+1
// (creation) or L-1 (annihilation), over the concatenated representative
// coordinates of each level (blocks in weight order).
ExactMatrix generator_action(int i, Sign sign, const ModuleSnapshot &snap, int level);

// Block-diagonal Gram matrix of the representative words at a level, in the
// same coordinate order as generator_action.
ExactMatrix level_rep_gram(const ModuleSnapshot &snap, int level);

struct CheckReport {
    bool ok = true;
    std::string detail;
};

// Vacuum structure at order p: <0|0> = 1, c_j^- |0> = 0, pair eigenvalues
// p d_jk, Cartan eigenvalues -p/2 / +p/2.
CheckReport lowest_weight_check(int n, const Rational &p);

// (a) every quotient basis vector is a creation word by construction, and
// (b) the joint kernel of all annihilation maps at levels 1..max_level
// vanishes in the quotient.
CheckReport irreducibility_probe(int n, const Rational &p, int max_level);

// Gram positive semidefiniteness over all blocks of the snapshot.
CheckReport unitarity_check(const ModuleSnapshot &snap);

// Quotient dimensions against the GZ pattern count, per level and weight.
CheckReport gz_equivalence_check(int n, long p, int max_level);

// Action of c_i^sign on a finite-support vector of the infinite-rank module,
// computed through a finite truncation. The default truncation rank is
// max(|i|, largest mode in v) + 1; any truncation_rank at least that value is
// admissible and the result does not depend on the choice.
FockVector infinite_action(int i, Sign sign, const FockVector &v, const Rational &p);
FockVector infinite_action(int i, Sign sign, const FockVector &v, const Rational &p,
                           int truncation_rank);

// Minimal admissible truncation rank for infinite_action.
int minimal_truncation(int i, const FockVector &v);

} // namespace parastat
