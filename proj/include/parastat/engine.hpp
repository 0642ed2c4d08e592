#pragma once

#include "parastat/algebra_element.hpp"
#include "parastat/exact_matrix.hpp"
#include "parastat/word.hpp"

#include <vector>

namespace parastat {

// One term of a bracket expansion in single generators.
struct GeneratorTerm {
    int mode;
    Sign sign;
    Rational coeff;
};

// Expansion of [[[[c_j^xi, c_k^eta]], c_l^eps]] as a rational combination of
// single generators, computed from the matrix realization. ambient_rank must
// be >= max(|j|,|k|,|l|) and does not affect the result (the support of the
// bracket determines it); it bounds the admissible modes and is asserted.
std::vector<GeneratorTerm> triple_constants(int j, Sign xi, int k, Sign eta, int l, Sign eps);
std::vector<GeneratorTerm> triple_constants(int j, Sign xi, int k, Sign eta, int l, Sign eps,
                                            int ambient_rank);

// Left multiplication by c_i^+: prepends i to every word. Linear.
FockVector apply_creation(int i, const FockVector &v);

// Applies c_l^- by the rewriting c_l^- c_k^+ = [[c_l^-, c_k^+]] +
// (-1)^(a.b) c_k^+ c_l^-, recursing into the word; c_l^- |0> = 0.
FockVector apply_annihilation(int l, const FockVector &v, const Rational &p);
FockVector apply_annihilation(int l, const FockVector &v, const Rational &p, int ambient_rank);

// Applies the pair element [[c_j^xi, c_k^eta]] by commuting it through
// leading creation operators via triple_constants; on the vacuum, mixed-sign
// pairs give the order-p eigenvalue, two annihilators give 0, two creators
// concatenate.
FockVector pair_apply(int j, Sign xi, int k, Sign eta, const FockVector &v, const Rational &p);
FockVector pair_apply(int j, Sign xi, int k, Sign eta, const FockVector &v, const Rational &p,
                      int ambient_rank);

// Contravariant form <w1|w2> fixed by <0|0> = 1 and (c^+)^dagger = c^-:
// the words of w1 are daggered letter by letter into w2. Bilinear over Q.
Rational inner_product(const FockVector &w1, const FockVector &w2, const Rational &p);

// Symmetric Gram matrix G[r][s] = <words[r] | words[s]>.
ExactMatrix gram_matrix(const std::vector<CreationWord> &words, const Rational &p);

} // namespace parastat
