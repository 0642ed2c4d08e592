#pragma once

#include "parastat/algebra_element.hpp"
#include "parastat/exact_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace parastat {

// Incremental Gaussian elimination over Q; rows keep their pivot positions.
// Used for span/closure computations on flattened matrices.
class RationalEchelon {
  public:
    // Reduces v against the current rows; if nonzero remains, inserts it and
    // returns true.
    bool insert(std::vector<Rational> v);
    std::size_t dim() const { return rows_.size(); }

  private:
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

// Flattens x into a Q-vector of length 2*(4n+1)^2 (a- and b-components of
// each entry), for rank computations over Q(sqrt2) viewed as a 2-dim Q-space
// per entry.
std::vector<Rational> flatten(const AlgebraElement &x, int n);

enum class RelationFamily {
    parafermion,         // [[f,f],f] family
    paraboson,           // [{b,b},b] family
    relative_paraboson,  // mixed relations satisfied by these generators
    relative_parafermion // mixed relations of the osp variant; expected to fail
};

std::string family_name(RelationFamily f);

struct RelationInstance {
    int sub;           // sub-identity within the family (0-based)
    int j, k, l;       // modes (signed)
    Sign xi, eta, eps; // operator signs
};

struct RelationReport {
    RelationFamily family;
    long total = 0;
    long passed = 0;
    long failed = 0;
    std::optional<RelationInstance> first_counterexample;
    bool all_passed() const { return failed == 0; }
};

// Evaluates both sides of every relation instance of the family at rank n on
// the matrix realization. The three paraboson-relative families use the
// graded bracket (which coincides with the literal bracket types of the
// identities); the relative-parafermion family is evaluated with its literal
// plain commutators/anticommutators and is expected to fail for these
// generators.
RelationReport relation_check(RelationFamily family, int n);

struct AxiomReport {
    long triples = 0;
    long failures = 0;
    std::string first_failure;
    bool all_passed() const { return failures == 0; }
};

// Z2xZ2 axioms (bracket grading, graded antisymmetry, graded Jacobi) on
// homogeneous elements at rank n: exhaustive over all basis triples when
// random_triples == 0, else over that many seeded random homogeneous triples.
AxiomReport axiom_check(int n, long random_triples, unsigned long seed);

// Canonical homogeneous basis of the algebra at rank n: generators plus
// iterated brackets, kept in discovery order, linearly independent.
std::vector<AlgebraElement> algebra_basis(int n);

// Dimension of the span of generators under iterated brackets (must come out
// as 4n(2n+1)).
std::size_t bracket_closure_dim(int n);

// Dimension of the space of matrices at rank n satisfying the block
// constraints; independent route to the same number.
std::size_t constrained_space_dim(int n);

// Coordinates of x in the given (independent) list, or nullopt if x lies
// outside the span. Coefficients live in Q(sqrt2).
std::optional<std::vector<QSqrt2>> expand_in_basis(const std::vector<AlgebraElement> &basis,
                                                   const AlgebraElement &x, int n);

} // namespace parastat
