#pragma once

#include "parastat/grade.hpp"
#include "parastat/rational.hpp"

#include <map>
#include <vector>

namespace parastat {

// A creation monomial applied to the vacuum: (i1,...,iL) stands for
// c_{i1}^+ c_{i2}^+ ... c_{iL}^+ |0>. Empty word = |0>. Modes are nonzero
// integers; negative modes are parafermionic, positive ones parabosonic.
using CreationWord = std::vector<int>;

// Componentwise-mod-2 sum of the per-mode grades.
Grade word_grade(const CreationWord &w);

// Finitely-supported rational combination of creation words.
class FockVector {
  public:
    FockVector() = default;

    static FockVector vacuum() { return single({}); }
    static FockVector single(CreationWord w, Rational c = Rational(1));

    const std::map<CreationWord, Rational> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const CreationWord &w, const Rational &c);
    Rational coeff(const CreationWord &w) const;
    Rational vacuum_coeff() const { return coeff({}); }

    FockVector operator+(const FockVector &o) const;
    FockVector operator-(const FockVector &o) const;
    FockVector scaled(const Rational &c) const;
    FockVector &operator+=(const FockVector &o);

    bool operator==(const FockVector &o) const { return terms_ == o.terms_; }
    bool operator!=(const FockVector &o) const { return !(*this == o); }

  private:
    std::map<CreationWord, Rational> terms_; // zero coefficients never stored
};

} // namespace parastat
