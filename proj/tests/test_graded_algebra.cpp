#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parastat/algebra_element.hpp"
#include "parastat/relations.hpp"

#include <map>
#include <random>

using namespace parastat;

namespace {

AlgebraElement unit(int r, int c, long a = 1, long b = 0) {
    return AlgebraElement::unit(r, c, QSqrt2(Rational(a), Rational(b)));
}

AlgebraElement sqrt2_unit(int r, int c, long coeff = 1) {
    return AlgebraElement::unit(r, c, QSqrt2(Rational(0), Rational(coeff)));
}

} // namespace

TEST_CASE("position grades per the block grading") {
    CHECK(position_grade(-2, 0) == Grade(1, 1));
    CHECK(position_grade(0, 2) == Grade(1, 0));
    CHECK(position_grade(-1, 1) == Grade(0, 1));
    CHECK(position_grade(-3, -1) == Grade(0, 0));
    CHECK(position_grade(1, 2) == Grade(0, 0));
    CHECK(position_grade(2, -2) == Grade(0, 1));
    CHECK(position_grade(0, -4) == Grade(1, 1));
    CHECK(position_grade(3, 0) == Grade(1, 0));
    CHECK_THROWS(position_grade(0, 0));
}

TEST_CASE("generators match their matrix form") {
    AlgebraElement f1p = sqrt2_unit(-2, 0) - sqrt2_unit(0, -1);
    f1p.set_grade(Grade(1, 1));
    CHECK(generator(-1, Sign::plus) == f1p);
    CHECK(generator(-1, Sign::plus).grade() == Grade(1, 1));

    AlgebraElement b1m = sqrt2_unit(0, 1) - sqrt2_unit(2, 0);
    CHECK(generator(1, Sign::minus) == b1m);
    CHECK(generator(1, Sign::minus).grade() == Grade(1, 0));

    AlgebraElement b2p = sqrt2_unit(0, 4) + sqrt2_unit(3, 0);
    CHECK(generator(2, Sign::plus) == b2p);
    CHECK(generator(2, Sign::plus).min_rank() == 2);

    CHECK_THROWS(generator(0, Sign::plus));
}

TEST_CASE("block constraints") {
    for (int i = -2; i <= 2; ++i) {
        if (i == 0)
            continue;
        CHECK(block_constraints_check(generator(i, Sign::plus)).ok);
        CHECK(block_constraints_check(generator(i, Sign::minus)).ok);
    }
    CHECK(block_constraints_check(AlgebraElement()).ok);

    // e_{1,1} alone violates the J-type condition (a diagonal entry must be
    // paired with -e_{2,2}); e_{1,2} on its own satisfies it, being
    // {b1+,b1+}/4.
    ConstraintVerdict bad = block_constraints_check(unit(1, 1));
    CHECK_FALSE(bad.ok);
    CHECK(bad.condition == "J-type (pos,pos)");
    CHECK(block_constraints_check(unit(1, 2)).ok);
    AlgebraElement quarter_bb = graded_bracket(generator(1, Sign::plus), generator(1, Sign::plus))
                                    .scaled(QSqrt2(Rational(1, 4), Rational(0)));
    CHECK(quarter_bb == unit(1, 2));

    CHECK_FALSE(block_constraints_check(unit(0, 0)).ok);
}

TEST_CASE("graded bracket on generators") {
    // [[b1-, b1+]] = 2(e_{1,1} - e_{2,2}) (anticommutator of two grade-(1,0)s)
    AlgebraElement br = graded_bracket(generator(1, Sign::minus), generator(1, Sign::plus));
    AlgebraElement expect = unit(1, 1, 2) - unit(2, 2, 2);
    CHECK(br == expect);
    CHECK(br.grade() == Grade(0, 0));

    // [[h1, b1+]] = b1+
    CHECK(graded_bracket(cartan_h(1), generator(1, Sign::plus)) ==
          generator(1, Sign::plus));

    // [[x,x]] = 0 for even x
    AlgebraElement h = cartan_h(1);
    CHECK(graded_bracket(h, h).is_zero());

    AlgebraElement ungraded = unit(1, 1) + unit(0, 2);
    CHECK(!ungraded.grade());
    CHECK_THROWS(graded_bracket(ungraded, h));
}

TEST_CASE("cartan elements") {
    CHECK(cartan_h(1) == unit(1, 1) - unit(2, 2));
    CHECK(cartan_h(-1) == unit(-2, -2) - unit(-1, -1));
    CHECK(cartan_h(2) == unit(3, 3) - unit(4, 4));
    CHECK(cartan_h(-3) == unit(-6, -6) - unit(-5, -5));
    for (int i : {-2, -1, 1, 2}) {
        // trace zero: the two diagonal entries cancel
        AlgebraElement h = cartan_h(i);
        Rational tr(0);
        for (const auto &[pos, v] : h.entries())
            if (pos.first == pos.second)
                tr += v.rational_part_checked();
        CHECK(tr.is_zero());
    }
    CHECK_THROWS(cartan_h(0));
}

TEST_CASE("gl(n|n) embedding") {
    for (int i : {-2, -1, 1, 2})
        CHECK(gl_E(i, i) == cartan_h(i));
    CHECK(gl_E(1, -1).grade() == Grade(0, 1));
    CHECK(gl_E(1, 2).grade() == Grade(0, 0));
    CHECK(gl_E(-1, -2).grade() == Grade(0, 0));
    CHECK_THROWS(gl_E(0, 1));

    // [[E_jk, E_lm]] = d_kl E_jm - (-1)^(deg deg) d_jm E_lk, all indices at n=2.
    std::vector<int> idx = {-2, -1, 1, 2};
    for (int j : idx)
        for (int k : idx)
            for (int l : idx)
                for (int m : idx) {
                    AlgebraElement lhs = graded_bracket(gl_E(j, k), gl_E(l, m));
                    AlgebraElement rhs;
                    const int sgn = gl_E(j, k).grade()->bracket_sign(*gl_E(l, m).grade());
                    if (k == l)
                        rhs = rhs + gl_E(j, m);
                    if (j == m)
                        rhs = rhs - gl_E(l, k).scaled(QSqrt2(Rational(sgn), Rational(0)));
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("adjoint weights of root vectors") {
    WeightVector w = adjoint_weight(generator(1, Sign::plus));
    CHECK(w.get(1) == Rational(1));
    CHECK(w.get(-1) == Rational(0));

    WeightVector wm = adjoint_weight(generator(-1, Sign::minus));
    CHECK(wm.get(-1) == Rational(-1));

    WeightVector wh = adjoint_weight(cartan_h(1), 2);
    CHECK(wh.entries().empty());

    // b1+ + b2+ is not a joint eigenvector
    AlgebraElement x = generator(1, Sign::plus) + generator(2, Sign::plus);
    x.set_grade(Grade(1, 0));
    CHECK_THROWS(adjoint_weight(x, 2));
}

TEST_CASE("relation families") {
    for (int n : {1, 2}) {
        CHECK(relation_check(RelationFamily::parafermion, n).all_passed());
        CHECK(relation_check(RelationFamily::paraboson, n).all_passed());
        CHECK(relation_check(RelationFamily::relative_paraboson, n).all_passed());
        RelationReport pf = relation_check(RelationFamily::relative_parafermion, n);
        CHECK(pf.failed > 0);
        CHECK(pf.first_counterexample.has_value());
    }
    // instance counts: 8 n^3 for the single-identity families, 4x that for the
    // relative ones
    CHECK(relation_check(RelationFamily::paraboson, 2).total == 64);
    CHECK(relation_check(RelationFamily::relative_paraboson, 2).total == 256);
}

TEST_CASE("closure dimension and block-constraint count") {
    CHECK(bracket_closure_dim(1) == 12);
    CHECK(bracket_closure_dim(2) == 40);
    CHECK(constrained_space_dim(1) == 12);
    CHECK(constrained_space_dim(2) == 40);

    // generators alone span 4n
    for (int n : {1, 2, 3}) {
        RationalEchelon ech;
        std::size_t dim = 0;
        for (int i = -n; i <= n; ++i) {
            if (i == 0)
                continue;
            for (Sign s : {Sign::plus, Sign::minus})
                dim += ech.insert(flatten(generator(i, s), n)) ? 1 : 0;
        }
        CHECK(dim == static_cast<std::size_t>(4 * n));
    }
}

TEST_CASE("axioms hold exhaustively at n=1") {
    AxiomReport rep = axiom_check(1, 0, 0);
    CHECK(rep.triples == 12 * 12 * 12);
    CHECK(rep.all_passed());
}

TEST_CASE("axioms hold on random homogeneous triples at n=2") {
    AxiomReport rep = axiom_check(2, 100, 20240817);
    CHECK(rep.triples == 100);
    CHECK(rep.all_passed());
}

TEST_CASE("even-plus-(1,1) part closes at dimension 4n^2 + 2n") {
    for (int n : {1, 2}) {
        std::vector<AlgebraElement> basis = algebra_basis(n);
        std::vector<const AlgebraElement *> even_part;
        for (const auto &e : basis)
            if (*e.grade() == Grade(0, 0) || *e.grade() == Grade(1, 1))
                even_part.push_back(&e);

        RationalEchelon ech;
        std::size_t dim = 0;
        for (const auto *e : even_part)
            dim += ech.insert(flatten(*e, n)) ? 1 : 0;
        CHECK(dim == static_cast<std::size_t>(4 * n * n + 2 * n));

        // closed under bracket: no bracket escapes the span
        for (const auto *x : even_part)
            for (const auto *y : even_part) {
                RationalEchelon probe = ech;
                CHECK_FALSE(probe.insert(flatten(graded_bracket(*x, *y), n)));
            }
    }
}

TEST_CASE("generator brackets have rational entries") {
    for (int j : {-2, -1, 1, 2})
        for (int k : {-2, -1, 1, 2})
            for (Sign s1 : {Sign::plus, Sign::minus})
                for (Sign s2 : {Sign::plus, Sign::minus}) {
                    AlgebraElement br =
                        graded_bracket(generator(j, s1), generator(k, s2));
                    for (const auto &[pos, v] : br.entries())
                        CHECK(v.b.is_zero());
                }
}

TEST_CASE("brackets preserve the block constraints") {
    std::mt19937_64 rng(7);
    std::vector<AlgebraElement> basis = algebra_basis(2);
    std::map<Grade, std::vector<const AlgebraElement *>> by_grade;
    for (const auto &e : basis)
        by_grade[*e.grade()].push_back(&e);
    std::vector<Grade> grades;
    for (const auto &[g, v] : by_grade)
        grades.push_back(g);

    auto random_homog = [&]() {
        const Grade g = grades[rng() % grades.size()];
        AlgebraElement acc(g);
        for (const auto *e : by_grade[g]) {
            long c = static_cast<long>(rng() % 5) - 2;
            if (c != 0)
                acc = acc + e->scaled(QSqrt2(Rational(c), Rational(0)));
        }
        acc.set_grade(g);
        return acc;
    };
    for (int t = 0; t < 50; ++t) {
        AlgebraElement x = random_homog(), y = random_homog();
        REQUIRE(block_constraints_check(x).ok);
        REQUIRE(block_constraints_check(y).ok);
        CHECK(block_constraints_check(graded_bracket(x, y)).ok);
    }
}

TEST_CASE("expansion of brackets in the canonical basis") {
    std::vector<AlgebraElement> basis = algebra_basis(2);
    // [[c_j^+, c_k^-]] = 2 E_jk, recovered as coordinates
    for (int j : {-2, 1})
        for (int k : {-1, 2}) {
            AlgebraElement br =
                graded_bracket(generator(j, Sign::plus), generator(k, Sign::minus));
            auto coords = expand_in_basis(basis, br, 2);
            REQUIRE(coords.has_value());
            AlgebraElement rebuilt;
            for (std::size_t i = 0; i < basis.size(); ++i)
                rebuilt = rebuilt + basis[i].scaled((*coords)[i]);
            CHECK(rebuilt == br);
            CHECK(rebuilt == gl_E(j, k).scaled(QSqrt2(Rational(2), Rational(0))));
        }
    // something outside the algebra has no expansion
    CHECK_FALSE(expand_in_basis(basis, unit(1, 1), 2).has_value());
}

TEST_CASE("graded bracket equals the literal bracket type of each grade pair") {
    // For homogeneous x,y the graded bracket is the anticommutator iff
    // grade(x).grade(y) is odd; the positive relation families rely on this.
    std::vector<AlgebraElement> basis = algebra_basis(1);
    for (const auto &x : basis)
        for (const auto &y : basis) {
            AlgebraElement expect = x.grade()->dot(*y.grade())
                                        ? mat_anticommutator(x, y)
                                        : mat_commutator(x, y);
            CHECK(graded_bracket(x, y) == expect);
        }
}
