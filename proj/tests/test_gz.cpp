#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parastat/gz.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace parastat;

namespace {

GZPattern pattern_n1(std::vector<int> row1, std::vector<int> row2neg,
                     std::vector<int> row2pos) {
    GZPattern p;
    p.n = 1;
    p.rows.resize(2);
    p.row(1).neg = std::move(row1);
    p.row(2).neg = std::move(row2neg);
    p.row(2).pos = std::move(row2pos);
    return p;
}

TopRow top(int n, std::vector<int> neg, std::vector<int> pos) {
    return TopRow{n, std::move(neg), std::move(pos)};
}

// Every integer filling of the rank-n shape with entries in [0, bound],
// below the given top row, filtered by the validator. Exhaustive oracle for
// enumerate_patterns.
std::vector<GZPattern> brute_force_patterns(const TopRow &t, int bound) {
    GZPattern base;
    base.n = t.n;
    base.rows.resize(2 * t.n);
    base.row(2 * t.n) = GZRow{t.neg, t.pos};
    std::vector<std::pair<int, int>> cells; // (row, slot), slots over neg then pos
    for (int r = 1; r <= 2 * t.n - 1; ++r) {
        base.row(r).neg.assign((r + 1) / 2, 0);
        base.row(r).pos.assign(r / 2, 0);
        for (int s = 0; s < (r + 1) / 2 + r / 2; ++s)
            cells.push_back({r, s});
    }
    std::vector<GZPattern> out;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            if (validate_finite(base).ok)
                out.push_back(base);
            return;
        }
        auto [r, s] = cells[idx];
        const int nneg = (r + 1) / 2;
        for (int v = 0; v <= bound; ++v) {
            if (s < nneg)
                base.row(r).neg[s] = v;
            else
                base.row(r).pos[s - nneg] = v;
            rec(idx + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

// The tensor pattern of c_i^+: rows rho(i)..2n are "1 0 ... 0", lower rows
// vanish.
GZPattern creation_pattern(int i, int n) {
    GZPattern p = GZPattern::zero(n);
    for (int r = rho(i); r <= 2 * n; ++r)
        p.row(r).neg[0] = 1;
    return p;
}

} // namespace

TEST_CASE("rho and its inverse") {
    CHECK(rho(1) == 2);
    CHECK(rho(-1) == 1);
    CHECK(rho(-3) == 5);
    CHECK(rho(2) == 4);
    CHECK_THROWS(rho(0));
    for (int i = -4; i <= 4; ++i)
        if (i != 0)
            CHECK(rho_inverse(rho(i)) == i);
}

TEST_CASE("validate_finite on the named examples") {
    CHECK(validate_finite(GZPattern::zero(1)).ok);
    CHECK(validate_finite(GZPattern::zero(3)).ok);

    GzVerdict v = validate_finite(pattern_n1({2}, {1}, {1}));
    CHECK_FALSE(v.ok);
    CHECK(v.condition == "condition 2");

    GzVerdict v2 = validate_finite(pattern_n1({0}, {0}, {1}));
    CHECK_FALSE(v2.ok);
    CHECK(v2.condition == "condition 1");

    // malformed shape reported distinctly
    GZPattern bad = GZPattern::zero(1);
    bad.row(1).neg.push_back(0);
    CHECK(validate_finite(bad).condition == "shape");

    GZPattern neg = GZPattern::zero(1);
    neg.row(1).neg[0] = -1;
    CHECK_FALSE(validate_finite(neg).ok);
}

TEST_CASE("enumerate_patterns on small tops") {
    auto pats = enumerate_patterns(top(1, {1}, {1}));
    REQUIRE(pats.size() == 2);
    // lexicographic: row 1 = [0] before row 1 = [1]
    CHECK(pats[0].row(1).neg[0] == 0);
    CHECK(pats[1].row(1).neg[0] == 1);

    CHECK(enumerate_patterns(top(1, {0}, {0})).size() == 1);
    CHECK_THROWS(enumerate_patterns(top(1, {0}, {1})));

    for (const auto &p : pats)
        CHECK(validate_finite(p).ok);
}

TEST_CASE("enumerate_patterns matches the brute-force box filter") {
    for (const TopRow &t : {top(1, {1}, {1}), top(1, {2}, {1}), top(2, {1, 0}, {0, 0}),
                            top(2, {1, 1}, {1, 0})}) {
        int bound = 0;
        for (int v : t.neg)
            bound = std::max(bound, v);
        for (int v : t.pos)
            bound = std::max(bound, v);
        bound += t.n; // positive entries may grow by one per even step downward
        auto brute = brute_force_patterns(t, bound);
        auto fast = enumerate_patterns(t);
        std::sort(fast.begin(), fast.end());
        CHECK(fast == brute);
        for (const auto &p : fast)
            CHECK(validate_finite(p).ok);
    }
}

TEST_CASE("both condition lists agree on arbitrary fillings") {
    GZPattern probe = GZPattern::zero(2);
    probe.row(4) = GZRow{{1, 1}, {1, 0}};
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                for (int d = 0; d <= 2; ++d)
                    for (int e = 0; e <= 1; ++e) {
                        probe.row(1).neg = {a};
                        probe.row(2) = GZRow{{b}, {c}};
                        probe.row(3) = GZRow{{1, d}, {e}};
                        const bool fin = validate_finite(probe).ok;
                        const bool body =
                            validate_stable_body(probe).ok &&
                            validate_top(top(2, probe.row(4).neg, probe.row(4).pos)).ok;
                        CHECK(fin == body);
                    }
}

TEST_CASE("pattern weights") {
    WeightVector w = pattern_weight(GZPattern::zero(1), Rational(2));
    CHECK(w.get(-1) == Rational(-1));
    CHECK(w.get(1) == Rational(1));

    // creation tensor patterns carry weight vacuum + eps_i
    for (int n : {1, 2, 3})
        for (int i = -n; i <= n; ++i) {
            if (i == 0)
                continue;
            GZPattern p = creation_pattern(i, n);
            REQUIRE(validate_finite(p).ok);
            WeightVector expect = vacuum_weight(n, Rational(3));
            expect.set(i, expect.get(i) + Rational(1));
            CHECK(pattern_weight(p, Rational(3)) == expect);
        }

    // weight multiset of the two patterns above top [1;1]
    auto pats = enumerate_patterns(top(1, {1}, {1}));
    WeightVector vac = vacuum_weight(1, Rational(2));
    WeightVector w2e1 = vac, wmix = vac;
    w2e1.set(1, w2e1.get(1) + Rational(2));
    wmix.set(-1, wmix.get(-1) + Rational(1));
    wmix.set(1, wmix.get(1) + Rational(1));
    std::set<std::string> got, expect{w2e1.str(1), wmix.str(1)};
    for (const auto &p : pats)
        got.insert(pattern_weight(p, Rational(2)).str(1));
    CHECK(got == expect);
}

TEST_CASE("tensor_branch") {
    auto b1 = tensor_branch(top(2, {1, 0}, {0, 0}));
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == top(2, {2, 0}, {0, 0}));
    CHECK(b1[1] == top(2, {1, 1}, {0, 0}));

    auto b2 = tensor_branch(top(1, {0}, {0}));
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == top(1, {1}, {0}));

    for (const TopRow &t : {top(2, {3, 2}, {1, 1}), top(3, {2, 1, 1}, {2, 0, 0})}) {
        auto branches = tensor_branch(t);
        CHECK(branches.size() <= static_cast<std::size_t>(2 * t.n));
        for (const auto &c : branches) {
            CHECK(validate_top(c).ok);
            CHECK(c.sum() == t.sum() + 1);
        }
    }
}

TEST_CASE("repeated branching from the zero top visits exactly the valid tops") {
    // level-by-level: branching from all level-L tops yields every valid
    // level-(L+1) top
    std::set<TopRow> frontier{top(2, {0, 0}, {0, 0})};
    for (int level = 1; level <= 3; ++level) {
        std::set<TopRow> next;
        for (const auto &t : frontier)
            for (const auto &c : tensor_branch(t))
                next.insert(c);
        auto all = enumerate_tops(2, /*p=*/level, level, Cutoff::ignore);
        std::set<TopRow> expect(all.begin(), all.end());
        CHECK(next == expect);
        frontier = std::move(next);
    }
}

TEST_CASE("stability index") {
    CHECK(stability_index(GZPattern::zero(1)) == 1);
    CHECK(stability_index(GZPattern::zero(3)) == 1);

    GZPattern p = pattern_n1({1}, {1}, {0});
    CHECK(stability_index(p) == 1);

    CHECK(stability_index(creation_pattern(1, 2)) == 2);
    CHECK(stability_index(creation_pattern(-2, 2)) == 3);

    // no stability when the top row has a positive part
    CHECK_FALSE(stability_index(pattern_n1({1}, {1}, {1})).has_value());
}

TEST_CASE("phi_extend") {
    CHECK(phi_extend(GZPattern::zero(1)) == GZPattern::zero(2));

    GZPattern p = pattern_n1({1}, {1}, {0});
    GZPattern q = phi_extend(p);
    REQUIRE(q.n == 2);
    CHECK(q.row(1).neg == std::vector<int>{1});
    CHECK(q.row(2) == (GZRow{{1}, {0}}));
    CHECK(q.row(3) == (GZRow{{1, 0}, {0}}));
    CHECK(q.row(4) == (GZRow{{1, 0}, {0, 0}}));
    CHECK(validate_finite(q).ok);
    CHECK(*stability_index(q) <= 2);

    // weight restricted to the old indices is unchanged; new carry vacuum
    WeightVector wp = pattern_weight(p, Rational(2));
    WeightVector wq = pattern_weight(q, Rational(2));
    CHECK(wq.get(-1) == wp.get(-1));
    CHECK(wq.get(1) == wp.get(1));
    CHECK(wq.get(-2) == Rational(-1));
    CHECK(wq.get(2) == Rational(1));

    CHECK_THROWS(phi_extend(pattern_n1({1}, {1}, {1})));
}

TEST_CASE("phi to/from infinite round trips") {
    GZPattern zero2 = GZPattern::zero(2);
    CHECK(phi_from_infinite(phi_to_infinite(zero2), 4) == zero2);

    for (const auto &p : enumerate_patterns(top(2, {1, 0}, {0, 0})))
        CHECK(phi_from_infinite(phi_to_infinite(p), 4) == p);

    // error below the stability index
    GZPattern c2 = creation_pattern(-2, 2); // stable from row 3
    InfiniteGZPattern inf = phi_to_infinite(c2);
    CHECK(inf.normalized().stability() == 4);
    CHECK_THROWS(phi_from_infinite(inf, 2));

    // extension by stable rows is the identity on the infinite side
    InfiniteGZPattern again = phi_to_infinite(phi_from_infinite(inf, 8));
    CHECK(again == inf);
}

TEST_CASE("validate_infinite") {
    InfiniteGZPattern vac = phi_to_infinite(GZPattern::zero(2));
    CHECK(validate_infinite(vac, 1).ok);

    // nu = (p+1) with a matching body fails the cutoff
    GZPattern p1 = pattern_n1({2}, {2}, {0});
    InfiniteGZPattern inf = phi_to_infinite(p1);
    CHECK(validate_infinite(inf, 2).ok);
    CHECK_FALSE(validate_infinite(inf, 1).ok);

    // body top row must equal [nu;0]
    InfiniteGZPattern broken = inf;
    broken.nu = {1};
    CHECK_FALSE(validate_infinite(broken, 3).ok);
}

TEST_CASE("count_basis") {
    auto c0 = count_basis(1, 1, 0);
    REQUIRE(c0.size() == 1);
    CHECK(c0.begin()->second == 1);
    CHECK(c0.begin()->first == vacuum_weight(1, Rational(1)));

    auto c1 = count_basis(1, 1, 1);
    CHECK(c1.size() == 2);
    for (const auto &[w, c] : c1)
        CHECK(c == 1);

    // n=1, p=1, L=2: cutoff keeps only top [1;1]
    auto c2 = count_basis(1, 1, 2);
    WeightVector vac = vacuum_weight(1, Rational(1));
    WeightVector w2e1 = vac, wmix = vac;
    w2e1.set(1, w2e1.get(1) + Rational(2));
    wmix.set(-1, wmix.get(-1) + Rational(1));
    wmix.set(1, wmix.get(1) + Rational(1));
    REQUIRE(c2.size() == 2);
    CHECK(c2[w2e1] == 1);
    CHECK(c2[wmix] == 1);

    // without the cutoff, level 3 at n=1 has 6 patterns
    long total = 0;
    for (const auto &[w, c] : count_basis(1, 1, 3, Cutoff::ignore))
        total += c;
    CHECK(total == 6);
}
