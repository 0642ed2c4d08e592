#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "parastat/fock.hpp"

#include <random>
#include <set>

using namespace parastat;

namespace {

FockVector word(std::initializer_list<int> modes, Rational c = Rational(1)) {
    return FockVector::single(CreationWord(modes), c);
}

Rational inner_at(const CreationWord &u, const FockVector &v, const Rational &p, int rank) {
    FockVector cur = v;
    for (int mode : u)
        cur = apply_annihilation(mode, cur, p, rank);
    return cur.vacuum_coeff();
}

} // namespace

TEST_CASE("word weights") {
    WeightVector w0 = word_weight({}, 1, Rational(2));
    CHECK(w0.get(-1) == Rational(-1));
    CHECK(w0.get(1) == Rational(1));

    WeightVector w2 = word_weight({1, 1}, 1, Rational(2));
    CHECK(w2.get(1) == Rational(3));

    WeightVector wm = word_weight({-1, 2}, 2, Rational(1));
    CHECK(wm.get(-1) == Rational(1, 2));
    CHECK(wm.get(2) == Rational(3, 2));
    CHECK(wm.get(-2) == Rational(-1, 2));
    CHECK(wm.get(1) == Rational(1, 2));

    CHECK_THROWS(word_weight({3}, 2, Rational(1)));
}

TEST_CASE("word weight equals the engine's Cartan expectation") {
    // apply h_i = (1/2)[[c_i+, c_i-]] to each word and compare eigenvalues
    const Rational p(2);
    const int n = 2;
    std::vector<CreationWord> words = {{}, {1}, {-2, 1}, {1, -1, 2}, {-1, -1}};
    for (const auto &w : words) {
        WeightVector expect = word_weight(w, n, p);
        const FockVector v = FockVector::single(w);
        for (int i = -n; i <= n; ++i) {
            if (i == 0)
                continue;
            FockVector hv =
                pair_apply(i, Sign::plus, i, Sign::minus, v, p).scaled(Rational(1, 2));
            CHECK(hv == v.scaled(expect.get(i)));
        }
    }
}

TEST_CASE("build_level on the named examples") {
    auto l0 = build_level(1, Rational(3), 0);
    REQUIRE(l0.size() == 1);
    CHECK(l0[0].gram.at(0, 0) == Rational(1));
    CHECK(l0[0].rank == 1);

    for (long pn : {1, 2, 5}) {
        auto l1 = build_level(1, Rational(pn), 1);
        REQUIRE(l1.size() == 2);
        for (const auto &b : l1) {
            CHECK(b.rank == 1);
            CHECK(b.words.size() == 1);
        }
    }

    // n=1, p=1, L=2: the (f+)^2 block is pure radical
    auto l2 = build_level(1, Rational(1), 2);
    WeightVector wff = word_weight({-1, -1}, 1, Rational(1));
    bool seen = false;
    for (const auto &b : l2)
        if (b.weight == wff) {
            seen = true;
            CHECK(b.words.size() == 1);
            CHECK(b.gram.at(0, 0).is_zero());
            CHECK(b.rank == 0);
            CHECK(b.radical.size() == 1);
            CHECK(b.representatives.empty());
        }
    CHECK(seen);
}

TEST_CASE("radical vectors are annihilated by the form") {
    ModuleSnapshot snap = build_snapshot(2, Rational(1), 3);
    for (int level = 0; level <= 3; ++level)
        for (const auto &b : snap.levels[level])
            for (const auto &v : b.radical)
                for (std::size_t r = 0; r < b.words.size(); ++r) {
                    Rational s(0);
                    for (std::size_t c = 0; c < b.words.size(); ++c)
                        s += b.gram.at(r, c) * v[c];
                    CHECK(s.is_zero());
                }
}

TEST_CASE("dimension table equals the pattern count at small scale") {
    for (long pn : {1, 2, 3}) {
        CheckReport rep = gz_equivalence_check(1, pn, 3);
        CHECK(rep.ok);
        if (!rep.ok)
            MESSAGE(rep.detail);
    }
    // one point beyond the acceptance grid
    CheckReport rep = gz_equivalence_check(2, 3, 3);
    CHECK(rep.ok);
}

TEST_CASE("levels beyond the default truncation") {
    auto blocks = build_level(1, Rational(2), 5);
    std::size_t words = 0, rank = 0;
    for (const auto &b : blocks) {
        words += b.words.size();
        rank += b.rank;
    }
    CHECK(words == 32); // (2n)^L
    // quotient dimension at level 5 matches the pattern count
    std::size_t patterns = 0;
    for (const auto &[w, c] : count_basis(1, 2, 5))
        patterns += c;
    CHECK(rank == patterns);
}

TEST_CASE("generator_action on the vacuum and level 1") {
    const Rational p(3);
    ModuleSnapshot snap = build_snapshot(1, p, 2);

    // c1+ on |0>: the coordinate vector of word (1). Blocks are ordered by
    // weight; the word-(1) block sorts first (its eps_-1 coordinate is the
    // untouched vacuum value, the smaller one).
    ExactMatrix up = generator_action(1, Sign::plus, snap, 0);
    REQUIRE(up.cols() == 1);
    REQUIRE(up.rows() == 2);
    CHECK(up.at(0, 0) == Rational(1));
    CHECK(up.at(1, 0).is_zero());

    // c1- on word (1): p |0>
    ExactMatrix down = generator_action(1, Sign::minus, snap, 1);
    REQUIRE(down.rows() == 1);
    REQUIRE(down.cols() == 2);
    CHECK(down.at(0, 0) == p);
    CHECK(down.at(0, 1).is_zero());
}

TEST_CASE("gram-weighted adjointness of the action matrices") {
    for (long pn : {1, 2}) {
        ModuleSnapshot snap = build_snapshot(1, Rational(pn), 3);
        for (int level = 0; level < 3; ++level) {
            ExactMatrix gl = level_rep_gram(snap, level);
            ExactMatrix gh = level_rep_gram(snap, level + 1);
            for (int i : {-1, 1}) {
                ExactMatrix aplus = generator_action(i, Sign::plus, snap, level);
                ExactMatrix aminus = generator_action(i, Sign::minus, snap, level + 1);
                CHECK(gh * aplus == aminus.transposed() * gl);
            }
        }
    }
}

TEST_CASE("engine composition equals pair_apply on words") {
    std::mt19937_64 rng(4242);
    const Rational p(2);
    const std::vector<int> modes = {-2, -1, 1, 2};
    for (int t = 0; t < 60; ++t) {
        CreationWord w;
        const std::size_t len = rng() % 4;
        for (std::size_t s = 0; s < len; ++s)
            w.push_back(modes[rng() % modes.size()]);
        const int j = modes[rng() % modes.size()];
        const int k = modes[rng() % modes.size()];
        const FockVector v = FockVector::single(w);

        FockVector lhs = apply_annihilation(j, apply_creation(k, v), p);
        const int sgn = mode_grade(j).bracket_sign(mode_grade(k));
        FockVector rhs_second = apply_creation(k, apply_annihilation(j, v, p));
        FockVector bracket = lhs - rhs_second.scaled(Rational(sgn));
        CHECK(bracket == pair_apply(j, Sign::minus, k, Sign::plus, v, p));
    }
}

TEST_CASE("lowest weight structure") {
    CHECK(lowest_weight_check(2, Rational(1)).ok);
    CHECK(lowest_weight_check(1, Rational(3)).ok);
    CHECK(lowest_weight_check(2, Rational(5, 2)).ok); // rational order allowed here
}

TEST_CASE("irreducibility probe at small scale") {
    CHECK(irreducibility_probe(1, Rational(1), 3).ok);
    CHECK(irreducibility_probe(1, Rational(2), 3).ok);
}

TEST_CASE("unitarity at small scale") {
    for (long pn : {1, 2, 3})
        CHECK(unitarity_check(build_snapshot(1, Rational(pn), 3)).ok);
}

TEST_CASE("infinite action") {
    const Rational p(2);
    // c5- on word (5): p |0>, identical across truncations
    for (int rank : {6, 7, 8})
        CHECK(infinite_action(5, Sign::minus, word({5}), p, rank) ==
              FockVector::vacuum().scaled(p));

    CHECK(infinite_action(-3, Sign::plus, FockVector::vacuum(), p) == word({-3}));

    CHECK(minimal_truncation(5, word({5})) == 6);
    CHECK_THROWS(infinite_action(5, Sign::minus, word({5}), p, 5));

    // inner products of length-3 words over modes {+-1, +-4} agree at
    // truncations 5 and 9
    std::mt19937_64 rng(11);
    const std::vector<int> modes = {-4, -1, 1, 4};
    for (int t = 0; t < 25; ++t) {
        CreationWord u, v;
        for (int s = 0; s < 3; ++s) {
            u.push_back(modes[rng() % modes.size()]);
            v.push_back(modes[rng() % modes.size()]);
        }
        CHECK(inner_at(u, FockVector::single(v), p, 5) ==
              inner_at(u, FockVector::single(v), p, 9));
    }
}

TEST_CASE("action support stays inside the word modes plus the actor") {
    std::mt19937_64 rng(31);
    const Rational p(3);
    const std::vector<int> modes = {-3, -2, -1, 1, 2, 3};
    for (int t = 0; t < 80; ++t) {
        CreationWord w;
        const std::size_t len = rng() % 4;
        std::set<int> allowed;
        for (std::size_t s = 0; s < len; ++s) {
            w.push_back(modes[rng() % modes.size()]);
            allowed.insert(w.back());
        }
        const int i = modes[rng() % modes.size()];
        allowed.insert(i);
        for (Sign sign : {Sign::plus, Sign::minus}) {
            FockVector out = infinite_action(i, sign, FockVector::single(w), p);
            for (const auto &[rw, c] : out.terms())
                for (int mode : rw)
                    CHECK(allowed.count(mode) == 1);
        }
    }
}
