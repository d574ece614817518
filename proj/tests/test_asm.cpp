#include "doctest.h"

#include "bentice/asm.hpp"
#include "oracles.hpp"

#include <set>

using namespace bentice;

namespace {

using Kinds = std::vector<std::vector<std::string>>;

Kinds kinds_of(const ModelSpec& sp, const IceState& s) {
    Kinds out;
    for (auto& row : sp.grid) {
        std::vector<std::string> r;
        for (int v : row)
            if (v >= 0) r.push_back(kind_name(state_kind(sp.diagram, s, v)));
        out.push_back(r);
    }
    return out;
}

std::vector<SignMatrix> matching(const ModelSpec& sp, const Kinds& want) {
    std::vector<SignMatrix> out;
    for (auto& s : enumerate_states(sp))
        if (kinds_of(sp, s) == want) out.push_back(state_to_matrix(sp, s));
    return out;
}

SignMatrix sm(std::vector<std::vector<int>> e) {
    SignMatrix m;
    m.entries = std::move(e);
    return m;
}

}  // namespace

TEST_SUITE("asm") {
    TEST_CASE("worked state for Bstar") {
        auto sp = build_model(Family::Bstar, StrictPartition({4, 2}));
        auto ms = matching(sp, {{"c2", "c1", "b1", "a1"},
                                {"a1", "c2", "a2", "b2"},
                                {"a1", "a1", "c2", "c1"},
                                {"a1", "a1", "a1", "b1"},
                                {"a1", "a1", "a1", "c2"}});
        REQUIRE(ms.size() == 1);
        CHECK(ms[0] == sm({{1, -1, 0, 0, 1, 0, 0, 0},
                           {0, 1, 0, 0, 0, 0, 0, 0},
                           {0, 0, 1, -1, -1, 1, 0, 0},
                           {0, 0, 0, 0, 0, 0, 1, 0},
                           {0, 0, 0, 1, 0, 0, -1, 1}}));
        CHECK(matrix_problems(ms[0], Family::Bstar).empty());
    }

    TEST_CASE("worked state for Cstar") {
        auto sp = build_model(Family::Cstar, StrictPartition({3, 2}));
        auto ms = matching(sp, {{"c2", "a2", "c1"}, {"a1", "c2", "a2"}, {"a1", "a1", "c2", "c1"}, {"a1", "a1", "a1", "c2"}});
        REQUIRE(ms.size() == 1);
        CHECK(ms[0] == sm({{1, 0, -1, 1, 0, 0, 0},
                           {0, 1, 0, -1, 1, 0, 0},
                           {0, 0, 1, -1, 0, 1, 0},
                           {0, 0, 0, 1, -1, 0, 1}}));
    }

    TEST_CASE("type A states are ASM blocks") {
        auto sp = build_model(Family::A, StrictPartition({1}));
        auto st = enumerate_states(sp);
        REQUIRE(st.size() == 1);
        CHECK(state_to_matrix(sp, st[0]) == sm({{1}}));
        auto r3 = build_model(Family::A, StrictPartition::rho(3));
        CHECK((long)enumerate_states(r3).size() == oracle::count_asms(3, false));
        for (auto& s : enumerate_states(r3)) CHECK(is_asm(state_to_matrix(r3, s)));
    }

    TEST_CASE("matrix properties") {
        CHECK(is_asm(sm({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}})));
        CHECK_FALSE(is_asm(sm({{1, 1}, {0, 0}})));
        CHECK(is_half_turn_symmetric(sm({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}})));
        CHECK_FALSE(is_half_turn_symmetric(sm({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})));
        CHECK(sm({{1, 2}, {3, 4}}).transposed() == sm({{1, 3}, {2, 4}}));
    }

    TEST_CASE("Okada statistics") {
        auto id = sm({{1, 0}, {0, 1}});
        auto st = okada_stats(id);
        CHECK(st.inv == 0);
        CHECK(st.minus_count == 0);
        CHECK(okada_matrix_weight(id) == Poly(1));
        auto j = sm({{0, 1}, {1, 0}});
        CHECK(okada_stats(j).inv == 1);
        CHECK(okada_matrix_weight(j) == -(Poly::var(vars::q(), 2) * Poly::var(vars::x(1))));
    }

    TEST_CASE("bijection with half-turn symmetric matrices") {
        for (int n = 1; n <= 3; ++n) {
            CAPTURE(n);
            auto b = bijection_check(n);
            CHECK(b.pass);
            CHECK(b.states == oracle::count_asms(2 * n, true));
        }
        auto wrong = make_okada(Family::B, 2);
        wrong.set_bend(1, 1, 1);
        auto b = bijection_check(2, wrong);
        CHECK_FALSE(b.pass);
        CHECK(b.witness);
    }

    TEST_CASE("matrix counts against the oracle") {
        for (int N = 1; N <= 6; ++N) {
            CAPTURE(N);
            CHECK((long)enumerate_asms(N, false).size() == oracle::count_asms(N, false));
            CHECK((long)enumerate_asms(N, true).size() == oracle::count_asms(N, true));
        }
        CHECK(enumerate_asms(7, true).size() == 588);
    }

    TEST_CASE("state images are injective and valid") {
        std::map<Family, std::set<SignMatrix>> at_rho3;
        for (auto f : all_families())
            for (auto l : {StrictPartition({1}), StrictPartition({2, 1}), StrictPartition({4, 2}), StrictPartition::rho(3)}) {
                CAPTURE(family_name(f));
                CAPTURE(l.str());
                auto sp = build_model(f, l);
                auto st = enumerate_states(sp);
                std::set<SignMatrix> img;
                for (auto& s : st) {
                    auto m = state_to_matrix(sp, s);
                    CHECK(matrix_problems(m, f).empty());
                    img.insert(m);
                }
                CHECK(img.size() == st.size());
                if (l == StrictPartition::rho(3)) at_rho3[f] = img;
            }
        for (int n = 1; n <= 3; ++n) {
            auto c = build_model(Family::C, StrictPartition::rho(n));
            CHECK((long)enumerate_states(c).size() == oracle::count_asms(2 * n + 1, true));
        }
        std::set<SignMatrix> t1, t2;
        for (auto& m : at_rho3[Family::Bstar]) t1.insert(m.transposed());
        for (auto& m : at_rho3[Family::D]) t2.insert(m.transposed());
        CHECK(t1 == at_rho3[Family::Cstar]);
        CHECK(t2 == at_rho3[Family::BC]);
    }

    TEST_CASE("interleaving chains") {
        auto sp = build_model(Family::B, StrictPartition({2, 1}));
        bool seen = false;
        for (auto& s : enumerate_states(sp)) {
            auto c = interleave_chain(sp, s);
            REQUIRE(c.chain.size() == 5);
            CHECK(c.chain.front() == std::vector<int>{2, 1});
            CHECK(c.chain.back().empty());
            if (c.chain == std::vector<std::vector<int>>{{2, 1}, {2}, {1}, {}, {}}) seen = true;
            auto m = state_to_matrix(sp, s);
            auto d = chain_difference_matrix(c, 2);
            for (int r = 0; r < 4; ++r)
                for (int k = 0; k < 2; ++k) CHECK(d[r][k] == m.at(r, k));
        }
        CHECK(seen);
        CHECK_THROWS_AS(interleave_chain(build_model(Family::C, StrictPartition({1})),
                                         enumerate_states(build_model(Family::C, StrictPartition({1})))[0]),
                        InputError);
    }
}
