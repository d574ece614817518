#include "doctest.h"

#include "bentice/state.hpp"
#include "bentice/weights.hpp"

using namespace bentice;

namespace {

Poly v(int id, int k = 1) { return Poly::var(id, k); }
RowLabel P(int j) { return RowLabel::plain(j); }

}  // namespace

TEST_SUITE("weights") {
    TEST_CASE("generic weights") {
        auto g = make_generic(Family::B, 2);
        CHECK(g.row(RowLabel::bar(1)).b2 == v(vars::b1(P(1))));
        CHECK(g.row(P(2)).c1 == v(vars::a1(P(2))) * v(vars::a2(P(2))) + v(vars::b1(P(2))) * v(vars::b2(P(2))));
        for (auto f : all_families()) {
            auto s = make_generic(f, 3);
            for (auto& [r, w] : s.rows) CHECK(delta(w).is_zero());
            CHECK(check_scheme(s).empty());
        }
    }

    TEST_CASE("deformation weights") {
        auto d = make_deformation(Family::B, 2);
        CHECK(d.row(P(2)).b1 == Poly::i() * v(vars::qj(2), 2) * v(vars::x(2)));
        auto bs = make_deformation(Family::Bstar, 2);
        CHECK(bs.row(RowLabel::central(0)).c1 == Poly(1) - v(vars::qj(0), 4) * v(vars::x(0), 2));
        for (auto f : all_families()) {
            auto s = make_deformation(f, 3);
            for (auto& [r, w] : s.rows) CHECK(delta(w).is_zero());
            CHECK(check_scheme(s).empty());
        }
    }

    TEST_CASE("Okada weights") {
        Poly t = v(vars::q(), 2);
        CHECK(make_okada(Family::B, 2).row(P(1)).b1 == Poly::i() * t * v(vars::x(1)));
        CHECK(make_okada(Family::Bstar, 2).row(P(1)).c1 == Poly(1) + t);
        CHECK(make_okada(Family::C, 2).row(RowLabel::central(0)).b1 == -(Poly::i() * t));
        for (auto f : all_families())
            for (auto& [r, w] : make_okada(f, 3).rows) CHECK(delta(w).is_zero());
    }

    TEST_CASE("character weights") {
        auto c = make_character(Family::C, 2);
        CHECK(c.row(P(1)).c1.is_zero());
        REQUIRE(c.L);
        CHECK(c.L->is_zero());
        CHECK(c.row(P(2)).b1 == Poly::i() * v(vars::x(2)));
        // c1 and L are the only zero weights
        int zeros = 0;
        for (auto& [r, w] : c.rows)
            for (Kind k : {Kind::a1, Kind::a2, Kind::b1, Kind::b2, Kind::c1, Kind::c2})
                if (w.get(k).is_zero()) {
                    CHECK(k == Kind::c1);
                    ++zeros;
                }
        CHECK(zeros == (int)c.rows.size());
        CHECK_FALSE(c.R->is_zero());
        for (auto& [r, u] : c.up) CHECK_FALSE(u.is_zero());
        for (auto& [r, d] : c.down) CHECK_FALSE(d.is_zero());
    }

    TEST_CASE("delta") {
        CHECK(delta(RowWeights{1, 1, 1, 1, 1, 1}) == Poly(1));
        CHECK(delta(RowWeights{3, 3, 4, 4, 5, 5}).is_zero());
    }

    TEST_CASE("standard bends") {
        CHECK(standard_down(Family::B) == Poly::i());
        CHECK(standard_down(Family::C) == Poly::i());
        for (auto f : {Family::Bstar, Family::Cstar, Family::D, Family::BC}) CHECK(standard_down(f) == Poly(1));
        auto c = make_generic(Family::C, 1);
        CHECK(*c.L == v(vars::a(0)) - Poly::i() * v(vars::b(0)));
        CHECK(*c.R == Poly(1));
    }

    TEST_CASE("scheme validation reports violations") {
        auto s = make_deformation(Family::B, 3);
        CHECK(check_scheme(s).empty());
        s.down[RowLabel::bar(1)] = Poly(2);
        auto rep = check_scheme(s);
        bool sym2 = false;
        for (auto& line : rep) sym2 |= line.rfind("symmetry-2", 0) == 0;
        CHECK(sym2);

        auto c = make_generic(Family::A, 1);
        c.rows[P(1)].c2 = Poly(2);
        auto rep2 = check_scheme(c);
        REQUIRE_FALSE(rep2.empty());
        CHECK(rep2[0].rfind("free-fermion", 0) == 0);
    }

    TEST_CASE("missing weights name the vertex") {
        auto m = build_model(Family::B, StrictPartition({1}));
        auto w = make_generic(Family::B, 1);
        w.rows.erase(RowLabel::bar(1));
        CHECK_THROWS_AS(partition_function(m, w), std::out_of_range);
    }
}
