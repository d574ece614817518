#include "doctest.h"

#include "bentice/state.hpp"
#include "oracles.hpp"

using namespace bentice;

namespace {

std::vector<ModelSpec> small_models() {
    std::vector<ModelSpec> out;
    for (auto f : all_families())
        for (auto l : {StrictPartition({1}), StrictPartition({2}), StrictPartition({2, 1}), StrictPartition({3})})
            out.push_back(build_model(f, l));
    return out;
}

}  // namespace

TEST_SUITE("state") {
    TEST_CASE("state counts") {
        CHECK(enumerate_states(build_model(Family::A, StrictPartition({1}))).size() == 1);
        auto a21 = build_model(Family::A, StrictPartition({2, 1}));
        CHECK(enumerate_states(a21).size() == 2);
        CHECK(oracle::brute_force_count(a21.diagram) == 2);
        CHECK(enumerate_states(build_model(Family::B, StrictPartition({2, 1}))).size() ==
              (size_t)oracle::count_asms(4, true));
    }

    TEST_CASE("enumeration agrees with brute force") {
        for (auto& m : small_models()) {
            CAPTURE(family_name(m.family));
            CAPTURE(m.lambda.str());
            auto states = enumerate_states(m);
            CHECK((long)states.size() == oracle::brute_force_count(m.diagram));
            CHECK(enumerate_states(m) == states);
            for (auto& s : states) {
                for (auto& e : m.diagram.edges)
                    if (e.fixed >= 0) CHECK(s.bits[&e - &m.diagram.edges[0]] == e.fixed);
            }
        }
    }

    TEST_CASE("partition functions agree with brute force") {
        for (auto& m : small_models()) {
            CAPTURE(family_name(m.family));
            CAPTURE(m.lambda.str());
            for (auto w : {make_generic(m.family, m.n), make_deformation(m.family, m.n)}) {
                Poly z = partition_function(m, w);
                CHECK(z == oracle::brute_force_partition(m.diagram, w));
                CHECK(z == partition_function(m, w, 3));
                CHECK(z == partition_function_by_states(m.diagram, w));
            }
        }
    }

    TEST_CASE("state weights") {
        RowWeights ones{1, 1, 1, 1, 1, 1};
        auto m = build_model(Family::B, StrictPartition({2, 1}));
        auto w1 = make_constant(Family::B, 2, ones);
        auto states = enumerate_states(m);
        for (auto& s : states) CHECK(state_weight(m.diagram, s, w1) == Poly(1));
        CHECK(partition_function(m, w1) == Poly((long long)states.size()));

        auto a = build_model(Family::A, StrictPartition({1}));
        auto sa = enumerate_states(a);
        REQUIRE(sa.size() == 1);
        CHECK(state_kind(a.diagram, sa[0], 0) == Kind::c2);
        CHECK(state_weight(a.diagram, sa[0], make_generic(Family::A, 1)) == Poly(1));

        auto b = build_model(Family::B, StrictPartition({1}));
        auto dw = make_deformation(Family::B, 1);
        Poly t1 = Poly::var(vars::qj(1), 2), x1 = Poly::var(vars::x(1));
        int downs = 0;
        for (auto& s : enumerate_states(b)) {
            bool down = false;
            for (size_t v = 0; v < b.diagram.vertices.size(); ++v)
                if (state_kind(b.diagram, s, (int)v) == Kind::D) down = true;
            if (!down) continue;
            ++downs;
            CHECK(state_weight(b.diagram, s, dw) == -(t1 * x1));
        }
        CHECK(downs == 1);
    }

    TEST_CASE("small partition functions") {
        Poly t1 = Poly::var(vars::qj(1), 2), x1 = Poly::var(vars::x(1));
        CHECK(partition_function(build_model(Family::B, StrictPartition({1})), make_deformation(Family::B, 1)) ==
              Poly(1) - t1 * x1);
        CHECK(partition_function(build_model(Family::A, StrictPartition({1})), make_tokuyama(1)) == x1);
    }

    TEST_CASE("degree law and row balance") {
        for (int n = 1; n <= 3; ++n)
            for (auto l : {StrictPartition::rho(n), StrictPartition({n + 2})}) {
                if (l.n() != n && n != 1) continue;
                auto m = build_model(Family::B, l);
                auto w = make_generic(Family::B, l.n());
                for (auto& s : enumerate_states(m)) {
                    Poly p = state_weight(m.diagram, s, w);
                    for (auto& [mono, c] : p.terms()) CHECK(mono.total_degree() == vertex_count(m) - l.n());
                }
            }
        for (auto f : all_families()) {
            if (!is_bent(f)) continue;
            auto m = build_model(f, StrictPartition({3, 1}));
            for (auto& s : enumerate_states(m)) {
                for (int j : paired_indices(f, m.n)) {
                    int balance = 0;
                    for (size_t r = 0; r < m.rows.size(); ++r) {
                        if (m.rows[r].index != j || m.rows[r].is_central()) continue;
                        for (int v : m.grid[r]) {
                            if (v < 0) continue;
                            Kind k = state_kind(m.diagram, s, v);
                            balance += (k == Kind::c2) - (k == Kind::c1);
                        }
                    }
                    CHECK(balance == 1);
                }
            }
        }
    }

    TEST_CASE("caps are enforced") {
        Caps caps;
        caps.max_n = 1;
        CHECK_THROWS_AS(enumerate_states(build_model(Family::A, StrictPartition({2, 1})), caps), CapExceeded);
        CHECK_THROWS_AS(partition_function(build_model(Family::B, StrictPartition({2, 1})),
                                           make_generic(Family::B, 2), 1, caps),
                        CapExceeded);
    }

    TEST_CASE("exports") {
        auto m = build_model(Family::C, StrictPartition({2, 1}));
        auto s = enumerate_states(m).front();
        auto j = state_to_json(m, s);
        CHECK(j.dump() == state_to_json(m, s).dump());
        auto tikz = state_to_tikz(m, s);
        CHECK(tikz.find("tikzpicture") != std::string::npos);
    }
}
