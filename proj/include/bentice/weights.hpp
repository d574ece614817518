#pragma once

#include "bentice/model.hpp"
#include "bentice/poly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bentice {

struct RowWeights {
    Poly a1, a2, b1, b2, c1, c2;

    const Poly& get(Kind k) const;
    RowWeights barred() const { return {a2, a1, b2, b1, c1, c2}; }
    bool operator==(const RowWeights&) const = default;
    nlohmann::json to_json() const;
};

struct WeightScheme {
    std::string name;
    Family family = Family::A;
    int n = 0;
    std::map<RowLabel, RowWeights> rows;
    std::map<RowLabel, Poly> up, down;  // bend weights, keyed by the bend's top row
    std::optional<Poly> L, R;           // corner (C only)

    const RowWeights& row(RowLabel r) const;
    Poly vertex_weight(const Vertex& v, Kind k) const;
    // set U and D on both j and j-bar
    void set_bend(int j, const Poly& U, const Poly& D);
    nlohmann::json to_json() const;
};

// R-vertex weight for strands j (top-left) and k (bottom-left)
Poly cross_weight(const RowWeights& wj, const RowWeights& wk, Kind k);

// The central row label of a family, if any.
std::optional<RowLabel> central_label(Family f, int n);
// Plain indices j that come with a j-bar partner.
std::vector<int> paired_indices(Family f, int n);
// standard D bend weight (U and R are 1)
Poly standard_down(Family f);

WeightScheme make_generic(Family f, int n);
WeightScheme make_deformation(Family f, int n);
WeightScheme make_okada(Family f, int n);
WeightScheme make_character(Family f, int n);
// type A weights for which Z is the Tokuyama product: a1=1, a2=x, b1=t, b2=x, c1=1+t, c2=x
WeightScheme make_tokuyama(int n);
// every six-vertex entry equal to the given constants, bends and corner 1
WeightScheme make_constant(Family f, int n, const RowWeights& w);

// the common shape of the deformation-derived schemes; t_of/x_of give t_j and x_j
using IndexImage = std::function<Poly(int)>;
WeightScheme make_deformation_like(Family f, int n, const IndexImage& t_of, const IndexImage& x_of,
                                   std::string name);

Poly delta(const RowWeights& w);
Poly delta(const WeightScheme& s, RowLabel r);
// every violated constraint, one line each; empty means valid
std::vector<std::string> check_scheme(const WeightScheme& s);

// inverse of a unit monomial (x_j, -1, ...)
Poly unit_inverse(const Poly& p);

std::string scheme_label(const WeightScheme& s);

}  // namespace bentice
