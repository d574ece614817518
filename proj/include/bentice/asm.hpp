#pragma once

#include "bentice/model.hpp"
#include "bentice/poly.hpp"
#include "bentice/state.hpp"
#include "bentice/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bentice {

struct SignMatrix {
    enum class Symmetry { none, half_turn };
    std::vector<std::vector<int>> entries;
    Symmetry symmetry = Symmetry::none;

    int rows() const { return (int)entries.size(); }
    int cols() const { return entries.empty() ? 0 : (int)entries[0].size(); }
    int at(int i, int j) const { return entries[i][j]; }
    SignMatrix transposed() const;
    std::string text() const;
    nlohmann::json to_json() const;
    bool operator==(const SignMatrix& o) const { return entries == o.entries; }
    auto operator<=>(const SignMatrix& o) const { return entries <=> o.entries; }
};

struct MatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// +1 at c2 vertices, -1 at c1 vertices; bent families completed by half-turn symmetry
SignMatrix state_to_matrix(const ModelSpec& spec, const IceState& s);

// every violated structural property, one line each; empty means valid
std::vector<std::string> matrix_problems(const SignMatrix& m, Family f);
bool is_half_turn_symmetric(const SignMatrix& m);
bool is_asm(const SignMatrix& m);

struct OkadaStats {
    int inv = 0, minus_count = 0, i1_plus = 0, i1_minus = 0, i2 = 0;
    std::vector<int> x_exponent;  // doubled, first n components of delta - A delta
    nlohmann::json to_json() const;
};

OkadaStats okada_stats(const SignMatrix& m);
Poly okada_matrix_weight(const SignMatrix& m);

struct BijectionResult {
    bool pass = true;
    int states = 0;
    std::optional<std::string> witness;
    nlohmann::json to_json() const;
};
// every state of B^rho: the matrix weight equals the state's weight under `w` (Okada weights by default)
BijectionResult bijection_check(int n, const std::optional<WeightScheme>& w = std::nullopt,
                                const Caps& caps = Caps::from_env());

struct PartitionChain {
    std::vector<std::vector<int>> chain;  // rho^(1) .. rho^(2n+1), parts descending
    nlohmann::json to_json() const;
};
// family B only; throws MatrixError if interleaving or the length rule fails
PartitionChain interleave_chain(const ModelSpec& spec, const IceState& s);
// rows B(i) - B(i+1) over columns lambda_1 .. 1
std::vector<std::vector<int>> chain_difference_matrix(const PartitionChain& c, int width);

// All N x N alternating sign matrices, by row-by-row search; optionally only the half-turn symmetric ones.
std::vector<SignMatrix> enumerate_asms(int N, bool half_turn_only);

}  // namespace bentice
