#pragma once

#include "bentice/model.hpp"
#include "bentice/poly.hpp"
#include "bentice/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bentice {

enum class Regime { generic, deformation };
std::string regime_name(Regime r);
Regime parse_regime(const std::string& s);

struct FactorProduct {
    Family family;
    int n = 0;
    Regime regime = Regime::generic;
    std::vector<Poly> factors;
    Poly product() const;
    nlohmann::json to_json() const;
};

// The known divisor of Z for the family; lambda_has_1 selects the D case.
FactorProduct known_factor(Family f, int n, Regime r, bool lambda_has_1 = false);

WeightScheme scheme_for(Family f, int n, Regime r);

// Restricts both sides to random lines and tests univariate divisibility over Q(i).
bool probably_divides(const Poly& divisor, const Poly& p, uint64_t seed, int trials = 5);

struct DivisibilityResult {
    Poly z;
    FactorProduct factors;
    bool divisible = false;
    bool probable = false;  // verdict of the randomized pre-check
    Poly quotient;
    std::optional<std::string> failing_factor;
    nlohmann::json to_json() const;
};

// Throws NotDivisible when a factor leaves a remainder or the two paths disagree.
struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
DivisibilityResult divisibility_check(Family f, const StrictPartition& lambda, Regime r, int workers = 1,
                                      uint64_t seed = 1, const Caps& caps = Caps::from_env());

struct IndexAction {
    enum class Kind { swap, bar };
    Kind kind;
    int j, k;
    std::string str() const;
    Poly apply(const Poly& p, Regime r) const;
};

// adjacent swaps and bars over the paired (non-central) indices
std::vector<IndexAction> index_actions(Family f, int n);

struct SymmetryResult {
    bool pass = true;
    std::vector<std::pair<std::string, bool>> actions;
    std::optional<std::string> witness;
    nlohmann::json to_json() const;
};
SymmetryResult quotient_symmetry_check(const Poly& quotient, Family f, int n, Regime r);

// Okada's and Simpson's published products; for BC the specialized deformation product.
Poly okada_product(Family f, int n);

struct ProductCheck {
    bool pass = false;
    Poly z, expected;
    nlohmann::json to_json() const;
};
ProductCheck okada_product_check(Family f, int n, int workers = 1, const Caps& caps = Caps::from_env());

}  // namespace bentice
