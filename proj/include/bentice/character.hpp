#pragma once

#include "bentice/model.hpp"
#include "bentice/poly.hpp"
#include "bentice/state.hpp"
#include "bentice/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bentice {

enum class WeylType { A, BC, D };  // BC is the hyperoctahedral group of types B and C

// Row-encoded signed permutation: row j of its matrix holds v_j in column sigma(j).
struct SignedPerm {
    std::vector<int> sigma;  // 1-based images
    std::vector<int> v;      // +1 / -1

    static SignedPerm identity(int n);
    int n() const { return (int)sigma.size(); }
    int negatives() const;
    int length(WeylType t) const;  // inversion formula
    int det() const;               // sign(sigma) * prod(v)
    SignedPerm operator*(const SignedPerm& o) const;
    // (w alpha)_j = v_j alpha_sigma(j)
    std::vector<int> act(const std::vector<int>& alpha) const;
    std::string str() const;
    auto operator<=>(const SignedPerm&) const = default;
};

std::vector<SignedPerm> weyl_group(WeylType t, int n);
// lengths by breadth-first search over simple reflections, in weyl_group order
std::vector<int> word_lengths(WeylType t, int n);
std::vector<SignedPerm> simple_reflections(WeylType t, int n);

// doubled Weyl vectors: rho_B, rho_C, rho_D; for A, rho = [n, ..., 1]
enum class RhoKind { A, B, C, D };
std::vector<int> weyl_vector(RhoKind r, int n);

// sum over W of (-1)^l(w) x^{w(mu + rho)}; exponents doubled
Poly alternant(WeylType t, RhoKind r, int n, const std::vector<int>& mu);
// the D group with rho_B gives the odd symplectic character, in which x_n = 1
Poly weyl_character(WeylType t, RhoKind r, int n, const std::vector<int>& mu);

// the group and Weyl vector of a family's character theorem
WeylType family_group(Family f);
RhoKind family_rho(Family f);

std::vector<int> mu_of(const StrictPartition& lambda);

// the Weyl element of a nonzero-weight state under character weights
SignedPerm state_to_weyl(const ModelSpec& spec, const IceState& s);


Poly weyl_state_weight(const SignedPerm& w, Family f, const StrictPartition& lambda);
// the sign statistic of the proof, computed from the state
int phi(const ModelSpec& spec, const IceState& s);

struct CharacterCheck {
    bool pass = false;
    Poly z, rho_z, chi, expected;
    nlohmann::json to_json() const;
};
CharacterCheck character_theorem_check(Family f, const StrictPartition& lambda, int workers = 1,
                                       const Caps& caps = Caps::from_env());

struct WeylStateCheck {
    bool pass = true;
    int states = 0;       // nonzero-weight states
    int group_order = 0;
    bool bijective = true;
    bool phi_parity = true;
    std::optional<std::string> witness;
    nlohmann::json to_json() const;
};
// per-state comparison of the closed form with the ice weight, plus the parity of phi
WeylStateCheck weyl_state_check(Family f, const StrictPartition& lambda, const Caps& caps = Caps::from_env());

// Schur polynomial by the bialternant formula
Poly schur(int n, const std::vector<int>& mu);

struct TokuyamaCheck {
    bool pass = false;
    Poly z, expected;
    nlohmann::json to_json() const;
};
TokuyamaCheck tokuyama_check(const StrictPartition& lambda, int workers = 1, const Caps& caps = Caps::from_env());
// t -> -1 (q -> i)
Poly at_t_minus_one(const Poly& p);

}  // namespace bentice
