#pragma once

#include "bentice/gaussian.hpp"
#include "bentice/labels.hpp"

#include "json.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bentice {

enum class Bank : uint8_t { none, generic, deformation };

// a, b are the collapsed central-row symbols a^(0) = a1^(0) = a2^(0).
enum class Sym : uint8_t { a1, a2, b1, b2, a, b, q, qj, x };

constexpr int kMaxIndex = kMaxRowIndex;
constexpr int kGenericVars = 4 * 2 * kMaxIndex + 2 * (kMaxIndex + 1);
constexpr int kMaxVars = kGenericVars + 1 + 2 * (kMaxIndex + 1);

struct VarInfo {
    int id;
    Bank bank;
    Sym sym;
    RowLabel row;  // generic bank
    int index;     // deformation bank (-1 for the shared q)
    std::string name;
    std::string latex;
};

namespace vars {
int a1(RowLabel r);
int a2(RowLabel r);
int b1(RowLabel r);
int b2(RowLabel r);
int a(int central);
int b(int central);
int x(int j);
int qj(int j);
int q();
const VarInfo& info(int id);
std::optional<int> by_name(const std::string& name);
// x-variables store exponents in units of 1/2
inline bool is_half_unit(int id) { return info(id).sym == Sym::x; }
}  // namespace vars

struct Monomial {
    std::array<int16_t, kMaxVars> e{};

    bool is_one() const;
    int total_degree() const;  // raw stored units
    Monomial& operator*=(const Monomial& o);
    Monomial& operator/=(const Monomial& o);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
    friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }
    Monomial inverse() const;
    bool nonnegative() const;
    Bank bank() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    // lexicographic over the global variable enumeration
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) { return a.e <=> b.e; }
};

struct MonomialHash {
    size_t operator()(const Monomial& m) const noexcept;
};

class Poly {
public:
    using Term = std::pair<Monomial, GaussInt>;

    Poly() = default;
    Poly(long long c) : Poly(GaussInt(c)) {}
    Poly(const GaussInt& c);
    static Poly monomial(const Monomial& m, GaussInt c = GaussInt(1));
    // v^k; for x-variables k counts whole powers (stored doubled)
    static Poly var(int id, int k = 1);
    // x_j^{k/2}
    static Poly x_half(int j, int k);
    static Poly i() { return Poly(GaussInt::i()); }
    static Poly from_terms(std::vector<Term> terms);  // any order, merges duplicates

    const std::vector<Term>& terms() const { return terms_; }  // strictly descending
    Bank bank() const { return bank_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    GaussInt constant_term() const;
    size_t size() const { return terms_.size(); }
    int max_total_degree() const;
    int min_total_degree() const;
    bool is_homogeneous() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned k) const;
    Poly scaled(const GaussInt& c) const;
    Poly shifted(const Monomial& m) const;  // multiply by a monomial
    Monomial min_exponents() const;

private:
    std::vector<Term> terms_;
    Bank bank_ = Bank::none;
    void recompute_bank();
};

// Returns q with p = q*d, or nullopt. Throws std::domain_error on d = 0.
std::optional<Poly> exact_divide(const Poly& p, const Poly& d);

using Substitution = std::map<int, Poly>;
Poly substitute(const Poly& p, const Substitution& sigma);

using Point = std::map<int, GaussRat>;
GaussRat evaluate(const Poly& p, const Point& pt);

Poly sum_parallel(const std::vector<Poly>& parts, int workers);

std::string to_latex(const Poly& p);
std::string to_text(const Poly& p);
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

// Replace q^2 -> t, q_j^2 -> t_j in rendering only; exposed for tests.
std::string var_power_latex(int id, int stored_exp);

}  // namespace bentice
