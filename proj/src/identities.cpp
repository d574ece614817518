#include "bentice/identities.hpp"

#include "bentice/state.hpp"

#include <algorithm>
#include <random>

namespace bentice {

std::string regime_name(Regime r) { return r == Regime::generic ? "generic" : "deformation"; }

Regime parse_regime(const std::string& s) {
    if (s == "generic") return Regime::generic;
    if (s == "deformation") return Regime::deformation;
    throw InputError("unknown regime '" + s + "' (expected generic or deformation)");
}

Poly FactorProduct::product() const {
    Poly p(1);
    for (auto& f : factors) p *= f;
    return p;
}

nlohmann::json FactorProduct::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (auto& f : factors) fs.push_back(to_latex(f));
    return {{"family", family_name(family)}, {"n", n}, {"regime", regime_name(regime)}, {"factors", fs}};
}

WeightScheme scheme_for(Family f, int n, Regime r) {
    return r == Regime::generic ? make_generic(f, n) : make_deformation(f, n);
}

namespace {

RowLabel P(int j) { return RowLabel::plain(j); }

// the factors of one regime, written in terms of row weights so both regimes share the shapes
struct Shapes {
    Family f;
    Regime r;
    Poly a1(int j) const { return r == Regime::generic ? Poly::var(vars::a1(P(j))) : Poly(1); }
    Poly a2(int j) const { return r == Regime::generic ? Poly::var(vars::a2(P(j))) : Poly(1); }
    Poly t(int j) const { return Poly::var(vars::qj(j), 2); }
    Poly x(int j) const { return Poly::var(vars::x(j)); }
    Poly b1(int j) const { return r == Regime::generic ? Poly::var(vars::b1(P(j))) : Poly::i() * t(j) * x(j); }
    Poly b2(int j) const {
        return r == Regime::generic ? Poly::var(vars::b2(P(j))) : Poly::i() * t(j) * unit_inverse(x(j));
    }
    Poly a(int c) const { return r == Regime::generic ? Poly::var(vars::a(c)) : Poly(1); }
    Poly b(int c) const { return r == Regime::generic ? Poly::var(vars::b(c)) : Poly::i() * t(c) * x(c); }

    // per-index factors
    Poly bend(int j) const {
        if (r == Regime::deformation) return Poly(1) - t(j) * x(j);
        return a2(j) + Poly::i() * b1(j);
    }
    Poly central(int j, int c) const {
        if (r == Regime::deformation) return Poly(1) - t(c) * t(j) * x(c) * x(j);
        return a(c) * a2(j) + b1(j) * b(c);
    }
    Poly square(int j) const {
        if (r == Regime::deformation) return Poly(1) - t(j) * t(j) * x(j) * x(j);
        return a2(j) * a2(j) + b1(j) * b1(j);
    }
    // pairwise factors
    Poly pair1(int j, int k) const {
        if (r == Regime::deformation) return Poly(1) - t(j) * t(k) * x(j) * unit_inverse(x(k));
        return a1(k) * a2(j) + b1(j) * b2(k);
    }
    Poly pair2(int j, int k) const {
        if (r == Regime::deformation) return Poly(1) - t(j) * t(k) * x(j) * x(k);
        return a2(j) * a2(k) + b1(k) * b1(j);
    }
};

}  // namespace

FactorProduct known_factor(Family f, int n, Regime r, bool lambda_has_1) {
    if (n < 1) throw InputError("n must be >= 1");
    FactorProduct fp{f, n, r, {}};
    Shapes s{f, r};
    int m = (f == Family::BC) ? n - 1 : n;
    for (int j = 1; j <= m; ++j) {
        switch (f) {
            case Family::B: fp.factors.push_back(s.bend(j)); break;
            case Family::Bstar: fp.factors.push_back(s.central(j, 0)); break;
            case Family::C:
                fp.factors.push_back(s.bend(j));
                fp.factors.push_back(s.central(j, 0));
                break;
            case Family::Cstar: fp.factors.push_back(s.square(j)); break;
            case Family::D:
                if (!lambda_has_1) fp.factors.push_back(s.square(j));
                break;
            case Family::BC:
                fp.factors.push_back(s.central(j, n));
                fp.factors.push_back(s.square(j));
                break;
            default: break;
        }
    }
    for (int j = 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k) {
            fp.factors.push_back(s.pair1(j, k));
            if (f != Family::A) fp.factors.push_back(s.pair2(j, k));
        }
    return fp;
}

// ------------------------------------------------------------------ randomized pre-check

namespace {

// Z[i] -> F_p with i mapped to a square root of -1; p = 1 mod 4
constexpr uint64_t kPrime = 998244353;

uint64_t mulmod(uint64_t a, uint64_t b) { return a * b % kPrime; }

uint64_t powmod(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}

const uint64_t kSqrtMinusOne = powmod(3, (kPrime - 1) / 4);

uint64_t reduce(const BigInt& v) {
    BigInt r = v % kPrime;
    if (r < 0) r += kPrime;
    return static_cast<uint64_t>(r);
}

uint64_t reduce(const GaussInt& g) { return (reduce(g.re) + mulmod(reduce(g.im), kSqrtMinusOne)) % kPrime; }

using UPoly = std::vector<uint64_t>;  // coefficients mod p, low degree first

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j])) % kPrime;
    return c;
}

bool udivides(const UPoly& d, UPoly p) {
    if (d.empty()) return p.empty();
    uint64_t lead_inv = powmod(d.back(), kPrime - 2);
    while (p.size() >= d.size()) {
        uint64_t c = mulmod(p.back(), lead_inv);
        size_t shift = p.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i) p[shift + i] = (p[shift + i] + kPrime - mulmod(c, d[i])) % kPrime;
        p.pop_back();
        trim(p);
    }
    return p.empty();
}

// p with every stored exponent shifted to be nonnegative
Poly clear_monomial(const Poly& p) {
    if (p.is_zero()) return p;
    Monomial m = p.min_exponents();
    return p.shifted(m.inverse());
}

UPoly restrict_to_line(const Poly& p, const std::vector<std::pair<uint64_t, uint64_t>>& line) {
    // each stored unit of variable v is r_v + s_v T (x^(1/2) for half-unit variables)
    std::vector<std::vector<UPoly>> powers(kMaxVars);
    auto power = [&](int v, int e) -> const UPoly& {
        auto& pw = powers[v];
        if (pw.empty()) pw.push_back(UPoly{1});
        while ((int)pw.size() <= e) pw.push_back(umul(pw.back(), UPoly{line[v].first, line[v].second}));
        return pw[e];
    };
    UPoly out;
    for (auto& [m, c] : p.terms()) {
        UPoly term{reduce(c)};
        for (int v = 0; v < kMaxVars; ++v)
            if (m.e[v]) term = umul(term, power(v, m.e[v]));
        if (out.size() < term.size()) out.resize(term.size(), 0);
        for (size_t i = 0; i < term.size(); ++i) out[i] = (out[i] + term[i]) % kPrime;
    }
    trim(out);
    return out;
}

}  // namespace

bool probably_divides(const Poly& divisor, const Poly& p, uint64_t seed, int trials) {
    if (divisor.is_zero()) throw std::domain_error("probably_divides: zero divisor");
    Poly d = clear_monomial(divisor), q = clear_monomial(p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> dist(0, kPrime - 1);
    for (int t = 0; t < trials; ++t) {
        std::vector<std::pair<uint64_t, uint64_t>> line(kMaxVars);
        for (auto& [r, s] : line) {
            r = dist(rng);
            s = dist(rng);
        }
        UPoly ud = restrict_to_line(d, line);
        if (ud.empty()) continue;  // line inside the zero set of d; try another
        if (!udivides(ud, restrict_to_line(q, line))) return false;
    }
    return true;
}

nlohmann::json DivisibilityResult::to_json() const {
    nlohmann::json j{{"factors", factors.to_json()}, {"divisible", divisible}, {"randomized_precheck", probable}};
    if (divisible) j["quotient"] = to_latex(quotient);
    if (failing_factor) j["failing_factor"] = *failing_factor;
    j["z_terms"] = z.size();
    return j;
}

DivisibilityResult divisibility_check(Family f, const StrictPartition& lambda, Regime r, int workers, uint64_t seed,
                                      const Caps& caps) {
    check_caps(f, lambda, caps);
    DivisibilityResult res;
    res.factors = known_factor(f, lambda.n(), r, lambda.contains(1));
    res.z = partition_function(build_model(f, lambda), scheme_for(f, lambda.n(), r), workers, caps);
    res.probable = probably_divides(res.factors.product(), res.z, seed);

    std::vector<Poly> order = res.factors.factors;
    std::sort(order.begin(), order.end(),
              [](const Poly& a, const Poly& b) { return a.terms().front().first > b.terms().front().first; });
    Poly running = res.z;
    res.divisible = true;
    for (auto& fac : order) {
        auto q = exact_divide(running, fac);
        if (!q) {
            res.divisible = false;
            res.failing_factor = to_latex(fac);
            break;
        }
        running = std::move(*q);
    }
    if (res.divisible) res.quotient = running;
    if (res.divisible != res.probable)
        throw NotDivisible("divisibility paths disagree for " + family_name(f) + " " + lambda.str() +
                           ": exact=" + (res.divisible ? "yes" : "no") + " randomized=" + (res.probable ? "yes" : "no"));
    if (!res.divisible)
        throw NotDivisible("Z(" + family_name(f) + "^" + lambda.str() + ") in the " + regime_name(r) +
                           " regime is not divisible by " + *res.failing_factor);
    return res;
}

// ------------------------------------------------------------------ symmetry

std::string IndexAction::str() const {
    if (kind == Kind::swap) return std::to_string(j) + "<->" + std::to_string(k);
    return std::to_string(j) + "<->" + std::to_string(j) + "bar";
}

Poly IndexAction::apply(const Poly& p, Regime r) const {
    Substitution s;
    if (r == Regime::generic) {
        auto vj = [&](auto fn) { return fn(P(j)); };
        auto vk = [&](auto fn) { return fn(P(k)); };
        if (kind == Kind::swap) {
            for (auto fn : {vars::a1, vars::a2, vars::b1, vars::b2}) {
                s[vj(fn)] = Poly::var(vk(fn));
                s[vk(fn)] = Poly::var(vj(fn));
            }
        } else {
            s[vars::a1(P(j))] = Poly::var(vars::a2(P(j)));
            s[vars::a2(P(j))] = Poly::var(vars::a1(P(j)));
            s[vars::b1(P(j))] = Poly::var(vars::b2(P(j)));
            s[vars::b2(P(j))] = Poly::var(vars::b1(P(j)));
        }
    } else {
        if (kind == Kind::swap) {
            s[vars::x(j)] = Poly::var(vars::x(k));
            s[vars::x(k)] = Poly::var(vars::x(j));
            s[vars::qj(j)] = Poly::var(vars::qj(k));
            s[vars::qj(k)] = Poly::var(vars::qj(j));
        } else {
            s[vars::x(j)] = unit_inverse(Poly::var(vars::x(j)));
        }
    }
    return substitute(p, s);
}

std::vector<IndexAction> index_actions(Family f, int n) {
    std::vector<IndexAction> acts;
    auto js = paired_indices(f, n);
    if (f == Family::A)
        for (int j = 1; j <= n; ++j) js.push_back(j);
    for (size_t i = 0; i + 1 < js.size(); ++i) acts.push_back({IndexAction::Kind::swap, js[i], js[i + 1]});
    if (f != Family::A)
        for (int j : js) acts.push_back({IndexAction::Kind::bar, j, j});
    return acts;
}

nlohmann::json SymmetryResult::to_json() const {
    nlohmann::json a = nlohmann::json::object();
    for (auto& [name, ok] : actions) a[name] = ok;
    nlohmann::json j{{"pass", pass}, {"actions", a}};
    if (witness) j["witness"] = *witness;
    return j;
}

SymmetryResult quotient_symmetry_check(const Poly& quotient, Family f, int n, Regime r) {
    SymmetryResult res;
    for (auto& act : index_actions(f, n)) {
        Poly img = act.apply(quotient, r);
        bool ok = (img == quotient);
        res.actions.emplace_back(act.str(), ok);
        if (!ok && res.pass) {
            res.pass = false;
            res.witness = act.str() + " changes the quotient by " + to_text(img - quotient);
        }
    }
    return res;
}

// ------------------------------------------------------------------ Okada products

Poly okada_product(Family f, int n) {
    if (n < 1) throw InputError("n must be >= 1");
    Poly t = Poly::var(vars::q(), 2);
    auto x = [](int j) { return Poly::var(vars::x(j)); };
    auto xi = [&](int j) { return unit_inverse(x(j)); };
    Poly one(1);
    Poly z(1);
    switch (f) {
        case Family::B:
            for (int j = 1; j <= n; ++j) z *= one - t * x(j);
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) z *= (one - t * t * x(j) * xi(k)) * (one - t * t * x(j) * x(k));
            return z;
        case Family::Bstar:
            for (int j = 1; j <= n; ++j) z *= one + t * x(j);
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) z *= (one + t * x(j) * xi(k)) * (one + t * x(j) * x(k));
            return z;
        case Family::C:
            for (int j = 1; j <= n; ++j) z *= (one - t * x(j)) * (one + t * t * x(j));
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) z *= (one - t * t * x(j) * xi(k)) * (one - t * t * x(j) * x(k));
            return z;
        case Family::Cstar:
            for (int j = 1; j <= n; ++j) z *= one + t * x(j) * x(j);
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) z *= (one + t * x(j) * xi(k)) * (one + t * x(j) * x(k));
            return z;
        case Family::D:
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) z *= (one + t * x(j) * xi(k)) * (one + t * x(j) * x(k));
            return z;
        case Family::BC:
            for (int j = 1; j < n; ++j) z *= (one + t * x(j)) * (one + t * x(j) * x(j));
            for (int j = 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) z *= (one + t * x(j) * xi(k)) * (one + t * x(j) * x(k));
            return z;
        default: throw InputError("no Okada product for family A");
    }
}

nlohmann::json ProductCheck::to_json() const {
    nlohmann::json j{{"pass", pass}, {"z", to_latex(z)}, {"expected", to_latex(expected)}};
    if (!pass) j["difference"] = to_latex(z - expected);
    return j;
}

ProductCheck okada_product_check(Family f, int n, int workers, const Caps& caps) {
    ProductCheck pc;
    StrictPartition rho = StrictPartition::rho(n);
    pc.z = partition_function(build_model(f, rho), make_okada(f, n), workers, caps);
    pc.expected = okada_product(f, n);
    pc.pass = (pc.z == pc.expected);
    return pc;
}

}  // namespace bentice
