#include "bentice/character.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bentice {

SignedPerm SignedPerm::identity(int n) {
    SignedPerm w;
    w.sigma.resize(n);
    std::iota(w.sigma.begin(), w.sigma.end(), 1);
    w.v.assign(n, 1);
    return w;
}

int SignedPerm::negatives() const { return (int)std::count(v.begin(), v.end(), -1); }

int SignedPerm::length(WeylType t) const {
    // conjugate by the reversal so the sign generator acts on the first entry
    int m = n();
    std::vector<int> a(m);
    for (int j = 0; j < m; ++j) a[j] = v[m - 1 - j] * (m + 1 - sigma[m - 1 - j]);
    int inv = 0, nsp = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (a[i] > a[j]) ++inv;
            if (a[i] + a[j] < 0) ++nsp;
        }
    if (t == WeylType::A) return inv;
    if (t == WeylType::D) return inv + nsp;
    return inv + nsp + negatives();
}

int SignedPerm::det() const {
    int s = negatives() % 2 ? -1 : 1;
    std::vector<bool> seen(n(), false);
    for (int j = 0; j < n(); ++j) {
        if (seen[j]) continue;
        int len = 0;
        for (int k = j; !seen[k]; k = sigma[k] - 1) seen[k] = true, ++len;
        if (len % 2 == 0) s = -s;
    }
    return s;
}

SignedPerm SignedPerm::operator*(const SignedPerm& o) const {
    if (o.n() != n()) throw InputError("signed permutations of different rank");
    SignedPerm r;
    r.sigma.resize(n());
    r.v.resize(n());
    for (int j = 0; j < n(); ++j) {
        r.sigma[j] = o.sigma[sigma[j] - 1];
        r.v[j] = v[j] * o.v[sigma[j] - 1];
    }
    return r;
}

std::vector<int> SignedPerm::act(const std::vector<int>& alpha) const {
    std::vector<int> r(n());
    for (int j = 0; j < n(); ++j) r[j] = v[j] * alpha[sigma[j] - 1];
    return r;
}

std::string SignedPerm::str() const {
    std::ostringstream os;
    os << "[";
    for (int j = 0; j < n(); ++j) os << (j ? "," : "") << (v[j] < 0 ? "-" : "") << sigma[j];
    os << "]";
    return os.str();
}

std::vector<SignedPerm> weyl_group(WeylType t, int n) {
    if (n < 1) throw InputError("n must be >= 1");
    std::vector<SignedPerm> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int masks = t == WeylType::A ? 1 : 1 << n;
        for (int mask = 0; mask < masks; ++mask) {
            if (t == WeylType::D && std::popcount(unsigned(mask)) % 2) continue;
            SignedPerm w;
            w.sigma = perm;
            w.v.assign(n, 1);
            for (int j = 0; j < n; ++j)
                if (mask >> j & 1) w.v[j] = -1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedPerm> simple_reflections(WeylType t, int n) {
    std::vector<SignedPerm> gens;
    for (int j = 1; j < n; ++j) {
        auto s = SignedPerm::identity(n);
        std::swap(s.sigma[j - 1], s.sigma[j]);
        gens.push_back(s);
    }
    if (t == WeylType::BC) {
        auto s = SignedPerm::identity(n);
        s.v[n - 1] = -1;
        gens.push_back(s);
    } else if (t == WeylType::D && n >= 2) {
        auto s = SignedPerm::identity(n);
        std::swap(s.sigma[n - 2], s.sigma[n - 1]);
        s.v[n - 2] = s.v[n - 1] = -1;
        gens.push_back(s);
    }
    return gens;
}

std::vector<int> word_lengths(WeylType t, int n) {
    auto group = weyl_group(t, n);
    auto gens = simple_reflections(t, n);
    std::map<SignedPerm, int> dist;
    std::queue<SignedPerm> todo;
    dist[SignedPerm::identity(n)] = 0;
    todo.push(SignedPerm::identity(n));
    while (!todo.empty()) {
        auto w = todo.front();
        todo.pop();
        for (auto& s : gens) {
            auto u = w * s;
            if (dist.emplace(u, dist[w] + 1).second) todo.push(u);
        }
    }
    std::vector<int> out;
    for (auto& w : group) {
        auto it = dist.find(w);
        if (it == dist.end()) throw std::logic_error("generators do not reach " + w.str());
        out.push_back(it->second);
    }
    return out;
}

std::vector<int> weyl_vector(RhoKind r, int n) {
    std::vector<int> rho(n);
    for (int j = 1; j <= n; ++j) {
        switch (r) {
        case RhoKind::A:
        case RhoKind::C: rho[j - 1] = 2 * (n + 1 - j); break;
        case RhoKind::B: rho[j - 1] = 2 * (n - j) + 1; break;
        case RhoKind::D: rho[j - 1] = 2 * (n - j); break;
        }
    }
    return rho;
}

namespace {

Poly x_monomial(const std::vector<int>& doubled) {
    Monomial m;
    for (size_t j = 0; j < doubled.size(); ++j) m.e[vars::x((int)j + 1)] = int16_t(doubled[j]);
    return Poly::monomial(m);
}

void check_dominant(const std::vector<int>& mu) {
    for (size_t j = 0; j < mu.size(); ++j) {
        if (mu[j] < 0) throw InputError("weight must be nonnegative");
        if (j && mu[j] > mu[j - 1]) throw InputError("weight must be weakly decreasing");
    }
}

}  // namespace

Poly alternant(WeylType t, RhoKind r, int n, const std::vector<int>& mu) {
    if ((int)mu.size() != n) throw InputError("weight has wrong length");
    check_dominant(mu);
    auto e = weyl_vector(r, n);
    for (int j = 0; j < n; ++j) e[j] += 2 * mu[j];
    std::vector<Poly::Term> terms;
    for (auto& w : weyl_group(t, n)) {
        Monomial m;
        auto we = w.act(e);
        for (int j = 0; j < n; ++j) m.e[vars::x(j + 1)] = int16_t(we[j]);
        terms.emplace_back(m, GaussInt(w.det()));
    }
    return Poly::from_terms(std::move(terms));
}

Poly weyl_character(WeylType t, RhoKind r, int n, const std::vector<int>& mu) {
    Poly num = alternant(t, r, n, mu), den = alternant(t, r, n, std::vector<int>(n, 0));
    if (t == WeylType::D && r == RhoKind::B) {
        // odd symplectic: the last variable is specialized to 1 before dividing
        Substitution last{{vars::x(n), Poly(1)}};
        num = substitute(num, last);
        den = substitute(den, last);
    }
    auto q = exact_divide(num, den);
    if (!q) throw std::logic_error("alternant ratio is not a Laurent polynomial");
    return *q;
}

WeylType family_group(Family f) {
    switch (f) {
    case Family::A: return WeylType::A;
    case Family::D:
    case Family::BC: return WeylType::D;
    default: return WeylType::BC;
    }
}

RhoKind family_rho(Family f) {
    switch (f) {
    case Family::A: return RhoKind::A;
    case Family::B:
    case Family::Bstar:
    case Family::BC: return RhoKind::B;
    case Family::C:
    case Family::Cstar: return RhoKind::C;
    case Family::D: return RhoKind::D;
    }
    return RhoKind::A;
}

std::vector<int> mu_of(const StrictPartition& lambda) {
    std::vector<int> mu(lambda.n());
    for (int j = 0; j < lambda.n(); ++j) mu[j] = lambda.parts[j] - (lambda.n() - j);
    return mu;
}

namespace {

int part_index(const StrictPartition& lambda, int label) {
    for (int k = 0; k < lambda.n(); ++k)
        if (lambda.parts[k] == label) return k + 1;
    return 0;
}

bool zero_kind(Kind k) { return k == Kind::c1 || k == Kind::L; }

// edge bit 0 means the arrow points up
bool up_above(const ModelSpec& spec, const IceState& s, int r, int c) {
    return s.bits[spec.diagram.vertices[spec.grid[r][c]].e[0]] == 0;
}
bool up_below(const ModelSpec& spec, const IceState& s, int r, int c) {
    return s.bits[spec.diagram.vertices[spec.grid[r][c]].e[1]] == 0;
}

struct RowC2 {
    int row = -1, col = -1;  // row and column index in the grid
};

// the unique c2 of each grid row, if any
std::vector<RowC2> c2_positions(const ModelSpec& spec, const IceState& s) {
    std::vector<RowC2> out(spec.rows.size());
    for (size_t r = 0; r < spec.rows.size(); ++r)
        for (size_t c = 0; c < spec.grid[r].size(); ++c) {
            int v = spec.grid[r][c];
            if (v < 0 || state_kind(spec.diagram, s, v) != Kind::c2) continue;
            if (out[r].row >= 0) throw std::logic_error("two c2 vertices in row " + spec.rows[r].str());
            out[r] = {(int)r, (int)c};
        }
    return out;
}

int row_of(const ModelSpec& spec, RowLabel l) {
    for (size_t r = 0; r < spec.rows.size(); ++r)
        if (spec.rows[r] == l) return (int)r;
    return -1;
}

void require_nonzero(const ModelSpec& spec, const IceState& s) {
    if (spec.family == Family::A) throw InputError("the Weyl bijection needs a bent family");
    for (size_t v = 0; v < spec.diagram.vertices.size(); ++v)
        if (zero_kind(state_kind(spec.diagram, s, (int)v)))
            throw InputError("state has zero character weight at " + describe_vertex(spec.diagram, (int)v));
}

}  // namespace

SignedPerm state_to_weyl(const ModelSpec& spec, const IceState& s) {
    require_nonzero(spec, s);
    int n = spec.n;
    auto c2 = c2_positions(spec, s);
    SignedPerm w;
    w.sigma.assign(n, 0);
    w.v.assign(n, 1);
    int pending = -1;
    auto place = [&](int j, const RowC2& p, int sign) {
        int label = spec.columns[p.col];
        int k = part_index(spec.lambda, label);
        if (!k) throw std::logic_error("c2 in a column that is not a part");
        w.sigma[j - 1] = k;
        w.v[j - 1] = sign;
        bool half = spec.has_half_column && p.col >= spec.full_columns;
        if (half) pending = j;
    };
    for (int j : paired_indices(spec.family, n)) {
        int top = row_of(spec, RowLabel::plain(j)), bot = row_of(spec, RowLabel::bar(j));
        bool in_top = c2[top].row >= 0, in_bot = c2[bot].row >= 0;
        if (in_top == in_bot) throw std::logic_error("pair " + std::to_string(j) + " lacks a unique c2");
        if (in_top)
            place(j, c2[top], -1);
        else
            place(j, c2[bot], 1);
    }
    if (spec.family == Family::BC) {
        int r = row_of(spec, RowLabel::central(n));
        if (c2[r].row < 0) throw std::logic_error("central row lacks a c2");
        place(n, c2[r], 1);
        pending = n;
    }
    if (pending > 0 && (spec.family == Family::D || spec.family == Family::BC)) {
        w.v[pending - 1] = 1;
        if (w.negatives() % 2) w.v[pending - 1] = -1;
    }
    std::vector<int> seen = w.sigma;
    std::sort(seen.begin(), seen.end());
    for (int j = 0; j < n; ++j)
        if (seen[j] != j + 1) throw std::logic_error("c2 columns do not form a permutation");
    return w;
}

Poly weyl_state_weight(const SignedPerm& w, Family f, const StrictPartition& lambda) {
    if (f == Family::A) throw InputError("no Weyl closed form for family A");
    int n = lambda.n();
    if (w.n() != n) throw InputError("group element has wrong rank");
    if (family_group(f) == WeylType::D && w.negatives() % 2) throw InputError("element is not in the type D group");
    auto mu = mu_of(lambda);
    auto rho = weyl_vector(family_rho(f), n);
    std::vector<int> e(n);
    for (int j = 0; j < n; ++j) e[j] = 2 * mu[j] + rho[j];
    auto we = w.act(e);
    for (int j = 0; j < n; ++j) we[j] += rho[j];
    if (f == Family::BC) we[n - 1] = 0;
    int sign = w.det();
    if (f != Family::D && f != Family::BC && n % 2) sign = -sign;
    int size_mu = std::accumulate(mu.begin(), mu.end(), 0);
    return (Poly::i().pow(size_mu) * Poly(sign)) * x_monomial(we);
}

int phi(const ModelSpec& spec, const IceState& s) {
    auto w = state_to_weyl(spec, s);
    int n = spec.n;
    auto c2 = c2_positions(spec, s);
    const auto& lam = spec.lambda;
    // parts strictly greater than lambda_sigma(j) are the full columns left of it
    auto count_left = [&](int r, int k, bool above) {
        int target = lam.parts[k - 1], cnt = 0;
        for (int c = 0; c < spec.full_columns; ++c) {
            int label = spec.columns[c];
            if (label <= target || !lam.contains(label)) continue;
            if (above ? up_above(spec, s, r, c) : up_below(spec, s, r, c)) ++cnt;
        }
        return cnt;
    };
    int total = 0;
    for (int j : paired_indices(spec.family, n)) {
        int top = row_of(spec, RowLabel::plain(j)), bot = row_of(spec, RowLabel::bar(j));
        int k = w.sigma[j - 1];
        if (c2[top].row >= 0) {
            total += count_left(top, k, true) - n + (spec.family == Family::D ? 1 : 0);
        } else {
            total += count_left(bot, k, false) - j + 1;
        }
    }
    if (spec.family == Family::BC) {
        int r = row_of(spec, RowLabel::central(n));
        int target = lam.parts[w.sigma[n - 1] - 1], minus = 0;
        for (int c = 0; c < spec.full_columns; ++c) {
            int label = spec.columns[c];
            if (label > target || !lam.contains(label)) continue;
            if (up_above(spec, s, r, c)) ++minus;
        }
        total += 1 - minus;
    }
    return total;
}

nlohmann::json CharacterCheck::to_json() const {
    return {{"pass", pass},
            {"Z", bentice::to_json(z)},
            {"Z_rho", bentice::to_json(rho_z)},
            {"chi", bentice::to_json(chi)},
            {"expected", bentice::to_json(expected)}};
}

CharacterCheck character_theorem_check(Family f, const StrictPartition& lambda, int workers, const Caps& caps) {
    if (f == Family::A) throw InputError("the character theorem covers the bent families");
    int n = lambda.n();
    check_caps(f, lambda, caps);
    auto scheme = make_character(f, n);
    CharacterCheck r;
    r.z = partition_function(build_model(f, lambda), scheme, workers, caps);
    r.rho_z = partition_function(build_model(f, StrictPartition::rho(n)), scheme, workers, caps);
    auto mu = mu_of(lambda);
    r.chi = weyl_character(family_group(f), family_rho(f), n, mu);
    int size_mu = std::accumulate(mu.begin(), mu.end(), 0);
    r.expected = Poly::i().pow(size_mu) * r.rho_z * r.chi;
    r.pass = r.z == r.expected;
    return r;
}

nlohmann::json WeylStateCheck::to_json() const {
    nlohmann::json j = {{"pass", pass},
                        {"nonzero_states", states},
                        {"group_order", group_order},
                        {"bijective", bijective},
                        {"phi_parity", phi_parity}};
    if (witness) j["witness"] = *witness;
    return j;
}

WeylStateCheck weyl_state_check(Family f, const StrictPartition& lambda, const Caps& caps) {
    if (f == Family::A) throw InputError("the Weyl bijection needs a bent family");
    int n = lambda.n();
    auto spec = build_model(f, lambda);
    auto scheme = make_character(f, n);
    auto type = family_group(f);
    WeylStateCheck r;
    r.group_order = (int)weyl_group(type, n).size();
    std::set<SignedPerm> images;
    auto fail = [&](const std::string& why) {
        r.pass = false;
        if (!r.witness) r.witness = why;
    };
    for (auto& s : enumerate_states(spec, caps)) {
        Poly wt = state_weight(spec.diagram, s, scheme);
        if (wt.is_zero()) continue;
        ++r.states;
        SignedPerm w;
        try {
            w = state_to_weyl(spec, s);
        } catch (const std::exception& e) {
            r.bijective = false;
            fail(e.what());
            continue;
        }
        if (!images.insert(w).second) {
            r.bijective = false;
            fail("two states map to " + w.str());
        }
        if (type == WeylType::D && w.negatives() % 2) {
            r.bijective = false;
            fail("state maps to " + w.str() + ", outside the type D group");
            continue;
        }
        Poly closed = weyl_state_weight(w, f, lambda);
        if (closed != wt) fail("w = " + w.str() + ": state weight " + to_text(wt) + " vs closed form " + to_text(closed));
        int ph = phi(spec, s), len = w.length(type);
        if (((ph - len) % 2 + 2) % 2) {
            r.phi_parity = false;
            fail("w = " + w.str() + ": phi = " + std::to_string(ph) + ", length = " + std::to_string(len));
        }
    }
    if (r.states != r.group_order) {
        r.bijective = false;
        fail(std::to_string(r.states) + " nonzero states for a group of order " + std::to_string(r.group_order));
    }
    return r;
}

Poly schur(int n, const std::vector<int>& mu) { return weyl_character(WeylType::A, RhoKind::A, n, mu); }

Poly at_t_minus_one(const Poly& p) { return substitute(p, {{vars::q(), Poly::i()}}); }

nlohmann::json TokuyamaCheck::to_json() const {
    return {{"pass", pass}, {"Z", bentice::to_json(z)}, {"expected", bentice::to_json(expected)}};
}

TokuyamaCheck tokuyama_check(const StrictPartition& lambda, int workers, const Caps& caps) {
    int n = lambda.n();
    check_caps(Family::A, lambda, caps);
    TokuyamaCheck r;
    r.z = partition_function(build_model(Family::A, lambda), make_tokuyama(n), workers, caps);
    Poly t = Poly::var(vars::q(), 2);
    Poly prod(1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            prod *= Poly(1) + t * Poly::var(vars::x(j)) * Poly::var(vars::x(i), -1);
    r.expected = x_monomial(weyl_vector(RhoKind::A, n)) * prod * schur(n, mu_of(lambda));
    r.pass = r.z == r.expected;
    return r;
}

}  // namespace bentice
