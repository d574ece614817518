#include "bentice/weights.hpp"

#include <stdexcept>

namespace bentice {

const Poly& RowWeights::get(Kind k) const {
    switch (k) {
        case Kind::a1: return a1;
        case Kind::a2: return a2;
        case Kind::b1: return b1;
        case Kind::b2: return b2;
        case Kind::c1: return c1;
        case Kind::c2: return c2;
        default: throw std::invalid_argument("not a six-vertex kind: " + kind_name(k));
    }
}

nlohmann::json RowWeights::to_json() const {
    return {{"a1", to_latex(a1)}, {"a2", to_latex(a2)}, {"b1", to_latex(b1)},
            {"b2", to_latex(b2)}, {"c1", to_latex(c1)}, {"c2", to_latex(c2)}};
}

const RowWeights& WeightScheme::row(RowLabel r) const {
    auto it = rows.find(r);
    if (it == rows.end()) throw std::out_of_range("weight scheme '" + name + "' has no row " + r.str());
    return it->second;
}

Poly cross_weight(const RowWeights& j, const RowWeights& k, Kind kind) {
    switch (kind) {
        case Kind::X1: return k.a1 * j.a2 + j.b1 * k.b2;
        case Kind::X2: return j.a1 * k.a2 + k.b1 * j.b2;
        case Kind::X3: return j.c1 * k.c2;
        case Kind::X4: return k.c1 * j.c2;
        case Kind::X5: return j.a1 * k.b2 - k.a1 * j.b2;
        case Kind::X6: return j.a2 * k.b1 - k.a2 * j.b1;
        default: throw std::invalid_argument("not a cross kind: " + kind_name(kind));
    }
}

Poly WeightScheme::vertex_weight(const Vertex& v, Kind k) const {
    switch (v.type) {
        case VType::grid: return row(v.row).get(k);
        case VType::cross: return cross_weight(row(v.row), row(v.row2), k);
        case VType::bend: {
            auto& tbl = (k == Kind::D) ? down : up;
            auto it = tbl.find(v.row);
            if (it == tbl.end())
                throw std::out_of_range("weight scheme '" + name + "' has no " + kind_name(k) + " bend at row " +
                                        v.row.str());
            return it->second;
        }
        case VType::corner: {
            auto& w = (k == Kind::L) ? L : R;
            if (!w) throw std::out_of_range("weight scheme '" + name + "' has no corner weights");
            return *w;
        }
    }
    return Poly();
}

void WeightScheme::set_bend(int j, const Poly& U, const Poly& D) {
    up[RowLabel::plain(j)] = U;
    up[RowLabel::bar(j)] = U;
    down[RowLabel::plain(j)] = D;
    down[RowLabel::bar(j)] = D;
}

nlohmann::json WeightScheme::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["family"] = family_name(family);
    j["n"] = n;
    nlohmann::json rs = nlohmann::json::object();
    for (auto& [r, w] : rows) rs[r.str() + (r.is_central() ? "*" : "")] = w.to_json();
    j["rows"] = rs;
    nlohmann::json bs = nlohmann::json::object();
    for (auto& [r, u] : up) bs[r.str()] = {{"U", to_latex(u)}, {"D", to_latex(down.at(r))}};
    j["bends"] = bs;
    if (L) j["corner"] = {{"L", to_latex(*L)}, {"R", to_latex(*R)}};
    return j;
}

std::optional<RowLabel> central_label(Family f, int n) {
    if (f == Family::Bstar || f == Family::C) return RowLabel::central(0);
    if (f == Family::BC) return RowLabel::central(n);
    return std::nullopt;
}

std::vector<int> paired_indices(Family f, int n) {
    std::vector<int> js;
    if (f == Family::A) return js;
    int m = (f == Family::BC) ? n - 1 : n;
    for (int j = 1; j <= m; ++j) js.push_back(j);
    return js;
}

Poly standard_down(Family f) {
    return (f == Family::B || f == Family::C) ? Poly::i() : Poly(1);
}

namespace {

void add_standard_bends(WeightScheme& s) {
    for (int j : paired_indices(s.family, s.n)) s.set_bend(j, Poly(1), standard_down(s.family));
    if (s.family == Family::C) {
        const RowWeights& c = s.row(RowLabel::central(0));
        s.L = c.a1 - Poly::i() * c.b1;
        s.R = Poly(1);
    }
}

std::vector<int> plain_indices(Family f, int n) {
    if (f == Family::A) {
        std::vector<int> js;
        for (int j = 1; j <= n; ++j) js.push_back(j);
        return js;
    }
    return paired_indices(f, n);
}

}  // namespace

Poly unit_inverse(const Poly& p) {
    if (!p.is_monomial() || !p.terms()[0].second.is_unit())
        throw std::invalid_argument("unit_inverse: not a unit monomial");
    return Poly::monomial(p.terms()[0].first.inverse(), *GaussInt(1).div_exact(p.terms()[0].second));
}

WeightScheme make_generic(Family f, int n) {
    if (n < 1) throw InputError("n must be >= 1");
    WeightScheme s;
    s.name = "generic";
    s.family = f;
    s.n = n;
    for (int j : plain_indices(f, n)) {
        RowLabel r = RowLabel::plain(j);
        RowWeights w;
        w.a1 = Poly::var(vars::a1(r));
        w.a2 = Poly::var(vars::a2(r));
        w.b1 = Poly::var(vars::b1(r));
        w.b2 = Poly::var(vars::b2(r));
        w.c1 = w.a1 * w.a2 + w.b1 * w.b2;
        w.c2 = Poly(1);
        s.rows[r] = w;
        if (f != Family::A) s.rows[r.barred()] = w.barred();
    }
    if (auto c = central_label(f, n)) {
        RowWeights w;
        w.a1 = w.a2 = Poly::var(vars::a(c->index));
        w.b1 = w.b2 = Poly::var(vars::b(c->index));
        w.c1 = w.a1 * w.a1 + w.b1 * w.b1;
        w.c2 = Poly(1);
        s.rows[*c] = w;
    }
    add_standard_bends(s);
    return s;
}

WeightScheme make_deformation_like(Family f, int n, const IndexImage& t_of, const IndexImage& x_of,
                                   std::string name) {
    if (n < 1) throw InputError("n must be >= 1");
    WeightScheme s;
    s.name = std::move(name);
    s.family = f;
    s.n = n;
    Poly i = Poly::i();
    for (int j : plain_indices(f, n)) {
        Poly t = t_of(j), x = x_of(j);
        RowWeights w;
        w.a1 = w.a2 = Poly(1);
        w.b1 = i * t * x;
        w.b2 = i * t * unit_inverse(x);
        w.c1 = Poly(1) - t * t;
        w.c2 = Poly(1);
        s.rows[RowLabel::plain(j)] = w;
        if (f != Family::A) s.rows[RowLabel::bar(j)] = w.barred();
    }
    if (auto c = central_label(f, n)) {
        Poly t = t_of(c->index), x = x_of(c->index);
        RowWeights w;
        w.a1 = w.a2 = Poly(1);
        w.b1 = w.b2 = i * t * x;
        w.c1 = Poly(1) - t * t * x * x;
        w.c2 = Poly(1);
        s.rows[*c] = w;
    }
    add_standard_bends(s);
    return s;
}

WeightScheme make_deformation(Family f, int n) {
    return make_deformation_like(
        f, n, [](int j) { return Poly::var(vars::qj(j), 2); }, [](int j) { return Poly::var(vars::x(j)); },
        "deformation");
}

namespace {

IndexImage special_x(Family f, int n) {
    return [f, n](int j) -> Poly {
        if (f == Family::C && j == 0) return Poly(-1);
        if (f == Family::Bstar && j == 0) return Poly(1);
        if (f == Family::BC && j == n) return Poly(1);
        return Poly::var(vars::x(j));
    };
}

}  // namespace

WeightScheme make_okada(Family f, int n) {
    // t_j = t = q^2 for B and C; t_j = i*sqrt(t) = i*q for the others
    bool plain_t = (f == Family::B || f == Family::C || f == Family::A);
    IndexImage t_of = [plain_t](int) { return plain_t ? Poly::var(vars::q(), 2) : Poly::i() * Poly::var(vars::q()); };
    return make_deformation_like(f, n, t_of, special_x(f, n), "okada");
}

WeightScheme make_character(Family f, int n) {
    return make_deformation_like(f, n, [](int) { return Poly(1); }, special_x(f, n), "character");
}

WeightScheme make_tokuyama(int n) {
    if (n < 1) throw InputError("n must be >= 1");
    WeightScheme s;
    s.name = "tokuyama";
    s.family = Family::A;
    s.n = n;
    Poly t = Poly::var(vars::q(), 2);
    for (int j = 1; j <= n; ++j) {
        Poly x = Poly::var(vars::x(j));
        s.rows[RowLabel::plain(j)] = {Poly(1), x, t, x, Poly(1) + t, x};
    }
    return s;
}

WeightScheme make_constant(Family f, int n, const RowWeights& w) {
    WeightScheme s;
    s.name = "constant";
    s.family = f;
    s.n = n;
    for (int j : plain_indices(f, n)) {
        s.rows[RowLabel::plain(j)] = w;
        if (f != Family::A) s.rows[RowLabel::bar(j)] = w.barred();
        if (f != Family::A) s.set_bend(j, Poly(1), Poly(1));
    }
    if (auto c = central_label(f, n)) s.rows[*c] = w;
    if (f == Family::C) s.L = s.R = Poly(1);
    return s;
}

Poly delta(const RowWeights& w) { return w.a1 * w.a2 + w.b1 * w.b2 - w.c1 * w.c2; }

Poly delta(const WeightScheme& s, RowLabel r) { return delta(s.row(r)); }

std::vector<std::string> check_scheme(const WeightScheme& s) {
    std::vector<std::string> out;
    for (auto& [r, w] : s.rows)
        if (!delta(w).is_zero()) out.push_back("free-fermion: Delta^(" + r.str() + ") = " + to_text(delta(w)));
    for (auto& [r, w] : s.rows) {
        if (r.kind != RowLabel::Kind::plain) continue;
        auto it = s.rows.find(r.barred());
        if (it == s.rows.end()) continue;
        const RowWeights& b = it->second;
        if (w.a1 != b.a2 || w.a2 != b.a1) out.push_back("symmetry-1: a1/a2 at rows " + r.str() + ", " + r.barred().str());
        if (w.b1 != b.b2 || w.b2 != b.b1) out.push_back("symmetry-1: b1/b2 at rows " + r.str() + ", " + r.barred().str());
        if (w.c1 != b.c1 || w.c2 != b.c2) out.push_back("symmetry-1: c1/c2 at rows " + r.str() + ", " + r.barred().str());
    }
    for (auto* tbl : {&s.up, &s.down}) {
        const char* nm = tbl == &s.up ? "U" : "D";
        for (auto& [r, v] : *tbl) {
            if (r.kind != RowLabel::Kind::plain) continue;
            auto it = tbl->find(r.barred());
            if (it != tbl->end() && it->second != v)
                out.push_back(std::string("symmetry-2: ") + nm + "^(" + r.str() + ") != " + nm + "^(" + r.barred().str() + ")");
        }
    }
    if (auto c = central_label(s.family, s.n)) {
        auto it = s.rows.find(*c);
        if (it != s.rows.end()) {
            const RowWeights& w = it->second;
            if (w.a1 != w.a2) out.push_back("central: a1 != a2 at row " + c->str());
            if (w.b1 != w.b2) out.push_back("central: b1 != b2 at row " + c->str());
            if (w.c1 * w.c2 != w.a1 * w.a1 + w.b1 * w.b1) out.push_back("central: c1 c2 != a^2 + b^2 at row " + c->str());
        }
    }
    for (auto& [r, u] : s.up)
        if (u != Poly(1)) out.push_back("bends: U^(" + r.str() + ") != 1");
    for (auto& [r, d] : s.down)
        if (d != standard_down(s.family)) out.push_back("bends: D^(" + r.str() + ") != " + to_text(standard_down(s.family)));
    if (s.family == Family::C) {
        auto c = central_label(s.family, s.n);
        auto it = s.rows.find(*c);
        if (!s.R || *s.R != Poly(1)) out.push_back("bends: R != 1");
        if (it != s.rows.end() && (!s.L || *s.L != it->second.a1 - Poly::i() * it->second.b1))
            out.push_back("bends: L != a^(0) - i b^(0)");
    }
    return out;
}

std::string scheme_label(const WeightScheme& s) { return s.name; }

}  // namespace bentice
