#include "bentice/relations.hpp"

#include "bentice/state.hpp"

#include <map>
#include <stdexcept>

namespace bentice {

namespace {

class Builder {
public:
    explicit Builder(std::string shape) { ld_.shape = std::move(shape); }

    int edge(const std::string& name) {
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        int id = ld_.diagram.add_edge(true, name);
        ids_[name] = id;
        return id;
    }
    void fix(const std::string& name, int bit) { ld_.diagram.edges[edge(name)].fixed = int8_t(bit); }
    void vertical(const std::string& name) { ld_.diagram.edges[edge(name)].horizontal = false; }

    void grid(RowLabel r, const std::string& N, const std::string& S, const std::string& W, const std::string& E) {
        vertical(N);
        vertical(S);
        Vertex v;
        v.type = VType::grid;
        v.row = r;
        v.e = {edge(N), edge(S), edge(W), edge(E)};
        ld_.diagram.add_vertex(v);
    }
    void cross(RowLabel j, RowLabel k, const std::string& LT, const std::string& LB, const std::string& RT,
               const std::string& RB) {
        Vertex v;
        v.type = VType::cross;
        v.row = j;
        v.row2 = k;
        v.e = {edge(LT), edge(LB), edge(RT), edge(RB)};
        ld_.diagram.add_vertex(v);
    }
    void bend(RowLabel top, const std::string& T, const std::string& B) {
        Vertex v;
        v.type = VType::bend;
        v.row = top;
        v.e = {edge(T), edge(B), -1, -1};
        ld_.diagram.add_vertex(v);
    }
    void corner(const std::string& W, const std::string& S) {
        vertical(S);
        Vertex v;
        v.type = VType::corner;
        v.row = RowLabel::central(0);
        v.e = {edge(W), edge(S), -1, -1};
        ld_.diagram.add_vertex(v);
    }
    LocalDiagram done(std::vector<std::string> slots) {
        ld_.slots = std::move(slots);
        for (auto& s : ld_.slots) edge(s);
        return ld_;
    }

private:
    LocalDiagram ld_;
    std::map<std::string, int> ids_;
};

RowLabel P(int j) { return RowLabel::plain(j); }
RowLabel Bar(int j) { return RowLabel::bar(j); }

std::string slot_text(const LocalDiagram& ld, unsigned a) {
    std::string s;
    for (size_t k = 0; k < ld.slots.size(); ++k) {
        const Edge& e = ld.diagram.edges[ld.diagram.edge_by_name(ld.slots[k])];
        bool bit = (a >> k) & 1;
        s += (k ? " " : "") + ld.slots[k] + "=" + (e.horizontal ? (bit ? "R" : "L") : (bit ? "D" : "U"));
    }
    return s;
}

// compare both sides on every boundary assignment
Verdict compare_sides(const std::string& name, const std::pair<LocalDiagram, LocalDiagram>& sides,
                      const WeightScheme& w) {
    Verdict v;
    v.relation = name;
    const auto& [lhs, rhs] = sides;
    unsigned total = 1u << lhs.slots.size();
    for (unsigned a = 0; a < total; ++a) {
        Poly zl = local_partition(lhs, w, a), zr = local_partition(rhs, w, a);
        ConfigResult c;
        c.boundary = slot_text(lhs, a);
        c.pass = (zl == zr);
        c.lhs = to_text(zl);
        c.rhs = to_text(zr);
        if (!c.pass && v.pass) {
            v.pass = false;
            v.witness = c.boundary + ": lhs = " + c.lhs + ", rhs = " + c.rhs;
        }
        v.configs.push_back(c);
    }
    return v;
}

// the left side must equal a boundary-independent multiple of the right side
Verdict compare_ratio(const std::string& name, const std::pair<LocalDiagram, LocalDiagram>& sides,
                      const WeightScheme& w, const std::optional<Poly>& expected) {
    Verdict v;
    v.relation = name;
    const auto& [lhs, rhs] = sides;
    unsigned total = 1u << lhs.slots.size();
    std::vector<Poly> zl(total), zr(total);
    for (unsigned a = 0; a < total; ++a) {
        zl[a] = local_partition(lhs, w, a);
        zr[a] = local_partition(rhs, w, a);
    }
    // reference boundary: first with a nonzero right side
    int ref = -1;
    for (unsigned a = 0; a < total; ++a)
        if (!zr[a].is_zero()) {
            ref = (int)a;
            break;
        }
    if (ref < 0) throw std::logic_error(name + ": right side vanishes on every boundary");
    for (unsigned a = 0; a < total; ++a) {
        ConfigResult c;
        c.boundary = slot_text(lhs, a);
        c.pass = (zl[a] * zr[ref] == zl[ref] * zr[a]);
        c.lhs = to_text(zl[a]);
        c.rhs = to_text(zr[a]);
        if (!c.pass && v.pass) {
            v.pass = false;
            v.witness = c.boundary + " vs " + slot_text(lhs, ref) + ": lhs = " + c.lhs + ", rhs = " + c.rhs +
                        "; reference lhs = " + to_text(zl[ref]) + ", rhs = " + to_text(zr[ref]);
        }
        v.configs.push_back(c);
    }
    if (expected) v.expected_ratio = *expected;
    if (v.pass) {
        auto q = exact_divide(zl[ref], zr[ref]);
        if (!q) {
            v.pass = false;
            v.witness = "ratio is not a polynomial at " + slot_text(lhs, ref);
        } else {
            v.ratio = *q;
            if (expected && *q != *expected) {
                v.pass = false;
                v.witness = "ratio " + to_text(*q) + " differs from closed form " + to_text(*expected);
            }
        }
    }
    return v;
}

}  // namespace

Poly local_partition(const LocalDiagram& ld, const WeightScheme& w, unsigned assignment) {
    Diagram d = ld.diagram;
    for (size_t k = 0; k < ld.slots.size(); ++k) d.edges[d.edge_by_name(ld.slots[k])].fixed = int8_t((assignment >> k) & 1);
    return partition_function(d, w);
}

nlohmann::json Verdict::to_json(bool include_passing) const {
    nlohmann::json j;
    j["relation"] = relation;
    j["pass"] = pass;
    nlohmann::json cs = nlohmann::json::array();
    int passed = 0;
    for (auto& c : configs) {
        passed += c.pass;
        if (!c.pass || include_passing) {
            nlohmann::json e{{"boundary", c.boundary}, {"pass", c.pass}};
            if (!c.pass) e["lhs"] = c.lhs, e["rhs"] = c.rhs;
            cs.push_back(e);
        }
    }
    j["assignments"] = configs.size();
    j["assignments_passed"] = passed;
    j["details"] = cs;
    if (witness) j["witness"] = *witness;
    if (ratio) j["ratio"] = to_latex(*ratio);
    if (expected_ratio) j["expected_ratio"] = to_latex(*expected_ratio);
    return j;
}

// ------------------------------------------------------------------ diagrams

std::pair<LocalDiagram, LocalDiagram> ybe_diagrams(RowLabel j, RowLabel k) {
    std::vector<std::string> slots{"alpha", "beta", "gamma", "delta", "epsilon", "phi"};
    Builder l("ybe-triple");
    l.cross(j, k, "alpha", "beta", "m1", "m2");
    l.grid(k, "phi", "m3", "m1", "epsilon");
    l.grid(j, "m3", "gamma", "m2", "delta");
    Builder r("ybe-triple");
    r.grid(j, "phi", "m3", "alpha", "m1");
    r.grid(k, "m3", "gamma", "beta", "m2");
    r.cross(j, k, "m1", "m2", "epsilon", "delta");
    return {l.done(slots), r.done(slots)};
}

std::pair<LocalDiagram, LocalDiagram> bend_ybe_diagrams(int j, int k) {
    std::vector<std::string> slots{"alpha", "beta", "gamma", "delta"};
    // rows top to bottom: j, k, j-bar, k-bar
    Builder l("bend-quad");
    l.cross(P(j), P(k), "alpha", "beta", "m1", "m2");
    l.bend(P(k), "m1", "delta");
    l.bend(P(j), "m2", "gamma");
    Builder r("bend-quad");
    r.cross(Bar(j), Bar(k), "gamma", "delta", "m3", "m4");
    r.bend(P(j), "alpha", "m4");
    r.bend(P(k), "beta", "m3");
    return {l.done(slots), r.done(slots)};
}

std::pair<LocalDiagram, LocalDiagram> caduceus_diagrams(int j, RowLabel star) {
    std::vector<std::string> slots{"alpha", "beta", "gamma", "lambda", "delta", "kappa", "phi", "epsilon"};
    // rows top to bottom: j-bar, star, j
    Builder l("caduceus");
    l.cross(Bar(j), star, "alpha", "beta", "e1", "e2");
    l.cross(Bar(j), P(j), "e2", "gamma", "e3", "e4");
    l.cross(star, P(j), "e1", "e3", "e5", "e6");
    l.grid(P(j), "lambda", "v1", "e5", "kappa");
    l.grid(star, "v1", "v2", "e6", "phi");
    l.grid(Bar(j), "v2", "delta", "e4", "epsilon");
    Builder r("caduceus");
    r.grid(Bar(j), "lambda", "v1", "alpha", "f1");
    r.grid(star, "v1", "v2", "beta", "f2");
    r.grid(P(j), "v2", "delta", "gamma", "f3");
    r.cross(Bar(j), star, "f1", "f2", "f4", "f5");
    r.cross(Bar(j), P(j), "f5", "f3", "f6", "epsilon");
    r.cross(star, P(j), "f4", "f6", "kappa", "phi");
    return {l.done(slots), r.done(slots)};
}

std::string fish_name(FishVariant v) {
    switch (v) {
        case FishVariant::B: return "fish-B";
        case FishVariant::Cstar_D_no1: return "fish-Cstar";
        case FishVariant::D_with1: return "fish-D";
    }
    return "fish";
}

std::string jellyfish_name(JellyfishVariant v) {
    switch (v) {
        case JellyfishVariant::C: return "jellyfish-C";
        case JellyfishVariant::Bstar: return "jellyfish-Bstar";
        case JellyfishVariant::BC: return "jellyfish-BC";
    }
    return "jellyfish";
}

std::pair<LocalDiagram, LocalDiagram> fish_diagrams(int j, FishVariant v) {
    // rows top to bottom: j-bar, j
    if (v == FishVariant::B) {
        std::vector<std::string> slots{"alpha", "beta"};
        Builder l(fish_name(v));
        l.cross(Bar(j), P(j), "alpha", "beta", "m1", "m2");
        l.bend(P(j), "m1", "m2");
        Builder r(fish_name(v));
        r.bend(Bar(j), "alpha", "beta");
        return {l.done(slots), r.done(slots)};
    }
    // a half column crosses the bottom row only; its top edge is fixed
    int top = (v == FishVariant::Cstar_D_no1) ? 1 : 0;
    std::vector<std::string> slots{"alpha", "beta", "gamma"};
    Builder l(fish_name(v));
    l.cross(Bar(j), P(j), "alpha", "beta", "m1", "m2");
    l.grid(Bar(j), "top", "gamma", "m2", "m3");
    l.bend(P(j), "m1", "m3");
    l.fix("top", top);
    Builder r(fish_name(v));
    r.grid(P(j), "top", "gamma", "beta", "m3");
    r.bend(Bar(j), "alpha", "m3");
    r.fix("top", top);
    return {l.done(slots), r.done(slots)};
}

std::pair<LocalDiagram, LocalDiagram> jellyfish_diagrams(int j, JellyfishVariant v, int c) {
    // rows top to bottom: j-bar, central, j; the braid leaves j, central, j-bar
    RowLabel star = RowLabel::central(c);
    auto braid = [&](Builder& b, const std::string& mid_in) {
        b.cross(Bar(j), star, "alpha", mid_in, "e1", "e2");
        b.cross(Bar(j), P(j), "e2", "gamma", "e3", "e4");
        b.cross(star, P(j), "e1", "e3", "e5", "e6");
    };
    if (v == JellyfishVariant::C) {
        std::vector<std::string> slots{"alpha", "beta", "gamma", "delta"};
        Builder l(jellyfish_name(v));
        braid(l, "beta");
        l.corner("e6", "h");
        l.grid(Bar(j), "h", "delta", "e4", "e7");
        l.bend(P(j), "e5", "e7");
        Builder r(jellyfish_name(v));
        r.corner("beta", "h");
        r.grid(P(j), "h", "delta", "gamma", "e7");
        r.bend(Bar(j), "alpha", "e7");
        return {l.done(slots), r.done(slots)};
    }
    // central row with both ends fixed: left end in, right end out (Bstar) or in (BC)
    int right_end = (v == JellyfishVariant::Bstar) ? 1 : 0;
    int left_end = (v == JellyfishVariant::Bstar) ? 1 : 0;
    std::vector<std::string> slots{"alpha", "gamma"};
    Builder l(jellyfish_name(v));
    braid(l, "beta");
    l.bend(P(j), "e5", "e4");
    l.fix("beta", left_end);
    l.fix("e6", right_end);
    Builder r(jellyfish_name(v));
    r.bend(Bar(j), "alpha", "gamma");
    return {l.done(slots), r.done(slots)};
}

// ------------------------------------------------------------------ checks

RowWeights generic_row(int j) {
    RowLabel r = RowLabel::plain(j);
    RowWeights w;
    w.a1 = Poly::var(vars::a1(r));
    w.a2 = Poly::var(vars::a2(r));
    w.b1 = Poly::var(vars::b1(r));
    w.b2 = Poly::var(vars::b2(r));
    w.c1 = w.a1 * w.a2 + w.b1 * w.b2;
    w.c2 = Poly(1);
    return w;
}

Verdict ybe_check(const RowWeights& wj, const RowWeights& wk) {
    WeightScheme s;
    s.name = "ybe";
    s.rows[P(1)] = wj;
    s.rows[P(2)] = wk;
    return compare_sides("ybe", ybe_diagrams(P(1), P(2)), s);
}

Verdict bend_ybe_check(const WeightScheme& s, int j, int k) {
    return compare_sides("bend-ybe", bend_ybe_diagrams(j, k), s);
}

Verdict caduceus_check(const WeightScheme& s, int j) {
    auto star = central_label(s.family, s.n);
    if (!star) throw InputError("caduceus needs a family with a central row (Bstar, C, BC)");
    return compare_sides("caduceus", caduceus_diagrams(j, *star), s);
}

Poly fish_closed_form(const WeightScheme& s, int j, FishVariant v) {
    const RowWeights& w = s.row(P(j));
    Poly i = Poly::i();
    switch (v) {
        case FishVariant::B: return (w.a1 - i * w.b2) * (w.a2 + i * w.b1);
        case FishVariant::Cstar_D_no1: return w.a2 * w.a2 + w.b1 * w.b1;
        case FishVariant::D_with1: return w.a1 * w.a1 + w.b2 * w.b2;
    }
    return Poly();
}

Poly jellyfish_closed_form(const WeightScheme& s, int j, JellyfishVariant v) {
    const RowWeights& w = s.row(P(j));
    auto c = central_label(s.family, s.n);
    if (!c) throw InputError("jellyfish needs a family with a central row");
    const RowWeights& z = s.row(*c);
    const Poly& a0 = z.a1;
    const Poly& b0 = z.b1;
    Poly i = Poly::i();
    switch (v) {
        case JellyfishVariant::C:
            return (w.a1 - i * w.b2) * (w.a2 + i * w.b1) * (w.a1 * a0 + b0 * w.b2) * (a0 * w.a2 + w.b1 * b0);
        case JellyfishVariant::Bstar:
            return (a0 * w.a2 + w.b1 * b0) * (w.a1 * a0 + b0 * w.b2) * (w.a1 * w.a1 + w.b2 * w.b2);
        case JellyfishVariant::BC:
            return (a0 * w.a2 + w.b1 * b0) * (w.a1 * a0 + b0 * w.b2) * (w.a2 * w.a2 + w.b1 * w.b1);
    }
    return Poly();
}

namespace {

// the closed forms hold at the pinned values D/U (and L/R for the corner) only
bool at_pinned(const WeightScheme& s, int j, const Poly& ratio) {
    return s.down.at(P(j)) == ratio * s.up.at(P(j));
}

void require_bends(const WeightScheme& s, int j) {
    for (RowLabel r : {P(j), Bar(j)}) {
        auto u = s.up.find(r), d = s.down.find(r);
        if (u == s.up.end() || d == s.down.end()) throw InputError("scheme has no bend at row " + r.str());
        if (u->second.is_zero() || d->second.is_zero()) throw InputError("U and D must be nonzero");
    }
}
}  // namespace

Verdict fish_check(const WeightScheme& s, int j, FishVariant v) {
    require_bends(s, j);
    Poly pin = (v == FishVariant::B) ? Poly::i() : Poly(1);
    std::optional<Poly> expected;
    if (at_pinned(s, j, pin)) expected = fish_closed_form(s, j, v);
    return compare_ratio(fish_name(v), fish_diagrams(j, v), s, expected);
}

Verdict jellyfish_check(const WeightScheme& s, int j, JellyfishVariant v) {
    require_bends(s, j);
    auto c = central_label(s.family, s.n);
    if (!c) throw InputError("jellyfish needs a family with a central row");
    bool pinned;
    if (v == JellyfishVariant::C) {
        const RowWeights& z = s.row(*c);
        pinned = at_pinned(s, j, Poly::i()) && s.L && s.R && *s.L == (z.a1 - Poly::i() * z.b1) * *s.R;
    } else {
        pinned = at_pinned(s, j, Poly(1));
    }
    std::optional<Poly> expected;
    if (pinned) expected = jellyfish_closed_form(s, j, v);
    return compare_ratio(jellyfish_name(v), jellyfish_diagrams(j, v, c->index), s, expected);
}

}  // namespace bentice
