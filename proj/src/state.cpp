#include "bentice/state.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace bentice {

Kind state_kind(const Diagram& d, const IceState& s, int v) {
    return configs_for(d.vertices[v].type)[s.cfg[v]].kind;
}

std::map<Kind, int> kind_counts(const Diagram& d, const IceState& s) {
    std::map<Kind, int> m;
    for (size_t v = 0; v < d.vertices.size(); ++v) m[state_kind(d, s, (int)v)]++;
    return m;
}

std::string describe_vertex(const Diagram& d, int v) {
    const Vertex& x = d.vertices[v];
    switch (x.type) {
        case VType::grid: return "vertex (row " + x.row.str() + ", column " + std::to_string(x.col) + ")";
        case VType::cross: return "R-vertex (" + x.row.str() + ", " + x.row2.str() + ")";
        case VType::bend: return "bend at row " + x.row.str();
        case VType::corner: return "corner vertex";
    }
    return "vertex";
}

void for_each_state(const Diagram& d, const std::function<bool(const IceState&)>& visit) {
    IceState st;
    std::vector<int8_t> bits(d.edges.size(), -1);
    for (size_t e = 0; e < d.edges.size(); ++e) bits[e] = d.edges[e].fixed;
    st.cfg.assign(d.vertices.size(), 0);
    st.bits.assign(d.edges.size(), 0);
    bool stop = false;

    std::function<void(size_t)> rec = [&](size_t vi) {
        if (stop) return;
        if (vi == d.vertices.size()) {
            for (size_t e = 0; e < bits.size(); ++e) {
                if (bits[e] < 0) throw std::logic_error("edge '" + d.edges[e].name + "' is not attached to any vertex");
                st.bits[e] = uint8_t(bits[e]);
            }
            if (!visit(st)) stop = true;
            return;
        }
        const Vertex& v = d.vertices[vi];
        const auto& cfgs = configs_for(v.type);
        int ar = arity(v.type);
        for (size_t c = 0; c < cfgs.size() && !stop; ++c) {
            bool ok = true;
            for (int s = 0; s < ar && ok; ++s) {
                int8_t b = bits[v.e[s]];
                if (b >= 0 && b != cfgs[c].bits[s]) ok = false;
            }
            if (!ok) continue;
            int assigned[4];
            int na = 0;
            for (int s = 0; s < ar; ++s)
                if (bits[v.e[s]] < 0) {
                    bits[v.e[s]] = int8_t(cfgs[c].bits[s]);
                    assigned[na++] = v.e[s];
                }
            st.cfg[vi] = uint8_t(c);
            rec(vi + 1);
            for (int k = 0; k < na; ++k) bits[assigned[k]] = -1;
        }
    };
    rec(0);
}

std::vector<IceState> enumerate_states(const Diagram& d) {
    std::vector<IceState> out;
    for_each_state(d, [&](const IceState& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::vector<IceState> enumerate_states(const ModelSpec& spec, const Caps& caps) {
    check_caps(spec.family, spec.lambda, caps);
    return enumerate_states(spec.diagram);
}

Poly state_weight(const Diagram& d, const IceState& s, const WeightScheme& w) {
    Poly p(1);
    for (size_t v = 0; v < d.vertices.size(); ++v) {
        Kind k = state_kind(d, s, (int)v);
        try {
            p *= w.vertex_weight(d.vertices[v], k);
        } catch (const std::out_of_range& e) {
            throw std::out_of_range(std::string(e.what()) + " (needed by " + describe_vertex(d, (int)v) + ", kind " +
                                    kind_name(k) + ")");
        }
    }
    return p;
}

namespace {

// per-slot source for the frontier contraction
struct SlotPlan {
    int fixed = -1;    // fixed bit, or -1
    int cur_pos = -1;  // position in the incoming frontier, or -1
};

struct StepPlan {
    std::vector<SlotPlan> slots;
    // for each position of the outgoing frontier: incoming position, or -(slot+1)
    std::vector<int> next_src;
    std::vector<Poly> weights;  // per config
};

}  // namespace

Poly partition_function(const Diagram& d, const WeightScheme& w, int workers) {
    const size_t V = d.vertices.size();
    // position of each vertex in the order; an edge is live between its endpoints
    std::vector<int> last_touch(d.edges.size(), -1), first_touch(d.edges.size(), -1);
    for (size_t vi = 0; vi < V; ++vi)
        for (int s = 0; s < arity(d.vertices[vi].type); ++s) {
            int e = d.vertices[vi].e[s];
            if (first_touch[e] < 0) first_touch[e] = (int)vi;
            last_touch[e] = (int)vi;
        }

    std::vector<StepPlan> plan(V);
    std::vector<int> live;  // edges currently in the frontier
    for (size_t vi = 0; vi < V; ++vi) {
        const Vertex& v = d.vertices[vi];
        int ar = arity(v.type);
        StepPlan& sp = plan[vi];
        sp.slots.resize(ar);
        for (int s = 0; s < ar; ++s) {
            int e = v.e[s];
            if (d.edges[e].fixed >= 0) sp.slots[s].fixed = d.edges[e].fixed;
            auto it = std::find(live.begin(), live.end(), e);
            if (it != live.end()) sp.slots[s].cur_pos = int(it - live.begin());
        }
        std::vector<int> next;
        for (size_t p = 0; p < live.size(); ++p) {
            if (last_touch[live[p]] == (int)vi) continue;
            next.push_back(live[p]);
            sp.next_src.push_back((int)p);
        }
        for (int s = 0; s < ar; ++s) {
            int e = v.e[s];
            if (d.edges[e].fixed >= 0 || sp.slots[s].cur_pos >= 0) continue;
            if (last_touch[e] == (int)vi) continue;  // single-ended free edge: summed here
            if (std::find(next.begin(), next.end(), e) != next.end()) continue;
            next.push_back(e);
            sp.next_src.push_back(-(s + 1));
        }
        if (next.size() > 64) throw std::runtime_error("frontier wider than 64 edges");
        const auto& cfgs = configs_for(v.type);
        for (size_t c = 0; c < cfgs.size(); ++c) {
            try {
                sp.weights.push_back(w.vertex_weight(v, cfgs[c].kind));
            } catch (const std::out_of_range& ex) {
                throw std::out_of_range(std::string(ex.what()) + " (needed by " + describe_vertex(d, (int)vi) + ")");
            }
        }
        live = std::move(next);
    }
    if (!live.empty()) throw std::logic_error("frontier not empty after the last vertex");

    using Frontier = std::map<uint64_t, Poly>;
    Frontier cur;
    cur[0] = Poly(1);
    for (size_t vi = 0; vi < V; ++vi) {
        const Vertex& v = d.vertices[vi];
        const StepPlan& sp = plan[vi];
        const auto& cfgs = configs_for(v.type);
        int ar = arity(v.type);

        auto step = [&](Frontier::const_iterator lo, Frontier::const_iterator hi, Frontier& out) {
            for (auto it = lo; it != hi; ++it) {
                uint64_t key = it->first;
                for (size_t c = 0; c < cfgs.size(); ++c) {
                    if (sp.weights[c].is_zero()) continue;
                    bool ok = true;
                    for (int s = 0; s < ar && ok; ++s) {
                        int have = sp.slots[s].fixed >= 0   ? sp.slots[s].fixed
                                   : sp.slots[s].cur_pos >= 0 ? int((key >> sp.slots[s].cur_pos) & 1)
                                                              : -1;
                        if (have >= 0 && have != cfgs[c].bits[s]) ok = false;
                    }
                    if (!ok) continue;
                    uint64_t nk = 0;
                    for (size_t p = 0; p < sp.next_src.size(); ++p) {
                        int src = sp.next_src[p];
                        uint64_t b = src >= 0 ? (key >> src) & 1 : cfgs[c].bits[-src - 1];
                        nk |= b << p;
                    }
                    Poly term = it->second * sp.weights[c];
                    auto [pos, inserted] = out.try_emplace(nk, std::move(term));
                    if (!inserted) pos->second += term;
                }
            }
        };

        Frontier next;
        int W = std::max(1, workers);
        if (W == 1 || cur.size() < 64) {
            step(cur.begin(), cur.end(), next);
        } else {
            std::vector<Frontier::const_iterator> cuts;
            size_t chunk = (cur.size() + W - 1) / W, k = 0;
            for (auto it = cur.begin(); it != cur.end(); ++it, ++k)
                if (k % chunk == 0) cuts.push_back(it);
            cuts.push_back(cur.end());
            std::vector<Frontier> parts(cuts.size() - 1);
            std::vector<std::thread> pool;
            for (size_t p = 0; p + 1 < cuts.size(); ++p)
                pool.emplace_back([&, p] { step(cuts[p], cuts[p + 1], parts[p]); });
            for (auto& t : pool) t.join();
            for (auto& part : parts)
                for (auto& [key, poly] : part) {
                    auto [pos, inserted] = next.try_emplace(key, poly);
                    if (!inserted) pos->second += poly;
                }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        cur = std::move(next);
    }
    auto it = cur.find(0);
    return it == cur.end() ? Poly() : it->second;
}

Poly partition_function(const ModelSpec& spec, const WeightScheme& w, int workers, const Caps& caps) {
    check_caps(spec.family, spec.lambda, caps);
    return partition_function(spec.diagram, w, workers);
}

Poly partition_function_by_states(const Diagram& d, const WeightScheme& w, int workers) {
    std::vector<Poly> parts;
    for_each_state(d, [&](const IceState& s) {
        parts.push_back(state_weight(d, s, w));
        return true;
    });
    return sum_parallel(parts, workers);
}

nlohmann::json state_to_json(const ModelSpec& spec, const IceState& s) {
    const Diagram& d = spec.diagram;
    nlohmann::json edges = nlohmann::json::object();
    for (size_t e = 0; e < d.edges.size(); ++e) {
        const Edge& ed = d.edges[e];
        edges[ed.name.empty() ? "e" + std::to_string(e) : ed.name] =
            ed.horizontal ? (s.bits[e] ? "right" : "left") : (s.bits[e] ? "down" : "up");
    }
    nlohmann::json vs = nlohmann::json::array();
    for (size_t v = 0; v < d.vertices.size(); ++v) {
        const Vertex& x = d.vertices[v];
        nlohmann::json j{{"kind", kind_name(state_kind(d, s, (int)v))}, {"row", x.row.str()}};
        if (x.type == VType::grid) j["column"] = x.col;
        if (x.type == VType::bend) j["type"] = "bend";
        if (x.type == VType::corner) j["type"] = "corner";
        vs.push_back(j);
    }
    return {{"edges", edges}, {"vertices", vs}};
}

std::string state_to_tikz(const ModelSpec& spec, const IceState& s) {
    const Diagram& d = spec.diagram;
    std::ostringstream o;
    const int R = (int)spec.rows.size();
    o << "\\begin{tikzpicture}[scale=.75]\n";
    for (int r = 0; r < R; ++r) {
        const RowLabel& l = spec.rows[r];
        o << "\\node [label=left:$" << l.latex() << "$] at (1," << (R - 1 - r) << ") {};\n";
    }
    for (size_t c = 0; c < spec.columns.size(); ++c)
        o << "\\node [label=above:$" << spec.columns[c] << "$] at (" << c + 1.5 << "," << R - 0.5 << ") {};\n";
    // each edge as a segment centred on its arrow point, arrowhead in the middle
    for (size_t e = 0; e < d.edges.size(); ++e) {
        const Edge& ed = d.edges[e];
        double x0 = ed.ax, y0 = ed.ay, x1 = ed.ax, y1 = ed.ay;
        if (ed.horizontal) {
            x0 -= 0.5, x1 += 0.5;
            if (!s.bits[e]) std::swap(x0, x1);
        } else {
            y0 += 0.5, y1 -= 0.5;
            if (!s.bits[e]) std::swap(y0, y1);
        }
        o << "\\draw [postaction={decorate},decoration={markings,mark=at position .5 with {\\arrow{>}}}] (" << x0
          << "," << y0 << ") -- (" << x1 << "," << y1 << ");\n";
    }
    for (size_t v = 0; v < d.vertices.size(); ++v) {
        const Vertex& x = d.vertices[v];
        if (x.type == VType::bend) {
            double yt = d.edges[x.e[0]].ay, yb = d.edges[x.e[1]].ay;
            double xt = d.edges[x.e[0]].ax + 0.5, xb = d.edges[x.e[1]].ax + 0.5;
            double rad = (yt - yb) / 2;
            o << "\\draw (" << xt << "," << yt << ") -- (" << std::max(xt, xb) << "," << yt << ") arc (90:-90:" << rad
              << ") -- (" << xb << "," << yb << "); % " << kind_name(state_kind(d, s, (int)v)) << "\n";
        } else if (x.type == VType::corner) {
            o << "\\draw (" << x.x << "," << x.y << ") node {$" << kind_name(state_kind(d, s, (int)v)) << "$};\n";
        }
    }
    o << "\\end{tikzpicture}\n";
    return o.str();
}

}  // namespace bentice
