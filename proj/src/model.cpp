#include "bentice/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace bentice {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::Bstar: return "Bstar";
        case Family::C: return "C";
        case Family::Cstar: return "Cstar";
        case Family::D: return "D";
        case Family::BC: return "BC";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    for (Family f : all_families())
        if (family_name(f) == s) return f;
    if (s == "B*") return Family::Bstar;
    if (s == "C*") return Family::Cstar;
    throw InputError("unknown family '" + s + "' (expected A, B, Bstar, C, Cstar, D, BC)");
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> fs{Family::A,     Family::B, Family::Bstar, Family::C,
                                        Family::Cstar, Family::D, Family::BC};
    return fs;
}

bool is_bent(Family f) { return f != Family::A; }

StrictPartition::StrictPartition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw InputError("partition must be nonempty");
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 1) throw InputError("partition parts must be positive");
        if (k && parts[k] >= parts[k - 1])
            throw InputError("partition must be strictly decreasing (lambda_1 > lambda_2 > ... >= 1)");
    }
}

StrictPartition StrictPartition::parse(const std::string& s) {
    std::vector<int> p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            p.push_back(v);
        } catch (const std::exception&) {
            throw InputError("cannot parse partition '" + s + "': expected comma-separated integers");
        }
    }
    return StrictPartition(std::move(p));
}

StrictPartition StrictPartition::rho(int n) {
    std::vector<int> p;
    for (int k = n; k >= 1; --k) p.push_back(k);
    return StrictPartition(p);
}

bool StrictPartition::contains(int c) const { return std::find(parts.begin(), parts.end(), c) != parts.end(); }

int StrictPartition::size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

std::string StrictPartition::str() const {
    std::string s;
    for (size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + std::to_string(parts[k]);
    return s;
}

std::string kind_name(Kind k) {
    static const char* names[] = {"a1", "a2", "b1", "b2", "c1", "c2", "U",  "D",
                                  "L",  "R",  "X1", "X2", "X3", "X4", "X5", "X6"};
    return names[int(k)];
}

const std::vector<Config>& configs_for(VType t) {
    static const std::vector<Config> grid{{{1, 1, 1, 1}, Kind::a1}, {{0, 0, 0, 0}, Kind::a2},
                                          {{0, 0, 1, 1}, Kind::b1}, {{1, 1, 0, 0}, Kind::b2},
                                          {{1, 0, 0, 1}, Kind::c1}, {{0, 1, 1, 0}, Kind::c2}};
    static const std::vector<Config> cross{{{1, 1, 1, 1}, Kind::X1}, {{0, 0, 0, 0}, Kind::X2},
                                           {{0, 1, 0, 1}, Kind::X3}, {{1, 0, 1, 0}, Kind::X4},
                                           {{1, 0, 0, 1}, Kind::X5}, {{0, 1, 1, 0}, Kind::X6}};
    static const std::vector<Config> bend{{{1, 0, 0, 0}, Kind::D}, {{0, 1, 0, 0}, Kind::U}};
    static const std::vector<Config> corner{{{1, 1, 0, 0}, Kind::R}, {{0, 0, 0, 0}, Kind::L}};
    switch (t) {
        case VType::grid: return grid;
        case VType::cross: return cross;
        case VType::bend: return bend;
        default: return corner;
    }
}

int arity(VType t) { return t == VType::grid || t == VType::cross ? 4 : 2; }

int Diagram::add_edge(bool horizontal, std::string name, int8_t fixed) {
    Edge e;
    e.horizontal = horizontal;
    e.name = std::move(name);
    e.fixed = fixed;
    edges.push_back(e);
    return (int)edges.size() - 1;
}

int Diagram::add_vertex(const Vertex& v) {
    int id = (int)vertices.size();
    for (int s = 0; s < arity(v.type); ++s) {
        int e = v.e[s];
        if (e < 0 || e >= (int)edges.size()) throw std::logic_error("vertex slot without edge");
        auto& ends = edges[e].v;
        if (ends[0] < 0) ends[0] = id;
        else if (ends[1] < 0) ends[1] = id;
        else throw std::logic_error("edge '" + edges[e].name + "' has more than two endpoints");
    }
    vertices.push_back(v);
    return id;
}

int Diagram::edge_by_name(const std::string& name) const {
    for (size_t k = 0; k < edges.size(); ++k)
        if (edges[k].name == name) return (int)k;
    throw std::out_of_range("no edge named " + name);
}

ModelSpec build_model(Family f, const StrictPartition& lambda) {
    ModelSpec m;
    m.family = f;
    m.lambda = lambda;
    int n = m.n = lambda.n();
    if (f == Family::BC && n < 1) throw InputError("BC needs n >= 1");

    // rows
    int pairs = 0;
    switch (f) {
        case Family::A:
            for (int j = 1; j <= n; ++j) m.rows.push_back(RowLabel::plain(j));
            break;
        case Family::B:
        case Family::Cstar:
        case Family::D:
            pairs = n;
            break;
        case Family::Bstar:
        case Family::C:
            pairs = n;
            break;
        case Family::BC:
            pairs = n - 1;
            break;
    }
    if (f != Family::A) {
        for (int j = 1; j <= pairs; ++j) m.rows.push_back(RowLabel::plain(j));
        if (f == Family::Bstar || f == Family::C) {
            m.central_row = (int)m.rows.size();
            m.rows.push_back(RowLabel::central(0));
        } else if (f == Family::BC) {
            m.central_row = (int)m.rows.size();
            m.rows.push_back(RowLabel::central(n));
        }
        for (int j = pairs; j >= 1; --j) m.rows.push_back(RowLabel::bar(j));
    }
    const int R = (int)m.rows.size();

    // columns
    int lowest_full = (f == Family::D) ? 2 : 1;
    for (int c = lambda.first(); c >= lowest_full; --c) m.columns.push_back(c);
    m.full_columns = (int)m.columns.size();
    if (f == Family::C || f == Family::Cstar) {
        m.has_half_column = true;
        m.columns.push_back(0);
    } else if (f == Family::D) {
        m.has_half_column = true;
        m.columns.push_back(1);
    }
    m.has_corner = (f == Family::C);
    const int FC = m.full_columns;
    const int HC = m.has_half_column ? FC : -1;  // column index of the half column
    int half_start = R - pairs;                  // first row crossed by the half column

    auto row_width = [&](int r) { return FC + (m.has_half_column && r >= half_start ? 1 : 0); };

    Diagram& d = m.diagram;
    auto hname = [&](int r, int c) {
        return "h(" + m.rows[r].str() + "," + (c < row_width(r) ? std::to_string(m.columns[c]) : "end") + ")";
    };
    auto vname = [&](int r, int c) {
        return "v(" + (r < R ? m.rows[r].str() : std::string("bottom")) + "," + std::to_string(m.columns[c]) + ")";
    };

    // horizontal edges: h[r][c] lies west of column c; h[r][width] is the right end
    std::vector<std::vector<int>> h(R);
    for (int r = 0; r < R; ++r) {
        int w = row_width(r);
        for (int c = 0; c <= w; ++c) {
            int8_t fixed = -1;
            if (c == 0) fixed = 1;
            if (c == w) {
                if (f == Family::A) fixed = 0;
                else if (r == m.central_row && f == Family::Bstar) fixed = 1;
                else if (r == m.central_row && f == Family::BC) fixed = 0;
            }
            int id = d.add_edge(true, hname(r, c), fixed);
            d.edges[id].ax = c + 1.0;
            d.edges[id].ay = R - 1 - r;
            h[r].push_back(id);
        }
    }
    // vertical edges: v[c][r] lies north of row r; v[c][R] is the bottom edge
    std::vector<std::vector<int>> v(m.columns.size(), std::vector<int>(R + 1, -1));
    for (int c = 0; c < (int)m.columns.size(); ++c) {
        int r0 = (c == HC) ? half_start : 0;
        for (int r = r0; r <= R; ++r) {
            int8_t fixed = -1;
            if (r == R) fixed = 1;
            if (r == r0) {
                if (c != HC) fixed = lambda.contains(m.columns[c]) ? 0 : 1;
                else if (f == Family::Cstar) fixed = 1;
                else if (f == Family::D) fixed = lambda.contains(1) ? 0 : 1;
            }
            int id = d.add_edge(false, vname(r, c), fixed);
            d.edges[id].ax = c + 1.5;
            d.edges[id].ay = R - r - 0.5;
            v[c][r] = id;
        }
    }
    // vertex (r,c) sits at (c+1.5, R-1-r); edge arrow points lie between vertices
    m.grid.assign(R, std::vector<int>(m.columns.size(), -1));
    int corner_s = -1;
    if (m.has_corner) corner_s = v[HC][half_start];

    for (int r = 0; r < R; ++r) {
        int w = row_width(r);
        for (int c = 0; c < w; ++c) {
            Vertex vx;
            vx.type = VType::grid;
            vx.row = m.rows[r];
            vx.col = m.columns[c];
            vx.grid_r = r;
            vx.grid_c = c;
            vx.e = {v[c][r], v[c][r + 1], h[r][c], h[r][c + 1]};
            vx.x = c + 1.5;
            vx.y = R - 1 - r;
            m.grid[r][c] = d.add_vertex(vx);
        }
        if (r == m.central_row && m.has_corner) {
            Vertex cv;
            cv.type = VType::corner;
            cv.row = m.rows[r];
            cv.e = {h[r][w], corner_s, -1, -1};
            cv.x = HC + 1.5;
            cv.y = R - 1 - r;
            d.add_vertex(cv);
        }
        if (f != Family::A && r < pairs) {
            int rb = R - 1 - r;
            Vertex bv;
            bv.type = VType::bend;
            bv.row = m.rows[r];
            bv.e = {h[r][w], h[rb][row_width(rb)], -1, -1};
            bv.x = std::max(w, row_width(rb)) + 1.0;
            bv.y = (R - 1 - r + R - 1 - rb) / 2.0;
            d.add_vertex(bv);
            m.bends.emplace_back(r, rb);
        }
    }
    return m;
}

int vertex_count(const ModelSpec& spec) {
    int k = 0;
    for (auto& v : spec.diagram.vertices) k += v.type == VType::grid;
    return k;
}

nlohmann::json ModelSpec::to_json() const {
    nlohmann::json j;
    j["family"] = family_name(family);
    j["lambda"] = lambda.parts;
    std::vector<std::string> rs;
    for (auto& r : rows) rs.push_back(r.str() + (r.is_central() ? "*" : ""));
    j["rows"] = rs;
    j["columns"] = columns;
    j["half_column"] = has_half_column ? nlohmann::json(columns.back()) : nlohmann::json(nullptr);
    nlohmann::json bs = nlohmann::json::array();
    for (auto& [a, b] : bends) bs.push_back({rows[a].str(), rows[b].str()});
    j["bends"] = bs;
    j["corner"] = has_corner;
    j["vertex_count"] = vertex_count(*this);
    nlohmann::json fixed = nlohmann::json::object();
    for (auto& e : diagram.edges) {
        if (e.fixed < 0) continue;
        fixed[e.name] = e.horizontal ? (e.fixed ? "right" : "left") : (e.fixed ? "down" : "up");
    }
    j["fixed_boundary"] = fixed;
    return j;
}

Caps Caps::from_env() {
    Caps c;
    if (const char* s = std::getenv("BENTICE_MAX_N")) c.max_n = std::atoi(s);
    if (const char* s = std::getenv("BENTICE_MAX_COLS")) c.max_cols = std::atoi(s);
    return c;
}

void check_caps(Family, const StrictPartition& lambda, const Caps& caps) {
    if (lambda.n() > caps.max_n)
        throw CapExceeded("n = " + std::to_string(lambda.n()) + " exceeds cap " + std::to_string(caps.max_n));
    if (lambda.first() > caps.max_cols)
        throw CapExceeded("lambda_1 = " + std::to_string(lambda.first()) + " exceeds cap " +
                          std::to_string(caps.max_cols));
    if (lambda.n() > kMaxRowIndex - 1)
        throw CapExceeded("n exceeds the variable registry size");
}

}  // namespace bentice
