#include "bentice/asm.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bentice {

SignMatrix SignMatrix::transposed() const {
    SignMatrix t;
    t.symmetry = symmetry;
    t.entries.assign(cols(), std::vector<int>(rows(), 0));
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) t.entries[j][i] = entries[i][j];
    return t;
}

std::string SignMatrix::text() const {
    std::ostringstream os;
    for (auto& row : entries) {
        for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << (row[j] < 0 ? "" : " ") << row[j];
        os << "\n";
    }
    return os.str();
}

nlohmann::json SignMatrix::to_json() const {
    return {{"rows", rows()}, {"cols", cols()}, {"half_turn", symmetry == Symmetry::half_turn}, {"entries", entries}};
}

SignMatrix state_to_matrix(const ModelSpec& spec, const IceState& s) {
    const Family f = spec.family;
    const int R = (int)spec.rows.size();
    const int FC = spec.full_columns;
    auto entry = [&](int r, int c) -> int {
        int v = spec.grid[r][c];
        if (v < 0) throw MatrixError("no vertex at row " + spec.rows[r].str());
        Kind k = state_kind(spec.diagram, s, v);
        return k == Kind::c2 ? 1 : k == Kind::c1 ? -1 : 0;
    };
    SignMatrix m;
    if (f == Family::A) {
        m.entries.assign(R, std::vector<int>(FC, 0));
        for (int r = 0; r < R; ++r)
            for (int c = 0; c < FC; ++c) m.entries[r][c] = entry(r, c);
        return m;
    }
    m.symmetry = SignMatrix::Symmetry::half_turn;
    const int M = 2 * FC + (spec.has_half_column ? 1 : 0);
    m.entries.assign(R, std::vector<int>(M, 0));
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < FC; ++c) {
            int e = entry(r, c);
            m.entries[r][c] = e;
            m.entries[R - 1 - r][M - 1 - c] = e;
        }
    if (spec.has_half_column) {
        for (int r = 0; r < R; ++r)
            if (spec.grid[r][FC] >= 0) {
                int e = entry(r, FC);
                m.entries[r][FC] = e;
                m.entries[R - 1 - r][FC] = e;
            }
        if (spec.central_row >= 0) {
            // the central cell is forced: the completed central row sums to 1
            int left = 0;
            for (int c = 0; c < FC; ++c) left += m.entries[spec.central_row][c];
            m.entries[spec.central_row][FC] = 1 - 2 * left;
        }
    }
    return m;
}

bool is_half_turn_symmetric(const SignMatrix& m) {
    int R = m.rows(), M = m.cols();
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < M; ++j)
            if (m.at(i, j) != m.at(R - 1 - i, M - 1 - j)) return false;
    return true;
}

namespace {

// nonzero entries alternate in sign
bool alternates(const std::vector<int>& line) {
    int last = 0;
    for (int v : line) {
        if (v < -1 || v > 1) return false;
        if (v == 0) continue;
        if (v == last) return false;
        last = v;
    }
    return true;
}

int sum(const std::vector<int>& line) {
    int s = 0;
    for (int v : line) s += v;
    return s;
}

std::vector<int> column(const SignMatrix& m, int j, int from = 0) {
    std::vector<int> c;
    for (int i = from; i < m.rows(); ++i) c.push_back(m.at(i, j));
    return c;
}

bool first_nonzero_positive(const std::vector<int>& line) {
    for (int v : line)
        if (v) return v > 0;
    return true;
}

}  // namespace

bool is_asm(const SignMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i) {
        auto col = column(m, i);
        if (!alternates(m.entries[i]) || sum(m.entries[i]) != 1 || !first_nonzero_positive(m.entries[i])) return false;
        if (!alternates(col) || sum(col) != 1 || !first_nonzero_positive(col)) return false;
    }
    return true;
}

std::vector<std::string> matrix_problems(const SignMatrix& m, Family f) {
    std::vector<std::string> out;
    if (f != Family::A && !is_half_turn_symmetric(m)) out.push_back("not half-turn symmetric");
    // An odd centre line without a corner is the mirror image of one state line; only that half alternates.
    bool centre_row = (f == Family::Bstar || f == Family::BC);
    bool centre_col = (f == Family::Cstar || f == Family::D);
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<int> row = m.entries[i];
        if (centre_row && i == m.rows() / 2) row.resize(m.cols() / 2);
        // rows enter from the left pointing right, so each row starts with +1
        if (!alternates(row)) out.push_back("row " + std::to_string(i + 1) + " does not alternate");
        else if (!first_nonzero_positive(row)) out.push_back("row " + std::to_string(i + 1) + " starts with -1");
    }
    for (int j = 0; j < m.cols(); ++j) {
        auto col = (centre_col && j == m.cols() / 2) ? column(m, j, m.rows() / 2) : column(m, j);
        if (!alternates(col)) out.push_back("column " + std::to_string(j + 1) + " does not alternate");
    }
    return out;
}

// ------------------------------------------------------------------ Okada statistics

nlohmann::json OkadaStats::to_json() const {
    return {{"inv", inv},         {"minus_count", minus_count}, {"i1_plus", i1_plus},
            {"i1_minus", i1_minus}, {"i2", i2},                 {"x_exponent_doubled", x_exponent}};
}

OkadaStats okada_stats(const SignMatrix& m) {
    const int N = m.rows();
    if (N != m.cols() || N % 2) throw MatrixError("Okada statistics need a square matrix of even size");
    if (!is_asm(m) || !is_half_turn_symmetric(m)) throw MatrixError("not a half-turn symmetric alternating sign matrix");
    const int n = N / 2;
    OkadaStats st;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (!m.at(i, j)) continue;
            if (m.at(i, j) < 0) ++st.minus_count;
            for (int k = i + 1; k < N; ++k)
                for (int l = 0; l < j; ++l) st.inv += m.at(i, j) * m.at(k, l);
        }
    for (int i = 0; i < n; ++i)
        for (int j = n; j < N; ++j) {
            if (m.at(i, j) > 0) ++st.i1_plus;
            if (m.at(i, j) < 0) ++st.i1_minus;
        }
    st.i2 = st.inv - st.i1_plus - st.i1_minus;
    std::vector<int> delta(N);
    for (int k = 0; k < N; ++k) delta[k] = N - 1 - 2 * k;  // doubled
    for (int i = 0; i < n; ++i) {
        int ad = 0;
        for (int j = 0; j < N; ++j) ad += m.at(i, j) * delta[j];
        st.x_exponent.push_back(delta[i] - ad);
    }
    return st;
}

Poly okada_matrix_weight(const SignMatrix& m) {
    OkadaStats st = okada_stats(m);
    if ((st.i2 - st.minus_count) % 2) throw MatrixError("i2 - s is odd");
    if (st.minus_count % 2) throw MatrixError("s is odd");
    int sign_exp = st.i1_plus + (st.i2 - st.minus_count) / 2;
    Poly t = Poly::var(vars::q(), 2);
    Poly w = ((sign_exp % 2 + 2) % 2) ? Poly(-1) : Poly(1);
    w *= t.pow(st.inv - st.minus_count);
    w *= (Poly(1) - t * t).pow(st.minus_count / 2);
    for (size_t j = 0; j < st.x_exponent.size(); ++j) w *= Poly::x_half((int)j + 1, st.x_exponent[j]);
    return w;
}

nlohmann::json BijectionResult::to_json() const {
    nlohmann::json j{{"pass", pass}, {"states", states}};
    if (witness) j["witness"] = *witness;
    return j;
}

BijectionResult bijection_check(int n, const std::optional<WeightScheme>& w, const Caps& caps) {
    StrictPartition rho = StrictPartition::rho(n);
    check_caps(Family::B, rho, caps);
    ModelSpec spec = build_model(Family::B, rho);
    WeightScheme scheme = w ? *w : make_okada(Family::B, n);
    BijectionResult res;
    for_each_state(spec.diagram, [&](const IceState& s) {
        ++res.states;
        SignMatrix m = state_to_matrix(spec, s);
        Poly lhs = okada_matrix_weight(m), rhs = state_weight(spec.diagram, s, scheme);
        if (lhs != rhs) {
            res.pass = false;
            res.witness = "state " + std::to_string(res.states) + ": matrix weight " + to_text(lhs) +
                          ", ice weight " + to_text(rhs) + "\n" + m.text();
            return false;
        }
        return true;
    });
    return res;
}

// ------------------------------------------------------------------ interleaving chain

nlohmann::json PartitionChain::to_json() const { return chain; }

PartitionChain interleave_chain(const ModelSpec& spec, const IceState& s) {
    if (spec.family != Family::B) throw InputError("the interleaving chain is defined for family B");
    const int R = (int)spec.rows.size();
    const int n = spec.n;
    PartitionChain pc;
    for (int r = 0; r <= R; ++r) {
        std::vector<int> parts;
        for (int c = 0; c < spec.full_columns; ++c) {
            const Vertex& v = spec.diagram.vertices[spec.grid[r < R ? r : R - 1][c]];
            int e = (r < R) ? v.e[0] : v.e[1];
            if (s.bits[e] == 0) parts.push_back(spec.columns[c]);
        }
        pc.chain.push_back(parts);  // columns run lambda_1 .. 1, so parts are descending
    }
    auto part = [](const std::vector<int>& p, size_t j) { return j < p.size() ? p[j] : 0; };
    for (int i = 0; i + 1 < (int)pc.chain.size(); ++i) {
        auto& a = pc.chain[i];
        auto& b = pc.chain[i + 1];
        for (size_t j = 0; j < std::max(a.size(), b.size()); ++j)
            if (!(part(a, j) >= part(b, j) && part(b, j) >= part(a, j + 1)))
                throw MatrixError("rho^(" + std::to_string(i + 1) + ") and rho^(" + std::to_string(i + 2) +
                                  ") do not interleave");
    }
    // rho^(i-bar) = rho^(2n+2-i)
    for (int i = 1; i <= n + 1; ++i) {
        int len_i = (int)pc.chain[i - 1].size(), len_bar = (int)pc.chain[2 * n + 1 - i].size();
        if (len_i - len_bar != n + 1 - i)
            throw MatrixError("length rule fails at i = " + std::to_string(i));
    }
    return pc;
}

std::vector<std::vector<int>> chain_difference_matrix(const PartitionChain& pc, int width) {
    auto indicator = [&](const std::vector<int>& p) {
        std::vector<int> row(width, 0);
        for (int part : p) row[width - part] = 1;  // column lambda_1 first
        return row;
    };
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i + 1 < pc.chain.size(); ++i) {
        auto a = indicator(pc.chain[i]), b = indicator(pc.chain[i + 1]);
        for (int c = 0; c < width; ++c) a[c] -= b[c];
        out.push_back(a);
    }
    return out;
}

// ------------------------------------------------------------------ ASM enumeration

std::vector<SignMatrix> enumerate_asms(int N, bool half_turn_only) {
    // candidate rows: alternating, starting and ending with +1
    std::vector<std::vector<int>> rows;
    std::vector<int> cur(N, 0);
    std::function<void(int, int)> gen = [&](int j, int partial) {
        if (j == N) {
            if (partial == 1) rows.push_back(cur);
            return;
        }
        for (int v : {0, 1, -1}) {
            int p = partial + v;
            if (p < 0 || p > 1) continue;
            cur[j] = v;
            gen(j + 1, p);
        }
        cur[j] = 0;
    };
    gen(0, 0);

    std::vector<SignMatrix> out;
    std::vector<std::vector<int>> chosen;
    std::vector<int> colsum(N, 0);
    std::function<void(int)> place = [&](int i) {
        if (i == N) {
            SignMatrix m;
            m.entries = chosen;
            if (!half_turn_only || is_half_turn_symmetric(m)) {
                if (half_turn_only) m.symmetry = SignMatrix::Symmetry::half_turn;
                out.push_back(m);
            }
            return;
        }
        for (auto& r : rows) {
            bool ok = true;
            for (int j = 0; j < N && ok; ++j) {
                int p = colsum[j] + r[j];
                ok = (p == 0 || p == 1) && (i + 1 < N || p == 1);
            }
            if (!ok) continue;
            for (int j = 0; j < N; ++j) colsum[j] += r[j];
            chosen.push_back(r);
            place(i + 1);
            chosen.pop_back();
            for (int j = 0; j < N; ++j) colsum[j] -= r[j];
        }
    };
    place(0);
    return out;
}

}  // namespace bentice
