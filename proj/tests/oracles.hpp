#pragma once

// Independent reference computations used only by tests.

#include "bentice/model.hpp"
#include "bentice/poly.hpp"
#include "bentice/weights.hpp"

#include <boost/rational.hpp>

#include <functional>

#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

using namespace bentice;

// Every orientation of the free edges, kept when each vertex matches an allowed configuration.
template <class Visit>
inline long brute_force_states(const Diagram& d, Visit visit) {
    std::vector<int> free;
    for (size_t e = 0; e < d.edges.size(); ++e)
        if (d.edges[e].fixed < 0) free.push_back((int)e);
    if (free.size() > 24) throw std::runtime_error("too many free edges for brute force");
    std::vector<uint8_t> bits(d.edges.size());
    for (size_t e = 0; e < d.edges.size(); ++e) bits[e] = d.edges[e].fixed < 0 ? 0 : d.edges[e].fixed;
    long count = 0;
    std::vector<Kind> kinds(d.vertices.size());
    for (unsigned long mask = 0; mask < (1ul << free.size()); ++mask) {
        for (size_t k = 0; k < free.size(); ++k) bits[free[k]] = (mask >> k) & 1;
        bool ok = true;
        for (size_t v = 0; v < d.vertices.size() && ok; ++v) {
            const auto& vx = d.vertices[v];
            int ar = arity(vx.type);
            bool found = false;
            for (const auto& c : configs_for(vx.type)) {
                bool match = true;
                for (int s = 0; s < ar; ++s)
                    if (bits[vx.e[s]] != c.bits[s]) match = false;
                if (match) {
                    kinds[v] = c.kind;
                    found = true;
                    break;
                }
            }
            ok = found;
        }
        if (!ok) continue;
        ++count;
        visit(kinds);
    }
    return count;
}

inline long brute_force_count(const Diagram& d) {
    return brute_force_states(d, [](const std::vector<Kind>&) {});
}

inline Poly brute_force_partition(const Diagram& d, const WeightScheme& w) {
    Poly z;
    brute_force_states(d, [&](const std::vector<Kind>& kinds) {
        Poly p(1);
        for (size_t v = 0; v < kinds.size(); ++v) p *= w.vertex_weight(d.vertices[v], kinds[v]);
        z += p;
    });
    return z;
}

// Sign matrices with alternating rows and columns, filled cell by cell.
inline long count_asms(int N, bool half_turn) {
    std::vector<std::vector<int>> m(N, std::vector<int>(N, 0));
    std::vector<int> col(N, 0);
    long count = 0;
    std::function<void(int, int, int)> go = [&](int r, int c, int row) {
        if (c == N) {
            if (row != 1) return;
            if (r + 1 == N) {
                for (int k = 0; k < N; ++k)
                    if (col[k] != 1) return;
                if (half_turn)
                    for (int i = 0; i < N; ++i)
                        for (int j = 0; j < N; ++j)
                            if (m[i][j] != m[N - 1 - i][N - 1 - j]) return;
                ++count;
                return;
            }
            go(r + 1, 0, 0);
            return;
        }
        for (int v : {0, 1, -1}) {
            int nr = row + v, nc = col[c] + v;
            if (nr < 0 || nr > 1 || nc < 0 || nc > 1) continue;
            m[r][c] = v;
            col[c] = nc;
            go(r, c + 1, nr);
            col[c] -= v;
            m[r][c] = 0;
        }
    };
    go(0, 0, 0);
    return count;
}

// Weyl dimension formula over the positive roots of B, C or D.
inline long weyl_dimension(char type, const std::vector<int>& mu) {
    int n = (int)mu.size();
    std::vector<std::vector<int>> roots;  // doubled coordinates
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<int> a(n, 0), b(n, 0);
            a[i] = 2, a[j] = -2, b[i] = 2, b[j] = 2;
            roots.push_back(a);
            roots.push_back(b);
        }
    for (int i = 0; i < n && type != 'D'; ++i) {
        std::vector<int> a(n, 0);
        a[i] = type == 'B' ? 2 : 4;
        roots.push_back(a);
    }
    std::vector<int> rho(n, 0);  // four times the half-sum
    for (auto& a : roots)
        for (int k = 0; k < n; ++k) rho[k] += a[k];
    boost::rational<long> dim(1);
    for (auto& a : roots) {
        long num = 0, den = 0;
        for (int k = 0; k < n; ++k) {
            num += (4L * mu[k] + rho[k]) * a[k];
            den += (long)rho[k] * a[k];
        }
        dim *= boost::rational<long>(num, den);
    }
    if (dim.denominator() != 1) throw std::logic_error("non-integral dimension");
    return dim.numerator();
}

}  // namespace oracle
