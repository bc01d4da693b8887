#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's enumeration or elimination code.

#include <hodge/atypicality.hpp>
#include <hodge/rootsys.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

/// All roots (positive and negative) as the orbit of the simple roots under
/// the simple reflections s_i(v) = v - <v, beta_i^vee> beta_i.
inline std::set<Vec> reflection_closure(const hodge::IntMatrix& a, std::size_t limit = 1000) {
    const std::size_t r = a.size();
    std::set<Vec> seen;
    std::vector<Vec> frontier;
    for (std::size_t i = 0; i < r; ++i) {
        Vec e(r, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty() && seen.size() <= limit) {
        std::vector<Vec> next;
        for (const auto& v : frontier) {
            for (std::size_t i = 0; i < r; ++i) {
                int pairing = 0;
                for (std::size_t j = 0; j < r; ++j) pairing += a[i][j] * v[j];
                Vec w = v;
                w[i] -= pairing;
                if (seen.insert(w).second) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

inline std::set<Vec> positive_part(const std::set<Vec>& roots) {
    std::set<Vec> out;
    for (const auto& v : roots) {
        bool pos = true;
        for (int x : v) pos = pos && x >= 0;
        if (pos) out.insert(v);
    }
    return out;
}

inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(r);
}

/// Number of degree-m monomials in N = n+2 variables with every exponent at
/// most d-2, by inclusion-exclusion over the variables that overflow.
inline std::uint64_t bounded_monomials(int n, int d, int m) {
    if (m < 0) return 0;
    const int nvars = n + 2;
    std::int64_t total = 0;
    for (int j = 0; j <= nvars; ++j) {
        const std::int64_t rest = m - static_cast<std::int64_t>(j) * (d - 1);
        if (rest < 0) break;
        const auto term = static_cast<std::int64_t>(binomial(nvars, j) * binomial(rest + nvars - 1, nvars - 1));
        total += (j % 2 == 0) ? term : -term;
    }
    return static_cast<std::uint64_t>(total);
}

/// Number of all degree-m monomials in nvars variables, by direct recursion.
inline std::uint64_t count_monomials(int nvars, int m) {
    if (nvars == 1) return m >= 0 ? 1 : 0;
    std::uint64_t total = 0;
    for (int k = 0; k <= m; ++k) total += count_monomials(nvars - 1, m - k);
    return total;
}

inline int pairing(const Vec& root, const Vec& e) {
    int s = 0;
    for (std::size_t i = 0; i < root.size(); ++i) s += root[i] * e[i];
    return s;
}

/// Largest E-degree over a set of positive roots.
inline int max_degree(const std::set<Vec>& positive, const Vec& e) {
    int best = 0;
    for (const auto& r : positive) best = std::max(best, pairing(r, e));
    return best;
}

/// Whether the degree-one roots generate every positive-degree root under
/// addition, computed on plain coordinate sets.
inline bool degree_one_generates(const std::set<Vec>& positive, const Vec& e) {
    std::set<Vec> target;
    std::set<Vec> reached;
    for (const auto& r : positive) {
        const int k = pairing(r, e);
        if (k >= 1) target.insert(r);
        if (k == 1) reached.insert(r);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<Vec> current(reached.begin(), reached.end());
        for (const auto& a : current) {
            for (const auto& b : current) {
                Vec s = a;
                for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
                if (positive.count(s) && reached.insert(s).second) grew = true;
            }
        }
    }
    return reached == target;
}

/// The typicality equality codim P_H = codim P + codim D_H, written out
/// from the definitions: dim g^- - T0PH = (dim g^- - T0P) + (dim g^- - dim h^-).
inline bool typical_equality(const hodge::CodimInput& in) {
    std::int64_t g = 0;
    std::int64_t h = 0;
    for (const auto& [p, x] : in.dim_g_minus) g += x;
    for (const auto& [p, x] : in.dim_h_minus) h += x;
    return g - in.dim_T0PH == (g - in.dim_T0P) + (g - h);
}

/// Calls f on every horizontal CodimInput with degrees 1..max_degree and all
/// dimensions in 0..max_entry: h_p <= g_p, T0P <= g_1 and
/// max(0, T0P + h_1 - g_1) <= T0PH <= min(T0P, h_1).
template <typename F>
void for_each_horizontal_input(int max_degree, int max_entry, F&& f) {
    std::vector<int> g(max_degree, 0);
    std::vector<int> h(max_degree, 0);
    auto advance = [&](std::vector<int>& v, const std::vector<int>& cap) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < cap[i]) {
                ++v[i];
                return true;
            }
            v[i] = 0;
        }
        return false;
    };
    const std::vector<int> top(max_degree, max_entry);
    do {
        std::fill(h.begin(), h.end(), 0);
        do {
            hodge::CodimInput in;
            for (int p = 1; p <= max_degree; ++p) {
                in.dim_g_minus[p] = g[p - 1];
                in.dim_h_minus[p] = h[p - 1];
            }
            for (int t = 0; t <= g[0]; ++t) {
                const int lo = std::max(0, t + h[0] - g[0]);
                const int hi = std::min(t, h[0]);
                for (int th = lo; th <= hi; ++th) {
                    in.dim_T0P = t;
                    in.dim_T0PH = th;
                    f(static_cast<const hodge::CodimInput&>(in));
                }
            }
        } while (advance(h, g));
    } while (advance(g, top));
}

}  // namespace oracle
