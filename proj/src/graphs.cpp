#include "relroots/graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "relroots/errors.hpp"
#include "relroots/reliability.hpp"

namespace relroots {

void validate_graph(const Multigraph& g) {
    if (g.n < 1) throw DomainError("graph needs at least one vertex");
    if (g.n > 63) throw ResourceError("graph exceeds the 63-vertex cap");
    if (g.edges.size() > SimplicialComplex::kMaxGround)
        throw ResourceError("graph exceeds the 64-edge cap");
    for (auto [u, v] : g.edges)
        if (u < 0 || v < 0 || u >= g.n || v >= g.n)
            throw DomainError("edge endpoint out of range");
}

namespace {

int component_count(const Multigraph& g) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](auto&& self, int x) -> int {
        return parent[x] == x ? x : parent[x] = self(self, parent[x]);
    };
    for (auto [u, v] : g.edges) parent[find(find, u)] = find(find, v);
    int comps = 0;
    for (int v = 0; v < g.n; ++v)
        if (find(find, v) == v) ++comps;
    return comps;
}

}  // namespace

bool graph_connected(const Multigraph& g) {
    validate_graph(g);
    return component_count(g) == 1;
}

Multigraph k4() {
    // Edge order fixes element labels; 0 and 2 are an opposite pair, as are
    // 1 and 3, and 4, 5 are the diagonals.
    return {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}}};
}

Multigraph royle_sokal() {
    // K4 with the opposite pair {0,1}, {2,3} thickened to bundles of six.
    Multigraph g{4, {}};
    for (int i = 0; i < 6; ++i) g.edges.push_back({0, 1});
    g.edges.push_back({1, 2});
    for (int i = 0; i < 6; ++i) g.edges.push_back({2, 3});
    g.edges.push_back({3, 0});
    g.edges.push_back({0, 2});
    g.edges.push_back({1, 3});
    return g;
}

SimplicialComplex cographic_matroid(const Multigraph& g) {
    validate_graph(g);
    if (!graph_connected(g)) throw DomainError("cographic matroid needs a connected graph");
    const int m = static_cast<int>(g.edges.size());
    const Face full = m == 64 ? ~Face(0) : (Face(1) << m) - 1;

    // Facets are complements of spanning trees.  Enumerate trees by choosing
    // edges in increasing index order; an edge extends the partial forest
    // iff it joins two distinct components.
    std::vector<Face> facets;
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [](std::vector<int>& p, int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    };
    auto rec = [&](auto&& self, int next, std::vector<int>& par, int joined, Face tree) -> void {
        if (joined == g.n - 1) {
            facets.push_back(full & ~tree);
            return;
        }
        if (m - next < g.n - 1 - joined) return;
        // Branch: skip edge `next`, or take it when it joins two components.
        self(self, next + 1, par, joined, tree);
        int ru = find(par, g.edges[next].first);
        int rv = find(par, g.edges[next].second);
        if (ru == rv) return;
        std::vector<int> merged = par;
        merged[ru] = rv;
        self(self, next + 1, merged, joined + 1, tree | Face(1) << next);
    };
    rec(rec, 0, parent, 0, 0);
    return SimplicialComplex::from_masks(m, facets);
}

std::vector<Face> circuits(const Multigraph& g) {
    validate_graph(g);
    const int m = static_cast<int>(g.edges.size());
    if (m > 26) throw ResourceError("circuit sweep cap is 26 edges");
    std::vector<Face> out;
    std::vector<int> deg(g.n);
    for (Face s = 1; s < (Face(1) << m); ++s) {
        // A circuit's edges touch every incident vertex exactly twice and
        // form one connected piece.
        std::fill(deg.begin(), deg.end(), 0);
        for (int e = 0; e < m; ++e)
            if (s >> e & 1) {
                deg[g.edges[e].first]++;
                deg[g.edges[e].second]++;
            }
        bool ok = true;
        int verts = 0, start = -1;
        for (int v = 0; v < g.n; ++v) {
            if (deg[v] == 0) continue;
            if (deg[v] != 2) {
                ok = false;
                break;
            }
            ++verts;
            if (start < 0) start = v;
        }
        if (!ok || start < 0) continue;
        std::uint64_t seen = std::uint64_t(1) << start;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int e = 0; e < m; ++e)
                if (s >> e & 1) {
                    auto [u, v] = g.edges[e];
                    bool su = seen >> u & 1, sv = seen >> v & 1;
                    if (su != sv) {
                        seen |= (std::uint64_t(1) << u) | (std::uint64_t(1) << v);
                        grew = true;
                    }
                }
        }
        if (std::popcount(seen) == verts) out.push_back(s);
    }
    return out;
}

SimplicialComplex broken_circuit_complex(const Multigraph& g, const std::vector<int>* order) {
    validate_graph(g);
    for (auto [u, v] : g.edges)
        if (u == v) throw DomainError("broken-circuit complex needs a loop-free graph");
    const int m = static_cast<int>(g.edges.size());
    if (m > 24) throw ResourceError("broken-circuit sweep cap is 24 edges");

    std::vector<int> rank(m);
    if (order) {
        if (static_cast<int>(order->size()) != m)
            throw DomainError("edge order must list every edge once");
        std::vector<bool> seen(m, false);
        for (int i = 0; i < m; ++i) {
            int e = (*order)[i];
            if (e < 0 || e >= m || seen[e]) throw DomainError("edge order must be a permutation");
            seen[e] = true;
            rank[e] = i;
        }
    } else {
        std::iota(rank.begin(), rank.end(), 0);
    }

    // A broken circuit is a circuit minus its least edge; faces are the edge
    // sets containing no broken circuit.  Mark the broken circuits, close
    // the non-face set upward, then keep the maximal survivors.
    std::vector<char> face(size_t(1) << m, 1);
    for (Face c : circuits(g)) {
        int least = -1;
        for (int e = 0; e < m; ++e)
            if ((c >> e & 1) && (least < 0 || rank[e] < rank[least])) least = e;
        face[c & ~(Face(1) << least)] = 0;
    }
    for (Face s = 0; s < (Face(1) << m); ++s) {
        if (face[s]) continue;
        for (int e = 0; e < m; ++e)
            if (!(s >> e & 1)) face[s | Face(1) << e] = 0;
    }
    std::vector<Face> facets;
    for (Face s = 0; s < (Face(1) << m); ++s) {
        if (!face[s]) continue;
        bool maximal = true;
        for (int e = 0; e < m && maximal; ++e)
            if (!(s >> e & 1) && face[s | Face(1) << e]) maximal = false;
        if (maximal) facets.push_back(s);
    }
    return SimplicialComplex::from_masks(m, facets);
}

Poly chromatic_polynomial(const Multigraph& g) {
    validate_graph(g);
    // Deletion/contraction; parallel duplicates collapse first, a loop
    // kills the branch.
    struct G {
        int n;
        std::vector<std::pair<int, int>> edges;
    };
    auto rec = [](auto&& self, G cur) -> Poly {
        for (auto& [u, v] : cur.edges)
            if (u > v) std::swap(u, v);
        std::sort(cur.edges.begin(), cur.edges.end());
        cur.edges.erase(std::unique(cur.edges.begin(), cur.edges.end()), cur.edges.end());
        for (auto [u, v] : cur.edges)
            if (u == v) return Poly();
        if (cur.edges.empty()) return Poly::monomial(1, cur.n);
        auto [u, v] = cur.edges.back();
        G del{cur.n, cur.edges};
        del.edges.pop_back();
        G con{cur.n - 1, {}};
        auto remap = [u = u, v = v](int x) {
            if (x == v) x = u;
            return x > v ? x - 1 : x;
        };
        for (size_t i = 0; i + 1 < cur.edges.size(); ++i)
            con.edges.push_back({remap(cur.edges[i].first), remap(cur.edges[i].second)});
        return self(self, del) - self(self, con);
    };
    return rec(rec, G{g.n, g.edges});
}

ChromaticCheck chromatic_reliability_identity(const Multigraph& g, const std::vector<int>* order) {
    const auto br = broken_circuit_complex(g, order);
    const auto rel = reliability(br);
    ChromaticCheck check;
    check.n = g.n;
    check.c = component_count(g);

    // (-q)^n pi(G, (q-1)/q), written out as an integer polynomial: with
    // pi(x) = sum_k a_k x^k this is (-1)^n sum_k a_k (-1)^k (1-q)^k q^{n-k}.
    const Poly pi = chromatic_polynomial(g);
    Poly lhs;
    for (int k = 0; k <= pi.degree(); ++k) {
        if (pi.coeff(k) == 0) continue;
        Poly term = Poly::one_minus_q_pow(k) * Poly::monomial(1, g.n - k);
        if (k & 1) term = term * Int(-1);
        lhs = lhs + term * pi.coeff(k);
    }
    if (g.n & 1) lhs = lhs * Int(-1);

    // The broken-circuit complex lives on the m edges but has rank n - c,
    // so its reliability carries a (1-q)^{m-n+c} factor that the chromatic
    // side never sees.  The sharp polynomial identity compares against the
    // h-polynomial: (-q)^n pi(G, (q-1)/q) = (1-q)^c h(q).
    check.lhs = lhs;
    check.rhs = Poly::one_minus_q_pow(check.c) * rel.h;
    check.holds = check.lhs == check.rhs;
    return check;
}

}  // namespace relroots
