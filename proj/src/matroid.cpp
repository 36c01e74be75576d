#include "relroots/matroid.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>
#include <unordered_set>

#include "relroots/errors.hpp"
#include "relroots/polynomial.hpp"

namespace relroots {

namespace {

std::vector<std::vector<int>> all_subsets_of_size(int m, int r) {
    std::vector<std::vector<int>> out;
    if (r == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace

ExchangeWitness is_matroid(const SimplicialComplex& c) {
    if (c.is_void()) return {false, {}, {}};
    const auto faces = c.enumerate_faces();
    std::unordered_set<Face> face_set(faces.begin(), faces.end());

    // Group faces by cardinality and precompute, per face, the set of
    // elements whose addition stays a face.
    const int d = *c.dimension();
    std::vector<std::vector<Face>> by_size(static_cast<size_t>(d) + 1);
    std::unordered_map<Face, Face> ext;
    ext.reserve(faces.size() * 2);
    for (Face f : faces) {
        by_size[std::popcount(f)].push_back(f);
        Face e = 0;
        for (int z = 0; z < c.m(); ++z)
            if (!(f >> z & 1) && face_set.count(f | Face(1) << z)) e |= Face(1) << z;
        ext.emplace(f, e);
    }

    for (int s = 0; s + 1 <= d; ++s)
        for (Face sigma : by_size[s]) {
            const Face grow = ext.at(sigma);
            for (Face alpha : by_size[s + 1])
                if (((alpha & ~sigma) & grow) == 0)
                    return {false, face_members(sigma), face_members(alpha)};
        }
    return {true, {}, {}};
}

SimplicialComplex uniform_matroid(int m, int r) {
    if (m < 0 || r < 0 || r > m) throw DomainError("uniform matroid needs 0 <= r <= m");
    if (binomial(m, r) > 2000000) throw ResourceError("uniform matroid basis count cap");
    return SimplicialComplex::from_facets(m, all_subsets_of_size(m, r));
}

SimplicialComplex fano() {
    // Lines of the Fano plane, 0-based.
    static const std::vector<std::vector<int>> lines = {
        {0, 1, 3}, {0, 2, 5}, {0, 4, 6}, {1, 2, 4}, {1, 5, 6}, {2, 3, 6}, {3, 4, 5}};
    std::vector<std::vector<int>> facets;
    for (const auto& t : all_subsets_of_size(7, 3)) {
        bool is_line = false;
        for (const auto& l : lines)
            if (l == t) is_line = true;
        if (!is_line) facets.push_back(t);
    }
    return SimplicialComplex::from_facets(7, facets);
}

Coeffs paving_h_vector(int m, int r, const Int& f_r) {
    if (r < 1 || m < r) throw DomainError("paving H-vector needs 1 <= r <= m");
    Coeffs h(static_cast<size_t>(r) + 1);
    for (int i = 0; i < r; ++i) h[i] = binomial(m - r + i - 1, i);
    h[r] = f_r - binomial(m - 1, r - 1);
    return h;
}

bool is_paving(const SimplicialComplex& c) {
    auto d = c.dimension();
    if (!d || *d < 1) throw DomainError("is_paving needs dimension >= 1");
    const auto f = c.f_vector();
    return f[static_cast<size_t>(*d) - 1] == binomial(c.m(), *d - 1);
}

ShellingResult is_shellable(const SimplicialComplex& c, int facet_cap) {
    if (c.is_void() || !c.is_pure())
        throw DomainError("shellability is defined for nonempty pure complexes");
    const auto& facets = c.facet_masks();
    const int t = static_cast<int>(facets.size());
    if (t > facet_cap) return {Shellable::capped, {}};
    if (t == 1) return {Shellable::yes, {0}};
    const int d = *c.dimension();

    // A facet F may follow the prefix set S iff among the intersections
    // F & G (G in S) the maximal ones all have exactly d-1 elements.  That
    // depends on S as a set only, so failed prefix sets are memoized and
    // the search walks prefix sets depth first.
    auto can_follow = [&](std::uint32_t used, int j) {
        const Face f = facets[j];
        bool have_ridge = false;
        std::vector<Face> ridges;
        for (int i = 0; i < t; ++i)
            if (used >> i & 1) {
                Face inter = f & facets[i];
                if (std::popcount(inter) == d - 1) {
                    ridges.push_back(inter);
                    have_ridge = true;
                }
            }
        if (!have_ridge) return false;
        for (int i = 0; i < t; ++i)
            if (used >> i & 1) {
                Face inter = f & facets[i];
                if (std::popcount(inter) == d - 1) continue;
                bool dominated = false;
                for (Face r : ridges)
                    if ((inter & r) == inter) {
                        dominated = true;
                        break;
                    }
                if (!dominated) return false;
            }
        return true;
    };

    std::unordered_set<std::uint32_t> dead;
    std::vector<int> order;
    auto dfs = [&](auto&& self, std::uint32_t used) -> bool {
        if (static_cast<int>(order.size()) == t) return true;
        if (dead.count(used)) return false;
        for (int j = 0; j < t; ++j) {
            if (used >> j & 1) continue;
            if (used != 0 && !can_follow(used, j)) continue;
            order.push_back(j);
            if (self(self, used | (std::uint32_t(1) << j))) return true;
            order.pop_back();
        }
        dead.insert(used);
        return false;
    };
    if (dfs(dfs, 0)) return {Shellable::yes, order};
    return {Shellable::no, {}};
}

namespace {

void require_connected_matroid(const SimplicialComplex& c, int rank, const char* what) {
    if (!is_matroid(c).is_matroid) throw DomainError(std::string(what) + ": not a matroid");
    auto d = c.dimension();
    if (!d || *d != rank) throw DomainError(std::string(what) + ": wrong rank");
    if (!c.loops().empty()) throw DomainError(std::string(what) + ": loops present");
    if (!c.coloops().empty()) throw DomainError(std::string(what) + ": coloops present");
    if (components(c).size() != 1) throw DomainError(std::string(what) + ": not connected");
}

}  // namespace

Rank2Report rank2_structure_check(const SimplicialComplex& c) {
    require_connected_matroid(c, 2, "rank2_structure_check");
    const int m = c.m();
    const auto f = c.f_vector();
    Rank2Report rep;
    rep.f2 = f[2];
    rep.f2_lower_bound_ok = rep.f2 >= 2 * m - 4;

    // Non-adjacency in the 2-skeleton must be transitive (parallel classes).
    // Greedily assign cells by the first non-neighbour scan, then verify the
    // full adjacency pattern against the assignment; any intransitivity shows
    // up as a mismatched pair.
    auto edge = [&](int a, int b) { return c.is_face(Face(1) << a | Face(1) << b); };
    std::vector<int> cell(m, -1);
    int ncell = 0;
    for (int i = 0; i < m; ++i) {
        if (cell[i] >= 0) continue;
        cell[i] = ncell;
        for (int j = i + 1; j < m; ++j)
            if (!edge(i, j) && cell[j] < 0) cell[j] = ncell;
        ++ncell;
    }
    rep.complete_multipartite = true;
    for (int i = 0; i < m && rep.complete_multipartite; ++i)
        for (int j = i + 1; j < m && rep.complete_multipartite; ++j)
            if (edge(i, j) == (cell[i] == cell[j])) rep.complete_multipartite = false;
    if (rep.complete_multipartite) {
        rep.cells.assign(ncell, {});
        for (int i = 0; i < m; ++i) rep.cells[cell[i]].push_back(i);
    }
    return rep;
}

Rank3Report rank3_bounds_check(const SimplicialComplex& c) {
    require_connected_matroid(c, 3, "rank3_bounds_check");
    const int m = c.m();
    const auto f = c.f_vector();
    const auto h = f_to_h(f);
    Rank3Report rep;
    rep.h1 = h[1];
    rep.h2 = h[2];
    rep.h3 = h[3];
    rep.f2 = f[2];
    rep.h1_is_m_minus_3 = rep.h1 == m - 3;
    rep.h2_identity_ok = rep.h2 == rep.f2 - 2 * rep.h1 - 3 * h[0];
    rep.h2_lower_bound_ok = rep.h2 >= 2 * m - 9;
    rep.h3_lower_bound_ok = rep.h3 >= m - 5;
    rep.f2_lower_bound_ok = rep.f2 >= 4 * m - 12;
    return rep;
}

}  // namespace relroots
