#include "relroots/reliability.hpp"

#include <bit>

#include "relroots/errors.hpp"

namespace relroots {

RelPoly reliability(const SimplicialComplex& c) {
    if (c.is_void()) return {};
    const auto f = c.f_vector();
    RelPoly out;
    out.h = Poly(f_to_h(f));
    out.unit_mult = c.m() - (static_cast<int>(f.size()) - 1);
    return out;
}

Poly reliability_from_faces(const SimplicialComplex& c) {
    Poly acc;
    for (Face f : c.enumerate_faces()) {
        const int k = std::popcount(f);
        acc = acc + Poly::one_minus_q_pow(c.m() - k).shifted(k);
    }
    return acc;
}

SimplicialComplex path_complex(int m) {
    if (m < 3) throw DomainError("path complex needs m >= 3");
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < m; ++i) facets.push_back({i});
    facets.push_back({0, 1});
    for (int i = 2; i + 1 < m; ++i) facets.push_back({i, i + 1});
    return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex dim2_witness(int m, const Int& f2) {
    if (m < 4) throw DomainError("dimension-2 witness needs m >= 4");
    const Int lo = (m + 1) / 2, hi = binomial(m, 2);
    if (f2 < lo || f2 > hi) throw DomainError("F_2 outside the feasible range");
    const auto want = static_cast<long>(f2);
    std::vector<std::vector<int>> facets;
    // Cover every element first, then fill lexicographically.
    for (int i = 0; i + 1 < m; i += 2) facets.push_back({i, i + 1});
    if (m % 2) facets.push_back({m - 2, m - 1});
    auto has = [&](int a, int b) {
        for (const auto& f : facets)
            if (f[0] == a && f[1] == b) return true;
        return false;
    };
    for (int a = 0; a < m && static_cast<long>(facets.size()) < want; ++a)
        for (int b = a + 1; b < m && static_cast<long>(facets.size()) < want; ++b)
            if (!has(a, b)) facets.push_back({a, b});
    return SimplicialComplex::from_facets(m, facets);
}

}  // namespace relroots
