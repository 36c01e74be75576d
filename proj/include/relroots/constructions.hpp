#pragma once

#include <cstdint>
#include <vector>

#include "relroots/complex.hpp"
#include "relroots/polynomial.hpp"
#include "relroots/roots.hpp"

namespace relroots {

// k-thickening at element v: v becomes a parallel class v_1..v_k (v keeps
// its index, the k-1 new elements are appended).  Facets avoiding v stay;
// each facet through v spawns k copies, one per v_j.
// h-part identity: h_Th = h_del + k q h_link.
SimplicialComplex thicken(const SimplicialComplex& c, int v, int k);

// k-replacement at element v: faces through v take the whole bundle
// {v_1..v_k}; faces avoiding v extend by any proper subset of the bundle.
// Generating identity: f_Rep = q^k f_link + ((1+q)^k - q^k) f_del.
SimplicialComplex replace_element(const SimplicialComplex& c, int v, int k);

// Reliability of the simultaneous k-replacement given by kvec, computed by
// substituting q_i -> q^{k_i}, p_i -> 1 - q^{k_i} into the multivariate
// generating polynomial face by face (never expanded symbolically), then
// factoring out the maximal (1-q)^t.
RelPoly gen_substitute(const SimplicialComplex& c, const std::vector<int>& kvec);

struct SearchRecord {
    std::vector<int> kvec;
    RelPoly rel;
    double max_modulus = 0.0;
    double residual_bound = 0.0;
    bool outside = false;
    DiskVerdict verdict = DiskVerdict::all_in_closed_disk;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 1000000;

// Exhaustive sweep of kvec in [k_min, k_max]^m.  Refuses up front when the
// grid exceeds `budget`.  Records come back sorted lexicographically by
// kvec regardless of `jobs`.
std::vector<SearchRecord> k_search(const SimplicialComplex& c, int k_min, int k_max,
                                   int jobs = 1,
                                   std::uint64_t budget = kDefaultSearchBudget);

}  // namespace relroots
