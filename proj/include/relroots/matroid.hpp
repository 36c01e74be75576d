#pragma once

#include <vector>

#include "relroots/complex.hpp"

namespace relroots {

struct ExchangeWitness {
    bool is_matroid = false;
    // On failure: a face pair with |alpha| = |sigma|+1 where no element of
    // alpha - sigma extends sigma inside the complex.
    std::vector<int> sigma, alpha;
};

// Exchange axiom over the face poset; faces are compared only against
// faces exactly one larger (single-step augmentation suffices).
ExchangeWitness is_matroid(const SimplicialComplex& c);

SimplicialComplex uniform_matroid(int m, int r);

// Fano plane matroid: rank 3 on 7 points, bases are the 28 non-lines.
SimplicialComplex fano();

// H-vector of a rank-r paving matroid from (m, r, F_r):
// H_i = C(m-r+i-1, i) for i < r and H_r = F_r - C(m-1, r-1).
Coeffs paving_h_vector(int m, int r, const Int& f_r);

// Is the (d-1)-skeleton complete, i.e. F_{d-1} = C(m, d-1)?
bool is_paving(const SimplicialComplex& c);

enum class Shellable { yes, no, capped };

struct ShellingResult {
    Shellable status = Shellable::no;
    std::vector<int> order;  // indices into facet_masks() when status == yes
};

// Backtracking search over facet orders.  Each prefix must intersect the
// next facet in a pure complex of one lower dimension.  Refuses complexes
// with more facets than `facet_cap` (the search is worst-case exponential).
ShellingResult is_shellable(const SimplicialComplex& c, int facet_cap = 20);

struct Rank2Report {
    bool complete_multipartite = false;
    std::vector<std::vector<int>> cells;  // parallel classes when multipartite
    Int f2;
    bool f2_lower_bound_ok = false;  // F_2 >= 2m-4
};

// Structure of a loopless, coloopless, connected rank-2 matroid: the
// 2-skeleton must be complete multipartite (equivalently its complement
// graph is a disjoint union of cliques).
Rank2Report rank2_structure_check(const SimplicialComplex& c);

struct Rank3Report {
    Int h1, h2, h3, f2;
    bool h1_is_m_minus_3 = false;
    bool h2_identity_ok = false;   // H_2 = F_2 - 2 H_1 - 3 H_0
    bool h2_lower_bound_ok = false;  // H_2 >= 2m-9
    bool h3_lower_bound_ok = false;  // H_3 >= m-5
    bool f2_lower_bound_ok = false;  // F_2 >= 4m-12
};

Rank3Report rank3_bounds_check(const SimplicialComplex& c);

}  // namespace relroots
