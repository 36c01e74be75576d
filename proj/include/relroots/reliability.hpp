#pragma once

#include "relroots/complex.hpp"
#include "relroots/polynomial.hpp"

namespace relroots {

// All-terminal reliability Rel(C) = (1-q)^(m-d) h(q) with h = f_to_h(F).
// Void complex yields the zero signal (h = 0, unit_mult = 0).
RelPoly reliability(const SimplicialComplex& c);

// Same polynomial assembled the slow way, summing q^|F| (1-q)^(m-|F|) over
// every face.  Kept as the second route of the dual-route invariant.
Poly reliability_from_faces(const SimplicialComplex& c);

// Path complex on m >= 3 elements: faces are the singletons plus the pairs
// {0,1}, {2,3}, {3,4}, ..., {m-2,m-1}; h-part is -q^2 + (m-2)q + 1.
SimplicialComplex path_complex(int m);

// Loopless pure 2-dimensional complex on m elements with f2 two-element
// faces, built from a covering matching plus lexicographic fill.  Witness
// generator for the dimension-2 root-location dichotomy.
SimplicialComplex dim2_witness(int m, const Int& f2);

}  // namespace relroots
