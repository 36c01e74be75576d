#pragma once

#include <utility>
#include <vector>

#include "relroots/complex.hpp"
#include "relroots/polynomial.hpp"

namespace relroots {

// Multigraph on vertices 0..n-1; parallel edges and self-loops allowed.
// Edge list order fixes the element indices of derived complexes.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

void validate_graph(const Multigraph& g);
bool graph_connected(const Multigraph& g);

Multigraph k4();
// K4 with one pair of vertex-disjoint opposite edges each replaced by six
// parallel copies; 16 edges, cographic rank 13.
Multigraph royle_sokal();

// Cographic matroid: faces are edge sets whose removal leaves G connected
// and spanning.  Facets are complements of spanning trees.
SimplicialComplex cographic_matroid(const Multigraph& g);

// Minimal edge sets carrying a cycle (incl. parallel pairs and self-loops).
std::vector<Face> circuits(const Multigraph& g);

// Broken-circuit complex for a loop-free multigraph.  `order` lists edge
// indices from least to greatest in the tie-breaking order; the default is
// the input edge order.  A broken circuit is a circuit minus its least edge.
SimplicialComplex broken_circuit_complex(const Multigraph& g,
                                         const std::vector<int>* order = nullptr);

// Exact chromatic polynomial in x by deletion and contraction.
Poly chromatic_polynomial(const Multigraph& g);

struct ChromaticCheck {
    bool holds = false;
    Poly lhs;  // (-q)^n pi(G, (q-1)/q), cleared of denominators
    // (1-q)^c h(q) with h the H-polynomial of BR(G, order).  Equivalent to
    // (1-q)^{n-m} Rel(BR): the complex lives on m edges but has rank n-c,
    // and the chromatic side never sees the (1-q)^{m-n+c} padding.
    Poly rhs;
    int n = 0, c = 0;
};

ChromaticCheck chromatic_reliability_identity(const Multigraph& g,
                                              const std::vector<int>* order = nullptr);

}  // namespace relroots
