#pragma once

#include <string>

#include "relroots/complex.hpp"
#include "relroots/graphs.hpp"
#include "relroots/polynomial.hpp"

namespace relroots {

// Complex files: {"m": int, "facets": [[int,...],...]} with 0-based
// elements.  The writer emits facets sorted lexicographically as lists.
SimplicialComplex complex_from_json(const std::string& text);
std::string complex_to_json(const SimplicialComplex& c);

// Graph files: {"n": int, "edges": [[u,v],...]} with 0-based vertices.
Multigraph graph_from_json(const std::string& text);
std::string graph_to_json(const Multigraph& g);

// Polynomial files: {"coeffs": ["...", ...] ascending decimal strings,
// "unit_root_multiplicity": int}.
RelPoly poly_from_json(const std::string& text);
std::string poly_to_json(const RelPoly& p);

}  // namespace relroots
