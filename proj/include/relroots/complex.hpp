#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relroots/bigint.hpp"

namespace relroots {

// A face is a subset of the ground set {0..m-1} packed into bits.
using Face = std::uint64_t;

std::vector<int> face_members(Face f);
Face face_of(const std::vector<int>& members, int m);

// Simplicial complex given by its facets (an antichain of faces).
// Ground sets are index-based 0..m-1 and capped at 64 so faces fit a word.
// The facet list may be empty: that is the void complex with no faces at
// all (reliability identically zero), distinct from {"the empty face"}.
class SimplicialComplex {
public:
    static constexpr int kMaxGround = 64;

    static SimplicialComplex from_facets(int m, const std::vector<std::vector<int>>& facets);
    static SimplicialComplex from_masks(int m, std::vector<Face> facets);

    int m() const { return m_; }
    const std::vector<Face>& facet_masks() const { return facets_; }
    std::vector<std::vector<int>> facet_lists() const;
    bool is_void() const { return facets_.empty(); }

    std::optional<int> dimension() const;  // max facet cardinality; nullopt when void
    bool is_pure() const;
    bool is_face(Face f) const;

    std::vector<Face> enumerate_faces() const;  // sorted by mask value
    Coeffs f_vector() const;                    // F_0..F_d; empty when void

    SimplicialComplex deletion(int x) const;  // faces avoiding x, reindexed to m-1
    SimplicialComplex link(int x) const;      // faces containing x, minus x, reindexed
    SimplicialComplex direct_sum(const SimplicialComplex& o) const;

    std::vector<int> loops() const;    // elements in no face
    std::vector<int> coloops() const;  // elements in every facet
    SimplicialComplex strip_loops() const;

    SimplicialComplex k_skeleton(int k) const;  // faces of cardinality <= k

    bool operator==(const SimplicialComplex& o) const {
        return m_ == o.m_ && facets_ == o.facets_;
    }

private:
    SimplicialComplex(int m, std::vector<Face> facets)
        : m_(m), facets_(std::move(facets)) {}
    int m_ = 0;
    std::vector<Face> facets_;
};

struct Component {
    std::vector<int> elements;   // ascending original labels
    SimplicialComplex part;      // restriction, reindexed along `elements`
};

// Finest decomposition of C as a direct sum of smaller complexes (the sum
// joins disjoint ground sets, faces being unions of one face from each
// part).  Two elements must share a part exactly when some face rho admits
// both extensions rho+x and rho+y but not rho+x+y; the partition is the
// transitive closure of that obstruction relation.  For matroids this is
// circuit connectivity.  Loops never appear in faces, so each loop is its
// own component.
std::vector<Component> components(const SimplicialComplex& c);

}  // namespace relroots
