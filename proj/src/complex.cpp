#include "relroots/complex.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "relroots/errors.hpp"

namespace relroots {

namespace {

constexpr size_t kFaceEnumerationCap = size_t(1) << 22;

int popcount(Face f) { return std::popcount(f); }

// Drop bit x and shift everything above it down one position.
Face drop_element(Face f, int x) {
    const Face low = f & ((Face(1) << x) - 1);
    const Face high = f >> (x + 1);
    return low | (high << x);
}

std::vector<Face> maximal_only(std::vector<Face> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<Face> out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < v.size() && !dominated; ++j)
            if (i != j && (v[i] & v[j]) == v[i]) dominated = true;
        if (!dominated) out.push_back(v[i]);
    }
    return out;
}

}  // namespace

std::vector<int> face_members(Face f) {
    std::vector<int> out;
    while (f) {
        int b = std::countr_zero(f);
        out.push_back(b);
        f &= f - 1;
    }
    return out;
}

Face face_of(const std::vector<int>& members, int m) {
    Face f = 0;
    for (int e : members) {
        if (e < 0 || e >= m) throw DomainError("face element out of range");
        f |= Face(1) << e;
    }
    return f;
}

SimplicialComplex SimplicialComplex::from_facets(int m,
                                                 const std::vector<std::vector<int>>& facets) {
    std::vector<Face> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) masks.push_back(face_of(f, m));
    return from_masks(m, std::move(masks));
}

SimplicialComplex SimplicialComplex::from_masks(int m, std::vector<Face> facets) {
    if (m < 0 || m > kMaxGround)
        throw DomainError("ground set size must be between 0 and 64");
    if (m < 64)
        for (Face f : facets)
            if (f >> m) throw DomainError("facet uses an element outside the ground set");
    return SimplicialComplex(m, maximal_only(std::move(facets)));
}

std::vector<std::vector<int>> SimplicialComplex::facet_lists() const {
    std::vector<std::vector<int>> out;
    out.reserve(facets_.size());
    for (Face f : facets_) out.push_back(face_members(f));
    return out;
}

std::optional<int> SimplicialComplex::dimension() const {
    if (facets_.empty()) return std::nullopt;
    int d = 0;
    for (Face f : facets_) d = std::max(d, popcount(f));
    return d;
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    const int d = *dimension();
    for (Face f : facets_)
        if (popcount(f) != d) return false;
    return true;
}

bool SimplicialComplex::is_face(Face f) const {
    for (Face g : facets_)
        if ((f & g) == f) return true;
    return false;
}

std::vector<Face> SimplicialComplex::enumerate_faces() const {
    if (facets_.empty()) return {};
    std::unordered_set<Face> seen(facets_.begin(), facets_.end());
    std::vector<Face> stack(facets_.begin(), facets_.end());
    while (!stack.empty()) {
        Face f = stack.back();
        stack.pop_back();
        Face rest = f;
        while (rest) {
            Face bit = rest & (~rest + 1);
            rest &= rest - 1;
            Face sub = f & ~bit;
            if (seen.insert(sub).second) {
                if (seen.size() > kFaceEnumerationCap)
                    throw ResourceError("face enumeration exceeds cap");
                stack.push_back(sub);
            }
        }
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

Coeffs SimplicialComplex::f_vector() const {
    if (facets_.empty()) return {};
    Coeffs f(static_cast<size_t>(*dimension()) + 1, Int(0));
    for (Face face : enumerate_faces()) f[popcount(face)] += 1;
    return f;
}

SimplicialComplex SimplicialComplex::deletion(int x) const {
    if (x < 0 || x >= m_) throw DomainError("deletion element out of range");
    std::vector<Face> masks;
    masks.reserve(facets_.size());
    for (Face f : facets_) masks.push_back(drop_element(f & ~(Face(1) << x), x));
    return from_masks(m_ - 1, std::move(masks));
}

SimplicialComplex SimplicialComplex::link(int x) const {
    if (x < 0 || x >= m_) throw DomainError("link element out of range");
    std::vector<Face> masks;
    for (Face f : facets_)
        if (f >> x & 1) masks.push_back(drop_element(f, x));
    return from_masks(m_ - 1, std::move(masks));  // no facet through x: void
}

SimplicialComplex SimplicialComplex::direct_sum(const SimplicialComplex& o) const {
    if (m_ + o.m_ > kMaxGround) throw DomainError("sum exceeds the 64-element cap");
    std::vector<Face> masks;
    masks.reserve(facets_.size() * o.facets_.size());
    for (Face a : facets_)
        for (Face b : o.facets_) masks.push_back(a | (b << m_));
    return from_masks(m_ + o.m_, std::move(masks));
}

std::vector<int> SimplicialComplex::loops() const {
    Face covered = 0;
    for (Face f : facets_) covered |= f;
    std::vector<int> out;
    for (int i = 0; i < m_; ++i)
        if (!(covered >> i & 1)) out.push_back(i);
    return out;
}

std::vector<int> SimplicialComplex::coloops() const {
    if (facets_.empty()) return {};
    Face common = ~Face(0);
    for (Face f : facets_) common &= f;
    std::vector<int> out;
    for (int i = 0; i < m_; ++i)
        if (common >> i & 1) out.push_back(i);
    return out;
}

SimplicialComplex SimplicialComplex::strip_loops() const {
    auto ls = loops();
    std::vector<Face> masks = facets_;
    // Remove from the top so lower indices stay valid.
    for (auto it = ls.rbegin(); it != ls.rend(); ++it)
        for (auto& f : masks) f = drop_element(f, *it);
    return from_masks(m_ - static_cast<int>(ls.size()), std::move(masks));
}

SimplicialComplex SimplicialComplex::k_skeleton(int k) const {
    auto d = dimension();
    if (!d) throw DomainError("k_skeleton of the void complex");
    if (k < 0 || k > *d) throw DomainError("skeleton index out of range");
    std::vector<Face> masks;
    for (Face f : facets_) {
        const int sz = popcount(f);
        if (sz <= k) {
            masks.push_back(f);
            continue;
        }
        // All k-subsets of f.
        std::vector<int> mem = face_members(f);
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            Face sub = 0;
            for (int i : idx) sub |= Face(1) << mem[i];
            masks.push_back(sub);
            if (masks.size() > kFaceEnumerationCap)
                throw ResourceError("skeleton enumeration exceeds cap");
            int i = k - 1;
            while (i >= 0 && idx[i] == sz - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return from_masks(m_, std::move(masks));
}

std::vector<Component> components(const SimplicialComplex& c) {
    const int m = c.m();
    if (m == 0) return {};
    auto faces = c.enumerate_faces();
    std::unordered_set<Face> face_set(faces.begin(), faces.end());
    auto is_face = [&](Face f) { return face_set.count(f) != 0; };

    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i) parent[i] = i;
    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    for (Face rho : faces) {
        // Elements that extend rho to a face.
        Face ext = 0;
        for (int z = 0; z < m; ++z)
            if (!(rho >> z & 1) && is_face(rho | Face(1) << z)) ext |= Face(1) << z;
        auto xs = face_members(ext);
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = i + 1; j < xs.size(); ++j) {
                int x = xs[i], y = xs[j];
                if (find(x) == find(y)) continue;
                if (!is_face(rho | Face(1) << x | Face(1) << y)) unite(x, y);
            }
    }

    std::vector<std::vector<int>> blocks(m);
    for (int i = 0; i < m; ++i) blocks[find(i)].push_back(i);

    std::vector<Component> out;
    for (const auto& blk : blocks) {
        if (blk.empty()) continue;
        Face mask = 0;
        for (int e : blk) mask |= Face(1) << e;
        // Facets of the restriction are the maximal traces of facets.
        std::vector<Face> traces;
        for (Face f : c.facet_masks()) {
            Face t = f & mask, packed = 0;
            for (size_t i = 0; i < blk.size(); ++i)
                if (t >> blk[i] & 1) packed |= Face(1) << i;
            traces.push_back(packed);
        }
        out.push_back({blk, SimplicialComplex::from_masks(
                                static_cast<int>(blk.size()), std::move(traces))});
    }
    std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
        return a.elements.front() < b.elements.front();
    });
    return out;
}

}  // namespace relroots
