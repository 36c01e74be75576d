#include "relroots/constructions.hpp"

#include <algorithm>
#include <thread>

#include "relroots/errors.hpp"

namespace relroots {

namespace {

void check_site(const SimplicialComplex& c, int v, int k) {
    if (v < 0 || v >= c.m()) throw DomainError("element index out of range");
    if (k < 1) throw DomainError("multiplicity must be at least 1");
    if (c.m() + k - 1 > SimplicialComplex::kMaxGround)
        throw ResourceError("construction exceeds the 64-element cap");
}

}  // namespace

SimplicialComplex thicken(const SimplicialComplex& c, int v, int k) {
    check_site(c, v, k);
    // v becomes a parallel class: copies are v itself plus k-1 fresh
    // elements appended at the top.
    std::vector<Face> facets;
    for (Face f : c.facet_masks()) {
        if (!(f >> v & 1)) {
            facets.push_back(f);
            continue;
        }
        facets.push_back(f);
        for (int j = 0; j < k - 1; ++j)
            facets.push_back((f & ~(Face(1) << v)) | Face(1) << (c.m() + j));
    }
    return SimplicialComplex::from_masks(c.m() + k - 1, facets);
}

SimplicialComplex replace_element(const SimplicialComplex& c, int v, int k) {
    check_site(c, v, k);
    // v becomes a serial bundle: faces through v take the whole bundle,
    // faces avoiding v extend by any proper subset.  On the facet level a
    // facet through v maps to one facet, a facet avoiding v to the k
    // maximal proper subsets.
    const Face bundle_new = ((k == 1 ? Face(0) : (Face(1) << (k - 1)) - 1)) << c.m();
    const Face bundle = bundle_new | Face(1) << v;
    std::vector<Face> facets;
    for (Face f : c.facet_masks()) {
        if (f >> v & 1) {
            facets.push_back(f | bundle);
            continue;
        }
        for (int drop = 0; drop < k; ++drop) {
            Face member = drop == 0 ? Face(1) << v : Face(1) << (c.m() + drop - 1);
            facets.push_back(f | (bundle & ~member));
        }
    }
    return SimplicialComplex::from_masks(c.m() + k - 1, facets);
}

namespace {

RelPoly substitute_over(const std::vector<Face>& faces, int m, const std::vector<int>& kvec) {
    if (static_cast<int>(kvec.size()) != m)
        throw DomainError("substitution needs one multiplicity per element");
    long total = 0;
    for (int k : kvec) {
        if (k < 1) throw DomainError("multiplicity must be at least 1");
        total += k;
    }
    if (total > 4096) throw ResourceError("substituted degree cap is 4096");
    if (faces.empty()) return RelPoly{};

    // The multivariate generating polynomial, one monomial per face:
    // sum_sigma prod_{i in sigma} q^{k_i} prod_{j not in sigma} (1-q^{k_j}).
    // Each face contributes through an in-place scratch expansion.
    const int n = static_cast<int>(total);
    std::vector<Int> acc(static_cast<size_t>(n) + 1, Int(0));
    std::vector<Int> cur(static_cast<size_t>(n) + 1);
    for (Face f : faces) {
        std::fill(cur.begin(), cur.end(), Int(0));
        int shift = 0;
        for (int i = 0; i < m; ++i)
            if (f >> i & 1) shift += kvec[i];
        cur[shift] = 1;
        int width = shift;
        for (int j = 0; j < m; ++j) {
            if (f >> j & 1) continue;
            width += kvec[j];
            for (int i = width; i >= kvec[j]; --i) cur[i] -= cur[i - kvec[j]];
        }
        for (int i = 0; i <= n; ++i)
            if (cur[i] != 0) acc[i] += cur[i];
    }

    Poly p(std::move(acc));
    RelPoly out;
    out.unit_mult = p.strip_unit_root_factor();
    out.h = std::move(p);
    return out;
}

}  // namespace

RelPoly gen_substitute(const SimplicialComplex& c, const std::vector<int>& kvec) {
    if (c.is_void() && static_cast<int>(kvec.size()) == c.m()) return RelPoly{};
    return substitute_over(c.enumerate_faces(), c.m(), kvec);
}

std::vector<SearchRecord> k_search(const SimplicialComplex& c, int k_min, int k_max, int jobs,
                                   std::uint64_t budget) {
    if (c.is_void()) throw DomainError("search needs a nonvoid complex");
    if (k_min < 1 || k_max < k_min) throw DomainError("need 1 <= k_min <= k_max");
    if (jobs < 1) throw DomainError("jobs must be positive");
    const int m = c.m();
    const std::uint64_t span = static_cast<std::uint64_t>(k_max - k_min + 1);
    const std::uint64_t cap = std::min<std::uint64_t>(budget, std::uint64_t(1) << 32);
    std::uint64_t grid = 1;
    for (int i = 0; i < m; ++i) {
        if (grid > cap / span)
            throw ResourceError("search grid exceeds the configured budget");
        grid *= span;
    }
    if (grid > cap) throw ResourceError("search grid exceeds the configured budget");

    const auto faces = c.enumerate_faces();
    std::vector<SearchRecord> records(grid);
    auto run_range = [&](std::uint64_t begin, std::uint64_t step) {
        std::vector<int> kvec(m);
        for (std::uint64_t idx = begin; idx < grid; idx += step) {
            std::uint64_t rest = idx;
            // Lexicographic order: element 0 is the most significant digit.
            for (int i = m - 1; i >= 0; --i) {
                kvec[i] = k_min + static_cast<int>(rest % span);
                rest /= span;
            }
            SearchRecord rec;
            rec.kvec = kvec;
            rec.rel = substitute_over(faces, m, kvec);
            RootReport rep = reliability_roots(rec.rel);
            rec.max_modulus = rep.max_modulus;
            rec.residual_bound = rep.residual_bound;
            rec.verdict = rep.verdict;
            rec.outside = rep.verdict == DiskVerdict::root_outside;
            records[idx] = std::move(rec);
        }
    };
    if (jobs == 1) {
        run_range(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(run_range, t, jobs);
        for (auto& th : pool) th.join();
    }
    return records;
}

}  // namespace relroots
