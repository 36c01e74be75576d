// Acceptance gate: eleven independent checks, one printed line each, exit 0
// only when every line passes.  Tolerances and time limits are pinned inline
// next to the check they guard.  Later checks reuse the matroid corpus built
// by check 8; a failure there cascades explicitly instead of silently.

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "relroots/complex.hpp"
#include "relroots/constructions.hpp"
#include "relroots/errors.hpp"
#include "relroots/graphs.hpp"
#include "relroots/matroid.hpp"
#include "relroots/polynomial.hpp"
#include "relroots/random_model.hpp"
#include "relroots/reliability.hpp"
#include "relroots/reports.hpp"
#include "relroots/roots.hpp"

using namespace relroots;

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Failure {
    std::string msg;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw Failure{msg};
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

std::string h_key(const RelPoly& rel) {
    std::string k;
    for (const Int& c : rel.h.coeffs()) {
        k += c.str();
        k += ',';
    }
    k += '|';
    k += std::to_string(rel.unit_mult);
    return k;
}

Int coeff_sum(const Poly& p) {
    Int s = 0;
    for (const Int& c : p.coeffs()) s += c;
    return s;
}

// ---------------------------------------------------------------------------
// 1. Dual-route reproduction of the thickened-K4 reliability.

const Coeffs kBundledH = {1, 3, 6, 10, 14, 18, 22, 26, 26, 22, 18, 14, 10, 6};

std::string check_royle_sokal() {
    auto t0 = Clock::now();
    const RelPoly want{poly_from(kBundledH), 3};

    RelPoly graph_route = reliability(cographic_matroid(royle_sokal()));
    require(graph_route == want, "graph route does not match the fixed coefficients");

    RelPoly subst_route = gen_substitute(cographic_matroid(k4()), {6, 1, 6, 1, 1, 1});
    require(subst_route == want, "substitution route does not match the fixed coefficients");

    RootReport rr = find_roots(graph_route.h);
    double delta = std::fabs(rr.max_modulus - 1.0017);
    require(delta <= 1e-3, fmt("max modulus %.12f not within 1e-3 of 1.0017", rr.max_modulus));

    double el = secs_since(t0);
    require(el < 10.0, fmt("took %.1f s, limit 10 s", el));
    return fmt("both routes coefficient-exact; max modulus %.10f (delta %.1e); %.2f s",
               rr.max_modulus, delta, el);
}

// ---------------------------------------------------------------------------
// 2. Fano substitutions: six pinned table rows plus the full 5^7 sweep.

struct FanoRow {
    std::array<int, 7> k;
    double mm;
};

const FanoRow kFanoRows[6] = {
    {{1, 4, 4, 4, 5, 4, 5}, 1.0018475452848614},
    {{2, 2, 5, 2, 5, 5, 5}, 1.003722670361891},
    {{3, 3, 3, 5, 5, 5, 3}, 1.001595847748084},
    {{3, 3, 5, 3, 5, 5, 5}, 1.0070841870536522},
    {{4, 4, 4, 5, 5, 5, 4}, 1.0076584896344196},
    {{4, 4, 5, 4, 5, 5, 5}, 1.0087285165185493},
};

std::string check_fano_sweep() {
    auto t0 = Clock::now();
    unsigned hw = std::thread::hardware_concurrency();
    int jobs = hw > 0 ? static_cast<int>(hw) : 1;
    auto recs = k_search(fano(), 1, 5, jobs);
    double el = secs_since(t0);
    require(recs.size() == 78125, fmt("sweep returned %zu records, expected 78125", recs.size()));
    require(el < 600.0, fmt("sweep took %.1f s, limit 600 s", el));

    long outside = 0;
    for (const auto& r : recs) outside += r.outside ? 1 : 0;

    for (const auto& row : kFanoRows) {
        size_t idx = 0;
        for (int k : row.k) idx = idx * 5 + static_cast<size_t>(k - 1);
        const auto& rec = recs[idx];
        require(std::equal(row.k.begin(), row.k.end(), rec.kvec.begin(), rec.kvec.end()),
                "lexicographic record order broken");
        double delta = std::fabs(rec.max_modulus - row.mm);
        require(delta <= 1e-9,
                fmt("kvec (%d,%d,%d,%d,%d,%d,%d): modulus %.16f vs %.16f", row.k[0], row.k[1],
                    row.k[2], row.k[3], row.k[4], row.k[5], row.k[6], rec.max_modulus, row.mm));
        require(rec.outside, "pinned table row not flagged outside the disk");
    }
    return fmt("6 rows within 1e-9; %zu records, %ld outside, jobs=%d; %.1f s", recs.size(),
               outside, jobs, el);
}

// ---------------------------------------------------------------------------
// 3. Fano substitution polynomial, all 24 coefficients exact.

const Coeffs kFanoSweepH = {1,   4,   10,  20,  35,  56,  84,  120, 165, 218, 278, 343,
                            411, 476, 528, 557, 552, 504, 418, 311, 200, 106, 46,  13};

std::string check_fano_coeffs() {
    RelPoly r = gen_substitute(fano(), {1, 4, 4, 4, 5, 4, 5});
    require(r.h == poly_from(kFanoSweepH), "h coefficients differ from the pinned 24");
    require(r.unit_mult == 4, fmt("unit multiplicity %d, expected 4", r.unit_mult));
    return "24 coefficients and the (1-q)^4 factor exact";
}

// ---------------------------------------------------------------------------
// 4. Dimension-2 dichotomy: witness complexes vs the closed-form predicate.

std::string check_dim2_dichotomy() {
    auto t0 = Clock::now();
    long checked = 0, skipped = 0;
    for (int m = 4; m <= 12; ++m) {
        const Int lo = (m + 1) / 2;  // loopless needs every element covered
        const Int hi = binomial(m, 2);
        for (Int f2 = lo; f2 <= hi; ++f2) {
            SimplicialComplex w = dim2_witness(m, f2);
            require(w.is_pure() && w.f_vector() == Coeffs{1, m, f2},
                    fmt("witness malformed at m=%d", m));
            RelPoly rel = reliability(w);
            RootReport rr = find_roots(rel.h);
            if (rr.verdict == DiskVerdict::boundary_uncertain) {
                ++skipped;  // residual band straddles |q| = 1, no numeric verdict
                continue;
            }
            bool outside = rr.verdict == DiskVerdict::root_outside;
            bool predicted = dim2_outside_predicate(m, f2);
            require(outside == predicted,
                    fmt("m=%d f2=%s: predicate %d, roots %d", m, f2.str().c_str(),
                        int(predicted), int(outside)));
            ++checked;
        }
    }
    double el = secs_since(t0);
    require(el < 60.0, fmt("took %.1f s, limit 60 s", el));
    return fmt("%ld (m,F2) pairs agree, %ld guarded skips; %.1f s", checked, skipped, el);
}

// ---------------------------------------------------------------------------
// 5. Path-family h-part and its positive real root.

std::string check_path_family() {
    for (int m = 3; m <= 12; ++m) {
        RelPoly rel = reliability(path_complex(m));
        require(rel.h == Poly({Int(1), Int(m - 2), Int(-1)}),
                fmt("m=%d: h-part is not 1+(m-2)q-q^2", m));
        require(rel.unit_mult == m - 2, fmt("m=%d: unit multiplicity %d", m, rel.unit_mult));
        double want = (m - 2 + std::sqrt(double(m - 2) * (m - 2) + 4)) / 2.0;
        RootReport rr = find_roots(rel.h);
        double best = 1e300;
        for (auto z : rr.roots) best = std::min(best, std::abs(z - std::complex<double>(want)));
        require(best <= 1e-10, fmt("m=%d: positive root off by %.2e", m, best));
    }
    return "h-parts exact and positive roots within 1e-10 for m=3..12";
}

// ---------------------------------------------------------------------------
// 6. Transform identities, deletion/link recursion, sum multiplicativity.

SimplicialComplex random_complex(std::mt19937_64& rng, int max_m) {
    int m = 1 + static_cast<int>(rng() % max_m);
    int nf = static_cast<int>(rng() % 5);
    std::vector<Face> facets;
    for (int i = 0; i < nf; ++i) facets.push_back(rng() & ((Face(1) << m) - 1));
    return SimplicialComplex::from_masks(m, facets);
}

void check_sum_identity(const SimplicialComplex& c) {
    if (c.is_void()) return;
    Coeffs f = c.f_vector();
    Coeffs h = f_to_h(f);
    Int sum = 0;
    for (const Int& x : h) sum += x;
    require(sum == f.back(), "sum of H-vector is not the top face count");
}

void check_recursion(const SimplicialComplex& c) {
    Poly whole = reliability(c).expand();
    for (int v = 0; v < c.m(); ++v) {
        Poly rhs = Poly::one_minus_q_pow(1) * reliability(c.deletion(v)).expand() +
                   Poly::monomial(1, 1) * reliability(c.link(v)).expand();
        require(whole == rhs, fmt("deletion/link recursion fails at element %d", v));
    }
    if (!c.is_void()) {
        Poly prod = Poly::constant(1);
        for (const auto& comp : components(c)) prod = prod * reliability(comp.part).expand();
        require(whole == prod, "component product differs from the reliability");
    }
}

std::string check_transforms() {
    std::mt19937_64 rng(20260814);

    // f_to_h / h_to_f invert each other on arbitrary integer vectors.
    std::uniform_int_distribution<int> entry(-100, 100);
    for (int t = 0; t < 500; ++t) {
        size_t len = 1 + rng() % 12;
        Coeffs v(len);
        for (auto& x : v) x = entry(rng);
        require(h_to_f(f_to_h(v)) == v && f_to_h(h_to_f(v)) == v,
                "transform round-trip is not the identity");
    }

    std::vector<SimplicialComplex> corpus;
    corpus.push_back(fano());
    corpus.push_back(uniform_matroid(6, 3));
    corpus.push_back(uniform_matroid(5, 5));
    corpus.push_back(uniform_matroid(7, 1));
    corpus.push_back(cographic_matroid(k4()));
    corpus.push_back(cographic_matroid(royle_sokal()));
    for (int m : {3, 6, 9, 12}) corpus.push_back(path_complex(m));
    corpus.push_back(dim2_witness(9, 17));
    corpus.push_back(broken_circuit_complex(k4()));
    Multigraph k23{5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}};
    corpus.push_back(broken_circuit_complex(k23));
    corpus.push_back(thicken(cographic_matroid(k4()), 0, 3));
    corpus.push_back(replace_element(fano(), 2, 2));
    corpus.push_back(SimplicialComplex::from_facets(3, {{}}));
    corpus.push_back(SimplicialComplex::from_masks(4, {}));

    // Exhaustive pure complexes on four elements, all facet sets of each size.
    for (int d = 1; d <= 4; ++d) {
        std::vector<Face> subs;
        for (Face f = 0; f < 16; ++f)
            if (std::popcount(f) == static_cast<unsigned>(d)) subs.push_back(f);
        for (std::uint32_t pick = 1; pick < (1u << subs.size()); ++pick) {
            std::vector<Face> facets;
            for (std::uint32_t b = pick; b; b &= b - 1)
                facets.push_back(subs[std::countr_zero(b)]);
            corpus.push_back(SimplicialComplex::from_masks(4, facets));
        }
    }

    long sum_checked = 0, recursed = 0;
    for (const auto& c : corpus) {
        check_sum_identity(c);
        ++sum_checked;
        if (c.m() <= 8) {
            check_recursion(c);
            ++recursed;
        }
    }

    // Seeded random complexes up to eight elements, arbitrary facet sets,
    // plus draws from the pure random model.
    for (int t = 0; t < 300; ++t) {
        SimplicialComplex c = random_complex(rng, 8);
        check_sum_identity(c);
        check_recursion(c);
        ++sum_checked;
        ++recursed;
    }
    for (int t = 0; t < 20; ++t) {
        SimplicialComplex c = sample_pure_complex(8, 3, 0.4, trial_stream_seed(999, t));
        check_sum_identity(c);
        check_recursion(c);
        ++sum_checked;
        ++recursed;
    }

    // Direct sums multiply: random pairs with combined ground of at most 8.
    long sums = 0;
    for (int t = 0; t < 100; ++t) {
        SimplicialComplex a = random_complex(rng, 4);
        SimplicialComplex b = random_complex(rng, 4);
        Poly lhs = reliability(a.direct_sum(b)).expand();
        require(lhs == reliability(a).expand() * reliability(b).expand(),
                "direct sum reliability is not the product");
        ++sums;
    }
    return fmt("500 round-trips; H-sum on %ld complexes; recursion on %ld; %ld sum pairs",
               sum_checked, recursed, sums);
}

// ---------------------------------------------------------------------------
// 7. Chromatic identity across every connected simple graph on up to five
//    vertices, with shuffled tie-break orders.

std::string check_chromatic() {
    auto t0 = Clock::now();
    std::mt19937_64 rng(777);
    // Connected labeled simple graph counts per n, a known sequence.
    const long kConnected[6] = {0, 1, 1, 4, 38, 728};
    long graphs = 0, checks = 0;
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        long here = 0;
        for (std::uint32_t pick = 0; pick < (1u << slots.size()); ++pick) {
            Multigraph g{n, {}};
            for (std::uint32_t b = pick; b; b &= b - 1)
                g.edges.push_back(slots[std::countr_zero(b)]);
            if (!graph_connected(g)) continue;
            ++here;
            auto base = chromatic_reliability_identity(g);
            require(base.holds, fmt("identity fails (n=%d, %zu edges)", n, g.edges.size()));
            std::vector<int> order(g.edges.size());
            std::iota(order.begin(), order.end(), 0);
            for (int r = 0; r < 3; ++r) {
                std::shuffle(order.begin(), order.end(), rng);
                auto alt = chromatic_reliability_identity(g, &order);
                require(alt.holds,
                        fmt("identity fails under a shuffled order (n=%d, %zu edges)", n,
                            g.edges.size()));
                require(alt.lhs == base.lhs, "chromatic side changed with the edge order");
                ++checks;
            }
            ++graphs;
        }
        require(here == kConnected[n],
                fmt("found %ld connected graphs on %d vertices, expected %ld", here, n,
                    kConnected[n]));
    }
    double el = secs_since(t0);
    return fmt("%ld graphs, %ld shuffled re-checks, all exact; %.1f s", graphs, checks, el);
}

// ---------------------------------------------------------------------------
// 8. Matroid corpus: exhaustive ground sets up to six elements plus cographic
//    matroids of every connected multigraph with at most six edges.  Real
//    roots confined to [-1,0) or 1 and partial alternating sums nonnegative.

struct MatroidCorpus {
    std::map<std::string, RelPoly> distinct;        // all, keyed by (h, unit)
    std::map<std::string, RelPoly> distinct_rank3;  // dimension 3 members
    std::array<long, 7> per_m{};                    // part (a) counts by ground size
    long total = 0;
    long cographic = 0;
    bool complete = false;
};

MatroidCorpus g_corpus;

// Basis-exchange axiom directly on the facet family (sorted masks): the
// second, independent route beside the face-poset exchange filter.
bool basis_exchange(const std::vector<Face>& bases) {
    for (Face a : bases)
        for (Face b : bases)
            for (Face rest = a & ~b; rest; rest &= rest - 1) {
                Face xb = rest & ~(rest - 1);
                bool found = false;
                for (Face cand = b & ~a; cand; cand &= cand - 1) {
                    Face yb = cand & ~(cand - 1);
                    if (std::binary_search(bases.begin(), bases.end(), (a ^ xb) | yb)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
    return true;
}

void record_matroid(const SimplicialComplex& c, MatroidCorpus& out) {
    RelPoly rel = reliability(c);
    require(coeff_sum(rel.h) == Int(c.facet_masks().size()),
            "h-vector sum is not the basis count");
    std::string key = h_key(rel);
    out.distinct.emplace(key, rel);
    if (c.dimension() && *c.dimension() == 3) out.distinct_rank3.emplace(key, rel);
    ++out.total;
}

std::string check_matroid_corpus() {
    auto t0 = Clock::now();

    // Part (a): every pure facet family on m <= 6 elements, filtered by the
    // exchange test and cross-checked against the basis-exchange axiom.
    // Totals must reproduce the known labeled matroid counts.
    const long kLabeled[7] = {1, 2, 5, 16, 68, 406, 3807};
    for (int m = 1; m <= 6; ++m) {
        long count_m = 0;
        {
            auto c = SimplicialComplex::from_facets(m, {{}});
            require(is_matroid(c).is_matroid, "all-loops complex rejected");
            record_matroid(c, g_corpus);
            ++count_m;
        }
        for (int d = 1; d <= m; ++d) {
            std::vector<Face> subs;
            for (Face f = 0; f < (Face(1) << m); ++f)
                if (std::popcount(f) == static_cast<unsigned>(d)) subs.push_back(f);
            const size_t S = subs.size();
            std::vector<Face> facets;
            facets.reserve(S);
            for (std::uint32_t pick = 1; pick < (1u << S); ++pick) {
                facets.clear();
                for (std::uint32_t b = pick; b; b &= b - 1)
                    facets.push_back(subs[std::countr_zero(b)]);
                bool bx = basis_exchange(facets);
                auto c = SimplicialComplex::from_masks(m, facets);
                bool ex = is_matroid(c).is_matroid;
                require(ex == bx, fmt("exchange filter disagrees with basis exchange, m=%d", m));
                if (!ex) continue;
                record_matroid(c, g_corpus);
                ++count_m;
            }
        }
        require(count_m == kLabeled[m],
                fmt("m=%d: %ld matroids found, expected %ld", m, count_m, kLabeled[m]));
        g_corpus.per_m[m] = count_m;
    }

    // Part (b): cographic matroids of connected multigraphs with <= 6 edges
    // (self-loops and parallels included; at most seven vertices matter).
    for (int n = 1; n <= 7; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) slots.emplace_back(i, j);
        Multigraph g{n, {}};
        std::function<void(int, int)> rec = [&](int start, int left) {
            if (left == 0) {
                if (!graph_connected(g)) return;
                record_matroid(cographic_matroid(g), g_corpus);
                ++g_corpus.cographic;
                return;
            }
            for (int s = start; s < static_cast<int>(slots.size()); ++s) {
                g.edges.push_back(slots[s]);
                rec(s, left - 1);
                g.edges.pop_back();
            }
        };
        for (int k = std::max(0, n - 1); k <= 6; ++k) rec(0, k);
    }

    // Root-location claims depend only on (h, unit), so distinct keys cover
    // the whole corpus.
    const Rat bs[3] = {Rat(1), Rat(3, 2), Rat(2)};
    for (const auto& [key, rel] : g_corpus.distinct) {
        RealRootReport rr = real_root_classification(rel);
        require(rr.all_in_allowed, "real root outside [-1,0)+{1} for h=" + key);
        for (const Rat& b : bs) {
            auto rows = brown_colbourn_check(rel.h.coeffs(), b);
            for (size_t j = 0; j < rows.size(); ++j)
                require(rows[j].nonneg,
                        fmt("partial sum negative at j=%zu, b=%s for h=", j,
                            b.str().c_str()) + key);
        }
    }

    g_corpus.complete = true;
    double el = secs_since(t0);
    return fmt("%ld matroids (%ld pure families, %ld cographic), %zu distinct h; %.0f s",
               g_corpus.total, g_corpus.total - g_corpus.cographic, g_corpus.cographic,
               g_corpus.distinct.size(), el);
}

// ---------------------------------------------------------------------------
// 9. Exact disk criteria against the numeric root finder.

std::string check_exact_vs_numeric() {
    std::mt19937_64 rng(424243);
    long decisive = 0, banded = 0;
    for (int t = 0; t < 1000; ++t) {
        int deg = 2 + static_cast<int>(rng() % 3);
        Coeffs c(deg + 1);
        for (auto& x : c) x = 1 + static_cast<int>(rng() % 9);
        Poly p(c);

        bool exact_in = false;
        if (deg == 2)
            exact_in = hurwitz_quadratic_in_disk(Rat(c[1]) / Rat(c[2]), Rat(c[0]) / Rat(c[2]));
        else if (deg == 3)
            exact_in = farebrother_cubic(Rat(c[3]), Rat(c[2]), Rat(c[1]), Rat(c[0]));
        else
            exact_in = farebrother_quartic(Rat(c[3]) / Rat(c[4]), Rat(c[2]) / Rat(c[4]),
                                           Rat(c[1]) / Rat(c[4]), Rat(c[0]) / Rat(c[4]));

        RootReport rr = find_roots(p);
        if (rr.max_modulus > 1.0 + rr.residual_bound) {
            require(!exact_in, fmt("poly #%d: numeric outside but exact criterion accepts", t));
            ++decisive;
        } else if (rr.max_modulus < 1.0 - rr.residual_bound) {
            require(exact_in, fmt("poly #%d: numeric inside but exact criterion rejects", t));
            ++decisive;
        } else {
            ++banded;
        }
    }
    return fmt("1000 polynomials, %ld decisive agreements, %ld inside the residual band",
               decisive, banded);
}

// ---------------------------------------------------------------------------
// 10. Rank-3 corpus members and generated rank-4 paving h-vectors stay in
//     the closed disk.

std::string check_low_rank_in_disk() {
    require(g_corpus.complete, "matroid corpus unavailable (previous check failed)");
    long rank3 = 0;
    for (const auto& [key, rel] : g_corpus.distinct_rank3) {
        RootReport rr = reliability_roots(rel);
        require(rr.verdict != DiskVerdict::root_outside &&
                    rr.max_modulus <= 1.0 + rr.residual_bound,
                "rank-3 root outside the closed disk for h=" + key);
        ++rank3;
    }

    long paving = 0;
    for (int m = 5; m <= 9; ++m) {
        const Int h1 = m - 4, h2 = binomial(m - 3, 2), h3 = binomial(m - 2, 3);
        Int lo = h3 - h2 + h1 - 1;
        if (lo < 1) lo = 1;
        const Int hi = binomial(m - 1, 4);
        for (Int h4 = lo; h4 <= hi; ++h4) {
            Coeffs h = paving_h_vector(m, 4, h4 + binomial(m - 1, 3));
            require(h == Coeffs{1, h1, h2, h3, h4}, "paving h-vector closed form broken");
            RelPoly rel{poly_from(h), m - 4};
            RootReport rr = reliability_roots(rel);
            require(rr.verdict != DiskVerdict::root_outside &&
                        rr.max_modulus <= 1.0 + rr.residual_bound,
                    fmt("rank-4 paving root outside at m=%d, h4=%s", m, h4.str().c_str()));
            ++paving;
        }
    }
    return fmt("%ld distinct rank-3 h-vectors and %ld rank-4 paving h-vectors in-disk", rank3,
               paving);
}

// ---------------------------------------------------------------------------
// 11. Random-model experiment: nondecreasing h forces the in-disk verdict and
//     the summary is bit-identical across runs and job counts.

std::string check_random_model() {
    auto t0 = Clock::now();
    const std::uint64_t seed = 20260814ull;
    ExperimentSummary s1 = experiment(14, 3, 0.5, 100, seed, 0.1, 1);
    ExperimentSummary s2 = experiment(14, 3, 0.5, 100, seed, 0.1, 1);
    ExperimentSummary s3 = experiment(14, 3, 0.5, 100, seed, 0.1, 3);

    require(s1.count_h_nondecreasing > 0, "no trial had nondecreasing h; check is vacuous");
    require(s1.h_implies_disk, "some nondecreasing-h trial missed the in-disk verdict");
    for (const auto& tr : s1.per_trial)
        require(!tr.h_nondecreasing || tr.all_in_disk, "per-trial implication violated");

    std::string j1 = experiment_json(s1), j2 = experiment_json(s2), j3 = experiment_json(s3);
    require(j1 == j2, "two identical runs serialized differently");
    require(j1 == j3, "jobs=3 run serialized differently");
    double el = secs_since(t0);
    return fmt("%lld/%d trials h-nondecreasing, all in-disk; summaries identical; %.1f s",
               static_cast<long long>(s1.count_h_nondecreasing), s1.trials, el);
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::string (*fn)();
    };
    const Entry checks[] = {
        {"royle-sokal dual-route reproduction", check_royle_sokal},
        {"fano kvec table and full sweep", check_fano_sweep},
        {"fano substitution coefficients", check_fano_coeffs},
        {"dimension-2 outside predicate vs roots", check_dim2_dichotomy},
        {"path family h-part and positive root", check_path_family},
        {"transform identities and recursions", check_transforms},
        {"chromatic identity, connected graphs n<=5", check_chromatic},
        {"matroid corpus real roots and partial sums", check_matroid_corpus},
        {"exact disk criteria vs numeric roots", check_exact_vs_numeric},
        {"rank-3 and rank-4 paving in-disk", check_low_rank_in_disk},
        {"random model determinism and h=>disk", check_random_model},
    };

    int failed = 0;
    int id = 0;
    for (const auto& e : checks) {
        ++id;
        std::string detail;
        bool ok = true;
        try {
            detail = e.fn();
        } catch (const Failure& f) {
            ok = false;
            detail = f.msg;
        } catch (const std::exception& ex) {
            ok = false;
            detail = std::string("unexpected exception: ") + ex.what();
        }
        std::printf("%2d/11 %s  %-44s %s\n", id, ok ? "PASS" : "FAIL", e.name, detail.c_str());
        std::fflush(stdout);
        failed += ok ? 0 : 1;
    }
    std::printf("acceptance: %d/11 passed\n", 11 - failed);
    return failed == 0 ? 0 : 1;
}
