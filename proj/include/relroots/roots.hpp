#pragma once

#include <complex>
#include <vector>

#include "relroots/polynomial.hpp"

namespace relroots {

enum class DiskVerdict { all_in_closed_disk, root_outside, boundary_uncertain };
enum class DecidedBy {
    numeric,
    hurwitz,
    farebrother_cubic,
    farebrother_quartic,
    enestrom_kakeya,
    exact_unit,   // only exact unit roots present
    degenerate,   // no roots (constant polynomial)
};

struct RootReport {
    std::vector<std::complex<double>> roots;  // sorted by (modulus, argument)
    double max_modulus = 0.0;
    double residual_bound = 0.0;
    DiskVerdict verdict = DiskVerdict::all_in_closed_disk;
    DecidedBy decided_by = DecidedBy::degenerate;
    bool converged = true;
};

const char* verdict_name(DiskVerdict v);
const char* decided_by_name(DecidedBy d);

// Simultaneous (Aberth) iteration from deterministically perturbed guesses
// on the Cauchy-bound circle, long-double Newton polish, per-root residual
// bound degree*|p(z)|/|p'(z)| with a cluster fallback at near-multiple
// roots.  Verdict falls back to the exact unit-disk criteria when the
// numeric maximum modulus lands inside the residual band around 1.
// DomainError on degree < 1.
RootReport find_roots(const Poly& p);

// find_roots on the h-part merged with the exact unit roots of the
// (1-q)^unit_mult factor.  Degree-0 h yields a degenerate/exact report.
RootReport reliability_roots(const RelPoly& rel);

// Exact closed-unit-disk criteria over the rationals.
// Monic quadratic q^2 + b q + c: in the closed disk iff |c| <= 1, |b| <= c+1.
bool hurwitz_quadratic_in_disk(const Rat& b, const Rat& c);
// Cubic a0 q^3 + a1 q^2 + a2 q + a3, all coefficients positive (DomainError
// otherwise); the four non-strict conditions are sufficient for the closed disk.
bool farebrother_cubic(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3);
// Monic quartic q^4 + a1 q^3 + a2 q^2 + a3 q + a4; sufficient for the closed disk.
bool farebrother_quartic(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4);
// Positive nondecreasing coefficients from the constant term upward.
bool enestrom_kakeya_applies(const Poly& p);

struct RealRootReport {
    bool all_in_allowed = false;  // every real root in [-1,0) or equal to 1
    int mult_at_one = 0;          // includes the stripped unit factor
    int mult_at_minus_one = 0;
    int mult_at_zero = 0;         // any hit is a violation
    std::vector<double> in_range;     // isolated roots inside (-1,0)
    std::vector<double> violations;   // isolated real roots elsewhere
};

// Exact real-root location for Rel = (1-q)^t h: rational deflation at
// 1, -1, 0, square-free reduction, Sturm isolation, interval refinement
// until each root interval is strictly sorted against [-1,0) and {1}.
RealRootReport real_root_classification(const RelPoly& rel);

// Dimension-2 dichotomy: a loopless pure 2-dimensional complex on m >= 4
// elements with F_2 = f2 has a reliability root outside the closed unit
// disk iff f2 lies in [ceil(m/2), m-2] or [m, 2m-5].
bool dim2_outside_predicate(int m, const Int& f2);

}  // namespace relroots
