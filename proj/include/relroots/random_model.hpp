#pragma once

#include <cstdint>
#include <vector>

#include "relroots/complex.hpp"
#include "relroots/polynomial.hpp"
#include "relroots/roots.hpp"

namespace relroots {

// Deterministic stream split: trial t of an experiment with seed s draws
// from mt19937_64(splitmix64(s + GOLDEN*(t+1))).
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t trial_stream_seed(std::uint64_t seed, int trial);

// One draw from the pure-complex model: every d-subset of {0..m-1} is a
// facet independently with probability p, d-subsets visited in
// lexicographic order, one uniform per subset via (x >> 11) * 2^-53.
SimplicialComplex sample_pure_complex(int m, int d, double p, std::uint64_t stream_seed);

struct TrialRecord {
    bool no_loops = false;            // E1
    bool ridges_covered = false;      // E2: every (d-1)-subset below a facet
    bool facet_count_large = false;   // E3: > (1-eps) p C(m,d)
    bool h_nondecreasing = false;     // h coefficients positive, nondecreasing
    bool all_in_disk = false;         // find_roots verdict on the reliability
    std::int64_t facet_count = 0;
};

struct ExperimentSummary {
    int m = 0, d = 0, trials = 0;
    double p = 0.0, epsilon = 0.0;
    std::uint64_t seed = 0;
    std::int64_t count_e1 = 0, count_e2 = 0, count_e3 = 0, count_all_events = 0;
    std::int64_t count_h_nondecreasing = 0, count_all_in_disk = 0;
    std::int64_t count_h_nondecreasing_and_in_disk = 0;
    // Every nondecreasing-h trial also got the in-disk verdict.
    bool h_implies_disk = false;
    std::vector<TrialRecord> per_trial;  // indexed by trial
};

ExperimentSummary experiment(int m, int d, double p, int trials, std::uint64_t seed,
                             double epsilon = 0.1, int jobs = 1);

}  // namespace relroots
