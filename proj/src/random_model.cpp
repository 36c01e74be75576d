#include "relroots/random_model.hpp"

#include <random>
#include <thread>

#include "relroots/errors.hpp"
#include "relroots/reliability.hpp"

namespace relroots {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_stream_seed(std::uint64_t seed, int trial) {
    return splitmix64(seed + kGolden * (static_cast<std::uint64_t>(trial) + 1));
}

namespace {

void validate_model(int m, int d, double p) {
    if (m < 1 || m > SimplicialComplex::kMaxGround || d < 1 || d > m)
        throw DomainError("model needs 1 <= d <= m <= 64");
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability must be in [0,1]");
    if (binomial(m, d) > (1 << 22)) throw ResourceError("model facet-candidate cap");
}

// Visit the k-subsets of {0..m-1} in lexicographic order of sorted lists.
template <typename Fn>
void for_each_subset(int m, int k, Fn&& fn) {
    if (k == 0 || k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Face f = 0;
        for (int e : idx) f |= Face(1) << e;
        fn(f);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

SimplicialComplex sample_pure_complex(int m, int d, double p, std::uint64_t stream_seed) {
    validate_model(m, d, p);
    std::mt19937_64 rng(stream_seed);
    std::vector<Face> facets;
    for_each_subset(m, d, [&](Face f) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p) facets.push_back(f);
    });
    return SimplicialComplex::from_masks(m, facets);
}

ExperimentSummary experiment(int m, int d, double p, int trials, std::uint64_t seed,
                             double epsilon, int jobs) {
    validate_model(m, d, p);
    if (trials < 0) throw DomainError("trial count must be nonnegative");
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must be in [0,1]");
    if (jobs < 1) throw DomainError("jobs must be positive");

    ExperimentSummary s;
    s.m = m;
    s.d = d;
    s.trials = trials;
    s.p = p;
    s.epsilon = epsilon;
    s.seed = seed;
    s.per_trial.resize(trials);

    const double facet_floor = (1.0 - epsilon) * p * binomial(m, d).convert_to<double>();
    auto run_trial = [&](int t) {
        SimplicialComplex c = sample_pure_complex(m, d, p, trial_stream_seed(seed, t));
        TrialRecord rec;
        rec.facet_count = static_cast<std::int64_t>(c.facet_masks().size());
        rec.no_loops = c.loops().empty();
        rec.facet_count_large = static_cast<double>(rec.facet_count) > facet_floor;
        bool covered = !c.is_void();
        for_each_subset(m, d - 1, [&](Face ridge) {
            if (!covered) return;
            bool under = false;
            for (Face f : c.facet_masks())
                if ((ridge & f) == ridge) {
                    under = true;
                    break;
                }
            if (!under) covered = false;
        });
        rec.ridges_covered = covered;
        if (!c.is_void()) {
            RelPoly rel = reliability(c);
            rec.h_nondecreasing = enestrom_kakeya_applies(rel.h);
            rec.all_in_disk =
                reliability_roots(rel).verdict == DiskVerdict::all_in_closed_disk;
        }
        s.per_trial[t] = rec;
    };

    if (jobs == 1) {
        for (int t = 0; t < trials; ++t) run_trial(t);
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&, j] {
                for (int t = j; t < trials; t += jobs) run_trial(t);
            });
        for (auto& th : pool) th.join();
    }

    for (const TrialRecord& rec : s.per_trial) {
        s.count_e1 += rec.no_loops;
        s.count_e2 += rec.ridges_covered;
        s.count_e3 += rec.facet_count_large;
        s.count_all_events += rec.no_loops && rec.ridges_covered && rec.facet_count_large;
        s.count_h_nondecreasing += rec.h_nondecreasing;
        s.count_all_in_disk += rec.all_in_disk;
        s.count_h_nondecreasing_and_in_disk += rec.h_nondecreasing && rec.all_in_disk;
    }
    s.h_implies_disk = s.count_h_nondecreasing == s.count_h_nondecreasing_and_in_disk;
    return s;
}

}  // namespace relroots
