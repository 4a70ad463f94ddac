#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powersum/types.hpp"

namespace powersum {

/// Seedable 64-bit generator (splitmix64 finalizer). Cheap to construct,
/// so every trial gets its own stream derived from (seed, trial index) and
/// results never depend on how trials are scheduled across workers.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    /// Stream for one trial of one run.
    static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial_index) {
        return SplitMix64(mix(seed) ^ mix(trial_index + 0x7F4A7C15ULL));
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Shared knobs for the randomized harnesses. workers = 0 means one thread
/// per hardware core; any value yields bitwise-identical reports.
struct TrialConfig {
    int n = 1;
    long long trials = 1;
    std::uint64_t seed = 0;
    int hill_climb_steps = 200;
    double step_decay = 0.95;
    double initial_step = 0.3;
    int workers = 0;
    bool record_trials = false;
};

/// Aggregated outcome of a randomized search. max_ratio is the largest
/// observed ratio, argmax_input its serialized trial input (argmax ties
/// break toward the lowest trial index). trial_ratios is filled only when
/// record_trials is set; skipped trials hold NaN there.
struct RatioReport {
    double max_ratio = 0.0;
    long long argmax_trial = -1;
    std::string argmax_input;
    double theoretical_bound = 0.0;
    long long trials_run = 0;
    long long trials_skipped = 0;
    std::vector<double> trial_ratios;
};

/// Random sums of q in {2..5} degree-n polynomials with zeros in the unit
/// disk and positive leading coefficients in [0.5, 2]; the ratio is the
/// largest zero modulus of the sum. Proven to stay within
/// tchakaloff_constant(n); trials where the root finder fails to certify
/// are counted as skipped.
RatioReport tchakaloff_empirical(const TrialConfig& cfg);

/// Empirical lower bound for the best growth constant of the square
/// (m = n) system: samples A on the unit polytorus, solves the system with
/// b_j = n * A_j^j, hill-climbs the arguments, and reports max |z|. The
/// comparison value is the a-priori bound C_n * n.
RatioReport estimate_knn(const TrialConfig& cfg);

/// Observed max |w| / max |A_j| of the n!-point construction on random
/// unit-polytorus targets, compared against the level-n growth constant.
/// Requires 1 <= n <= 7.
RatioReport lift_tightness(const TrialConfig& cfg);

}  // namespace powersum
