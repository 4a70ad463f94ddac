#include "powersum/experiments.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "powersum/complex_text.hpp"
#include "powersum/lifting.hpp"
#include "powersum/powersum.hpp"
#include "powersum/rootfinding.hpp"

namespace powersum {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_config(const TrialConfig& cfg, const char* who) {
    if (cfg.n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    if (cfg.trials < 1) throw std::invalid_argument(std::string(who) + ": trials must be >= 1");
    if (!(cfg.step_decay > 0.0 && cfg.step_decay < 1.0))
        throw std::invalid_argument(std::string(who) + ": step_decay must be in (0, 1)");
    if (cfg.hill_climb_steps < 0)
        throw std::invalid_argument(std::string(who) + ": hill_climb_steps must be >= 0");
}

std::string render_json_complex(Complex z) {
    return "[" + render_double(z.real()) + "," + render_double(z.imag()) + "]";
}

std::string render_json_complex_list(const ComplexList& zs) {
    std::string out = "[";
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i) out += ",";
        out += render_json_complex(zs[i]);
    }
    return out + "]";
}

Complex sample_unit_circle(SplitMix64& rng) {
    const double angle = 2.0 * std::numbers::pi * rng.next_double();
    return {std::cos(angle), std::sin(angle)};
}

Complex sample_unit_disk(SplitMix64& rng) {
    const double angle = 2.0 * std::numbers::pi * rng.next_double();
    const double radius = std::sqrt(rng.next_double());
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

/// Runs fn(i) for i in [0, trials) across the requested number of threads.
/// fn must write only to its own trial's slots.
template <class Fn>
void for_each_trial(long long trials, int workers, const Fn& fn) {
    int thread_count = workers > 0
                           ? workers
                           : static_cast<int>(std::thread::hardware_concurrency());
    if (thread_count < 1) thread_count = 1;
    if (static_cast<long long>(thread_count) > trials)
        thread_count = static_cast<int>(trials);

    if (thread_count == 1) {
        for (long long i = 0; i < trials; ++i) fn(i);
        return;
    }

    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) {
        pool.emplace_back([&] {
            while (true) {
                const long long i = next.fetch_add(1);
                if (i >= trials) break;
                fn(i);
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

/// Shared aggregation: per-trial ratios (NaN = skipped) reduced to a
/// RatioReport; the argmax input is recomputed afterwards from its trial
/// index, so nothing but doubles is stored per trial.
template <class TrialFn>
RatioReport run_search(const TrialConfig& cfg, double bound, const TrialFn& trial_fn) {
    std::vector<double> ratios(static_cast<std::size_t>(cfg.trials), kNaN);
    for_each_trial(cfg.trials, cfg.workers, [&](long long i) {
        ratios[static_cast<std::size_t>(i)] = trial_fn(i, nullptr);
    });

    RatioReport report;
    report.theoretical_bound = bound;
    for (long long i = 0; i < cfg.trials; ++i) {
        const double r = ratios[static_cast<std::size_t>(i)];
        if (std::isnan(r)) {
            ++report.trials_skipped;
            continue;
        }
        ++report.trials_run;
        if (report.argmax_trial < 0 || r > report.max_ratio) {
            report.max_ratio = r;
            report.argmax_trial = i;
        }
    }
    if (report.argmax_trial >= 0) {
        std::string input;
        trial_fn(report.argmax_trial, &input);
        report.argmax_input = std::move(input);
    }
    if (cfg.record_trials) report.trial_ratios = std::move(ratios);
    return report;
}

double max_root_ratio(const PowerSumTarget& target) {
    RootSet solution = solve_power_sum_system(target);
    return max_modulus(solution.roots);
}

}  // namespace

RatioReport tchakaloff_empirical(const TrialConfig& cfg) {
    require_config(cfg, "tchakaloff_empirical");
    if (cfg.n > 24) throw std::invalid_argument("tchakaloff_empirical: n is capped at 24");
    const int n = cfg.n;

    auto trial = [&](long long index, std::string* input_out) -> double {
        SplitMix64 rng = SplitMix64::for_trial(cfg.seed, static_cast<std::uint64_t>(index));
        const int q = 2 + static_cast<int>(rng.next() % 4);

        ComplexList sum(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
        std::string description;
        if (input_out) description = "{\"q\":" + std::to_string(q) + ",\"polys\":[";
        for (int t = 0; t < q; ++t) {
            ComplexList roots(static_cast<std::size_t>(n));
            for (Complex& r : roots) r = sample_unit_disk(rng);
            const double lead = 0.5 + 1.5 * rng.next_double();
            PolynomialCoefficients poly = expand_from_roots(roots);
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += lead * poly.coeffs[i];
            if (input_out) {
                if (t) description += ",";
                description += "{\"lead\":" + render_double(lead) +
                               ",\"roots\":" + render_json_complex_list(roots) + "}";
            }
        }
        if (input_out) *input_out = description + "]}";

        try {
            RootSet zeros = find_roots(PolynomialCoefficients{std::move(sum)});
            return max_modulus(zeros.roots);
        } catch (const ConvergenceError&) {
            return kNaN;
        }
    };

    return run_search(cfg, tchakaloff_constant(n), trial);
}

RatioReport estimate_knn(const TrialConfig& cfg) {
    require_config(cfg, "estimate_knn");
    if (cfg.n > 24) throw std::invalid_argument("estimate_knn: n is capped at 24");
    const int n = cfg.n;

    auto ratio_at = [n](const std::vector<double>& angles) -> double {
        PowerSumTarget target;
        target.b.resize(angles.size());
        for (std::size_t j = 0; j < angles.size(); ++j) {
            const Complex a{std::cos(angles[j]), std::sin(angles[j])};
            Complex power{1.0, 0.0};
            for (std::size_t e = 0; e <= j; ++e) power *= a;
            target.b[j] = static_cast<double>(n) * power;
        }
        try {
            return max_root_ratio(target);
        } catch (const ConvergenceError&) {
            return kNaN;
        }
    };

    auto trial = [&](long long index, std::string* input_out) -> double {
        SplitMix64 rng = SplitMix64::for_trial(cfg.seed, static_cast<std::uint64_t>(index));
        std::vector<double> angles(static_cast<std::size_t>(n));
        for (double& a : angles) a = 2.0 * std::numbers::pi * rng.next_double();

        double best = ratio_at(angles);
        if (std::isnan(best)) return kNaN;

        double step = cfg.initial_step;
        for (int s = 0; s < cfg.hill_climb_steps; ++s) {
            const std::size_t j = static_cast<std::size_t>(rng.next() % static_cast<std::uint64_t>(n));
            const double delta = (2.0 * rng.next_double() - 1.0) * step;
            const double saved = angles[j];
            angles[j] = saved + delta;
            const double candidate = ratio_at(angles);
            if (std::isnan(candidate) || candidate <= best)
                angles[j] = saved;
            else
                best = candidate;
            step *= cfg.step_decay;
        }

        if (input_out) {
            ComplexList a(static_cast<std::size_t>(n));
            for (std::size_t j = 0; j < a.size(); ++j)
                a[j] = Complex{std::cos(angles[j]), std::sin(angles[j])};
            *input_out = "{\"a\":" + render_json_complex_list(a) + "}";
        }
        return best;
    };

    return run_search(cfg, tchakaloff_constant(n) * n, trial);
}

RatioReport lift_tightness(const TrialConfig& cfg) {
    require_config(cfg, "lift_tightness");
    const int n = cfg.n;
    if (n > 7) throw std::invalid_argument("lift_tightness: n must be <= 7");

    auto trial = [&](long long index, std::string* input_out) -> double {
        SplitMix64 rng = SplitMix64::for_trial(cfg.seed, static_cast<std::uint64_t>(index));
        LiftTarget target;
        target.A.resize(static_cast<std::size_t>(n));
        for (Complex& a : target.A) a = sample_unit_circle(rng);
        if (input_out) *input_out = "{\"a\":" + render_json_complex_list(target.A) + "}";

        LiftedSolution sol = lift(target);
        return max_modulus(sol.points) / max_modulus(target.A);
    };

    const double bound = lift_bound_sequence(n).values[static_cast<std::size_t>(n) - 1];
    return run_search(cfg, bound, trial);
}

}  // namespace powersum
