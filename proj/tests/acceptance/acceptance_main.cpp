// Acceptance gate: one line per criterion, exit code = number of failures.
// Each criterion re-derives its expectations from independent oracles where
// possible (see tests/support/oracles.hpp) and pins tolerances explicitly.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "powersum/complex_text.hpp"
#include "powersum/experiments.hpp"
#include "powersum/lifting.hpp"
#include "powersum/monomial.hpp"
#include "powersum/powersum.hpp"
#include "powersum/rootfinding.hpp"
#include "powersum/symmetric_functions.hpp"
#include "support/oracles.hpp"
#ifdef POWERSUM_HAVE_CLI
#include "support/run_cli.hpp"
#endif

using namespace powersum;
using testsupport::random_gaussian_rational;
using testsupport::random_in_disk;
using testsupport::random_on_circle;
using testsupport::reference_elementary;
using testsupport::reference_power_sums;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            pass = false;
            detail = why;
        }
    }
};

Outcome conversion_round_trip() {
    Outcome out;
    SplitMix64 rng(100);
    for (int trial = 0; trial < 500; ++trial) {
        const int k = 1 + static_cast<int>(rng.next() % 12);
        std::vector<Complex> s(static_cast<std::size_t>(k));
        double scale = 1.0;
        for (Complex& v : s) {
            v = random_in_disk(rng, 2.0);
            scale = std::max(scale, std::abs(v));
        }
        auto back =
            power_sums_from_elementary(elementary_from_power_sums(make_power_sums(s), k), k);
        for (int i = 0; i < k; ++i) {
            if (std::abs(back.values[i] - s[i]) > 1e-10 * scale) {
                out.fail("float round-trip error above 1e-10*scale at k=" + std::to_string(k));
                return out;
            }
        }
    }
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + static_cast<int>(rng.next() % 12);
        std::vector<GaussianRational> s(static_cast<std::size_t>(k));
        for (GaussianRational& v : s) v = random_gaussian_rational(rng);
        auto back =
            power_sums_from_elementary(elementary_from_power_sums(make_power_sums(s), k), k);
        if (back.values != s) {
            out.fail("rational round-trip not exact at k=" + std::to_string(k));
            return out;
        }
    }
    return out;
}

Outcome determinant_oracles() {
    Outcome out;
    SplitMix64 rng(200);
    for (int k = 1; k <= 8; ++k) {
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<GaussianRational> values(static_cast<std::size_t>(k));
            for (GaussianRational& v : values) v = random_gaussian_rational(rng);

            auto s = make_power_sums(values);
            auto sigma = elementary_from_power_sums(s, k);
            if (elementary_determinant(s, k) != sigma.values[static_cast<std::size_t>(k) - 1]) {
                out.fail("sigma determinant mismatch at k=" + std::to_string(k));
                return out;
            }
            auto sig = make_elementary(values);
            auto recovered = power_sums_from_elementary(sig, k);
            if (power_sum_determinant(sig, k) !=
                recovered.values[static_cast<std::size_t>(k) - 1]) {
                out.fail("power-sum determinant mismatch at k=" + std::to_string(k));
                return out;
            }
        }
    }
    return out;
}

Outcome monomial_decomposition_suite() {
    Outcome out;
    const long long expected_counts[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    auto oracle = testsupport::partition_counts(10);
    SplitMix64 rng(300);
    for (int k = 1; k <= 10; ++k) {
        auto dec = regular_decomposition(k);
        if (static_cast<long long>(dec.terms.size()) != expected_counts[k - 1] ||
            oracle[static_cast<std::size_t>(k)] != expected_counts[k - 1]) {
            out.fail("term count differs from the partition number at k=" + std::to_string(k));
            return out;
        }
        for (const RegularMonomial& term : dec.terms) {
            if (!term.weight_consistent() || !term.sign_consistent()) {
                out.fail("weight or sign rule violated at k=" + std::to_string(k));
                return out;
            }
        }
        for (int rep = 0; rep < 10; ++rep) {
            std::vector<GaussianRational> points(static_cast<std::size_t>(k));
            for (GaussianRational& p : points) p = random_gaussian_rational(rng);
            auto s = make_power_sums(reference_power_sums(points, k));
            auto sigma = reference_elementary(points);
            if (evaluate_decomposition(dec, s) != sigma[static_cast<std::size_t>(k) - 1]) {
                out.fail("evaluation differs from sigma_k at k=" + std::to_string(k));
                return out;
            }
        }
    }
    return out;
}

Outcome solver_round_trip() {
    Outcome out;
    SplitMix64 rng(400);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + trial % 10;
        ComplexList z(static_cast<std::size_t>(n));
        for (Complex& p : z) p = random_in_disk(rng, 1.0);
        PowerSumTarget t{reference_power_sums(z, n)};
        RootSet rs = solve_power_sum_system(t);
        if (match_multisets(z, rs.roots).max_distance > 1e-6) {
            out.fail("recovery distance above 1e-6 at n=" + std::to_string(n));
            return out;
        }
        for (double r : verify_power_sums(t, rs)) {
            if (r > 1e-8) {
                out.fail("solution residual above 1e-8 at n=" + std::to_string(n));
                return out;
            }
        }
    }
    return out;
}

Outcome root_bound_certificates() {
    Outcome out;
    SplitMix64 rng(500);
    for (int n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 1000; ++trial) {
            PowerSumTarget t;
            t.b.resize(static_cast<std::size_t>(n));
            for (Complex& b : t.b) b = random_in_disk(rng, 2.0);
            RootSet rs = solve_power_sum_system(t);
            BoundCertificate cert = bound_certificate(t, rs);
            if (!cert.holds) {
                out.fail("certificate failed at n=" + std::to_string(n) +
                         " with ratio " + std::to_string(cert.ratio));
                return out;
            }
        }
    }
    return out;
}

Outcome representation_round_trip() {
    Outcome out;
    auto plus = decompose(MonicPolynomial{{Complex{1, 0}, Complex{0, 0}}});
    if (std::abs(plus.nodes[0] - Complex{-1, 0}) > 1e-12 ||
        std::abs(plus.nodes[1] - Complex{1, 0}) > 1e-12) {
        out.fail("nodes of z^2+1 differ from {-1, 1}");
        return out;
    }
    auto shifted = decompose(MonicPolynomial{{Complex{1, 0}, Complex{-2, 0}}});
    if (std::abs(shifted.nodes[0] - Complex{1, 0}) > 1e-12 ||
        std::abs(shifted.nodes[1] - Complex{1, 0}) > 1e-12) {
        out.fail("nodes of (z-1)^2 differ from {1, 1}");
        return out;
    }

    SplitMix64 rng(600);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + trial % 10;
        MonicPolynomial f;
        f.a.resize(static_cast<std::size_t>(n));
        double scale = 0.0;
        for (Complex& a : f.a) {
            a = random_in_disk(rng, 2.0);
            scale = std::max(scale, std::abs(a));
        }
        MonicPolynomial back = reconstruct(decompose(f));
        for (std::size_t i = 0; i < f.a.size(); ++i) {
            if (std::abs(back.a[i] - f.a[i]) > 1e-8 * (1.0 + scale)) {
                out.fail("coefficient error above 1e-8*(1+max|a|) at n=" + std::to_string(n));
                return out;
            }
        }
    }
    return out;
}

Outcome lifting_construction() {
    Outcome out;
    SplitMix64 rng(700);
    double worst_residual = 0.0;
    double worst_bound_ratio = 0.0;
    int worst_bound_n = 0;
    double worst_preserved = 0.0;

    for (int n = 1; n <= 7; ++n) {
        const double d_n = lift_bound_sequence(n).values[static_cast<std::size_t>(n) - 1];
        for (int trial = 0; trial < 200; ++trial) {
            LiftTarget t;
            t.A.resize(static_cast<std::size_t>(n));
            for (Complex& a : t.A) a = random_on_circle(rng);

            LiftedSolution sol = lift(t);
            LiftVerification ver = verify_lift(t, sol);
            for (double r : ver.residuals) worst_residual = std::max(worst_residual, r);

            const double allowed = d_n * max_modulus(t.A) * (1.0 + 1e-9);
            const double ratio = max_modulus(sol.points) / allowed;
            if (ratio > worst_bound_ratio) {
                worst_bound_ratio = ratio;
                worst_bound_n = n;
            }

            // Preservation of the lower-order equations under an arbitrary
            // shift constant, checked on a subsample for runtime.
            if (trial % 20 == 0 && n >= 2) {
                ComplexList expanded = lift_step(sol.points, random_in_disk(rng, 2.0), n + 1);
                using LC = std::complex<long double>;
                for (int j = 1; j <= n; ++j) {
                    LC sum{0.0L, 0.0L};
                    for (const Complex& w : expanded) {
                        LC cur{1.0L, 0.0L};
                        for (int e = 0; e < j; ++e) cur *= LC{w.real(), w.imag()};
                        sum += cur;
                    }
                    LC rhs{1.0L, 0.0L};
                    for (int e = 0; e < j; ++e)
                        rhs *= LC{t.A[static_cast<std::size_t>(j - 1)].real(),
                                  t.A[static_cast<std::size_t>(j - 1)].imag()};
                    const long double num =
                        std::abs(sum / static_cast<long double>(expanded.size()) - rhs);
                    const double res =
                        static_cast<double>(num / std::max(1.0L, std::abs(rhs)));
                    worst_preserved = std::max(worst_preserved, res);
                }
            }
        }
    }

    if (worst_residual > 1e-9)
        out.fail("equation residual above 1e-9 (worst " + std::to_string(worst_residual) + ")");
    if (worst_preserved > 1e-9)
        out.fail("lower-order preservation residual above 1e-9 (worst " +
                 std::to_string(worst_preserved) + ")");
    if (worst_bound_ratio > 1.0) {
        // The growth-constant inequality itself is violated by sampled
        // targets from level 4 on; the construction and its residuals are
        // correct (checked above), and the looser envelope E_{k+1} = E_k +
        // (1 + E_k^{k+1})^{1/(k+1)} does contain every point set (see
        // tests/unit/test_lifting.cpp). Reported as-is rather than widened.
        out.fail("max|w| <= D_n*max|A| fails at n=" + std::to_string(worst_bound_n) +
                 " (observed " + std::to_string(worst_bound_ratio) +
                 "x the allowed bound); construction residuals pass");
    }
    return out;
}

Outcome growth_constant_facts() {
    Outcome out;
    auto rows = lift_bound_asymptotics(200);
    if (rows[0].value != 1.0) out.fail("first value is not 1");
    if (std::fabs(rows[1].value - (1.0 + std::sqrt(2.0))) > 1e-12)
        out.fail("second value differs from 1+sqrt(2)");
    for (const LiftBoundRow& row : rows) {
        if (row.value < static_cast<double>(row.n)) {
            out.fail("value below n at n=" + std::to_string(row.n));
            break;
        }
        if (row.n >= 2) {
            const double prev = rows[static_cast<std::size_t>(row.n) - 2].value;
            const double rhs = 1.0 + 1.0 / (row.n * std::pow(prev, row.n - 1));
            if (row.increment > rhs + 1e-12) {
                out.fail("increment inequality fails at n=" + std::to_string(row.n));
                break;
            }
            if (row.ratio_to_n <= 1.0) {
                out.fail("ratio not above 1 at n=" + std::to_string(row.n));
                break;
            }
        }
        if (row.n >= 3 &&
            row.ratio_to_n >= rows[static_cast<std::size_t>(row.n) - 2].ratio_to_n) {
            out.fail("ratio not strictly decreasing at n=" + std::to_string(row.n));
            break;
        }
    }
    return out;
}

Outcome zero_location_trials() {
    Outcome out;
    for (int n = 2; n <= 8; ++n) {
        TrialConfig cfg;
        cfg.n = n;
        cfg.trials = 1000;
        cfg.seed = 20250819;
        RatioReport report = tchakaloff_empirical(cfg);
        if (report.max_ratio > report.theoretical_bound * (1.0 + 1e-9)) {
            out.fail("ratio exceeds the constant at n=" + std::to_string(n));
            return out;
        }
    }
    return out;
}

Outcome cli_determinism() {
    Outcome out;
#ifdef POWERSUM_HAVE_CLI
    const std::string cases[] = {
        "explore --mode tchakaloff --n 3 --trials 32 --seed 7",
        "explore --mode knn --n 2 --trials 8 --seed 7 --hill-climb-steps 40",
        "explore --mode lift-gap --n 3 --trials 32 --seed 7",
    };
    for (const std::string& base : cases) {
        auto serial = testsupport::run_cli(base + " --workers 1");
        auto parallel = testsupport::run_cli(base + " --workers 4");
        if (serial.output.empty() || serial.output != parallel.output) {
            out.fail("reports differ between worker counts for: " + base);
            return out;
        }
        if (serial.exit_code != parallel.exit_code) {
            out.fail("exit codes differ between worker counts for: " + base);
            return out;
        }
    }
#else
    out.fail("CLI binary not built; configure with POWERSUM_BUILD_TOOLS=ON");
#endif
    return out;
}

struct Criterion {
    const char* name;
    double time_limit_seconds;
    Outcome (*run)();
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"conversion round-trip (float and exact)", 5.0, conversion_round_trip},
        {"determinant oracles agree exactly", 5.0, determinant_oracles},
        {"monomial decomposition suite", 10.0, monomial_decomposition_suite},
        {"power-sum solver round-trip", 30.0, solver_round_trip},
        {"root bound certificates", 60.0, root_bound_certificates},
        {"representation round-trip", 30.0, representation_round_trip},
        {"lifting construction", 60.0, lifting_construction},
        {"growth constant facts", 1.0, growth_constant_facts},
        {"zero location trials", 60.0, zero_location_trials},
        {"report determinism across workers", 30.0, cli_determinism},
    };

    int failures = 0;
    int index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = c.run();
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed > c.time_limit_seconds)
            outcome.fail("runtime " + std::to_string(elapsed) + "s exceeds " +
                         std::to_string(c.time_limit_seconds) + "s");
        if (outcome.pass) {
            std::printf("PASS %2d %-42s (%.2fs)\n", index, c.name, elapsed);
        } else {
            std::printf("FAIL %2d %-42s (%.2fs): %s\n", index, c.name, elapsed,
                        outcome.detail.c_str());
            ++failures;
        }
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
