// Acceptance checks for the reference configuration: gold plates 1 um apart at
// 300 K. Prints one PASS/FAIL line per criterion and exits non-zero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include "analytic_suite.hpp"
#include "casimir/force.hpp"
#include "casimir/spectrum.hpp"
#include "oracle.hpp"

using namespace casimir;

namespace {

int failures = 0;

void verdict(int id, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

bool within_band(double value, double target, double band) { return std::abs(value - target) <= band * target; }

} // namespace

int main() {
    const PlateSystem gold = PlateSystem::reference(BoundaryModel::Impedance);

    const auto start = std::chrono::steady_clock::now();
    const ForceReport r = report(gold);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("reference report: %.2f s, all cells converged: %s\n", seconds, r.all_converged() ? "yes" : "no");

    // 1. Evanescent dominance in the TE sector.
    verdict(1, within_band(r.c2_over_c1_te, 38.0, 0.15) && seconds < 60.0 && r.all_converged(),
            fmt("TE C2 / TE C1 = %.4f (target 38 +/- 15%%), runtime %.2f s (limit 60 s)", r.c2_over_c1_te, seconds));

    // 2. Net enhancement over ideal mirrors, TE + TM over both contours.
    verdict(2, within_band(r.total_over_perfect_conductor, 36.5, 0.15),
            fmt("(TE+TM, C1+C2) / perfect conductor (TE+TM) = %.4f (target 36.5 +/- 15%%); "
                "TE-only (C1+C2) / perfect conductor TE = %.4f",
                r.total_over_perfect_conductor, r.te_total_over_perfect_conductor));

    // 3. Impedance and dielectric descriptions agree outside the TE evanescent sector.
    double worst = 0.0;
    std::string sectors;
    for (const auto& s : r.sectors) {
        if (s.sector == "te_c2") continue;
        sectors += fmt(" %s=%.2e", s.sector.c_str(), s.relative_difference);
        if (s.sector == "te_c1" || s.sector == "tm_total") worst = std::max(worst, s.relative_difference);
    }
    verdict(3, worst < 1e-2, fmt("max relative difference over TE C1 and TM (C1+C2) = %.2e (limit 1e-2);%s", worst,
                                 sectors.c_str()));

    // 4. Opposite signs of the TE evanescent force.
    const double te_c2_imp = r.force(Mode::TE, Contour::C2, BoundaryModel::Impedance);
    const double te_c2_diel = r.force(Mode::TE, Contour::C2, BoundaryModel::Dielectric);
    verdict(4, te_c2_imp > 0.0 && te_c2_diel < 0.0,
            fmt("TE C2 force: impedance %.6e (must be > 0), dielectric %.6e (must be < 0) dyn/cm^2", te_c2_imp,
                te_c2_diel));

    // 5. Ideal mirrors have no evanescent spectrum.
    {
        const PlateSystem perfect = gold.with_model(BoundaryModel::PerfectConductor);
        double largest = 0.0;
        for (double w : FrequencyGrid{1e10, 1e14, 100}.frequencies()) {
            for (Mode mode : {Mode::TE, Mode::TM}) {
                largest = std::max(largest, std::abs(spectral_density(mode, Contour::C2, w, perfect)));
            }
        }
        verdict(5, largest == 0.0, fmt("max |F_omega| on C2 over 100 frequencies in [1e10, 1e14] = %g", largest));
    }

    // 6. Randomized comparison against a long-double midpoint sum with 10^6 panels.
    {
        std::mt19937_64 rng(20240611);
        std::uniform_real_distribution<double> log_omega(9.0, 14.0);
        std::bernoulli_distribution coin(0.5);
        const oracle::Plates plates;
        double worst_rel = 0.0;
        std::string detail;
        for (int i = 0; i < 20; ++i) {
            const bool te = coin(rng);
            const bool c2 = coin(rng);
            const double w = std::pow(10.0, log_omega(rng));
            const double got = spectral_density(te ? Mode::TE : Mode::TM, c2 ? Contour::C2 : Contour::C1, w, gold);
            const double want = static_cast<double>(oracle::spectral_density(te, c2, w, plates));
            const double rel = std::abs(got - want) / std::abs(want);
            if (rel > worst_rel) {
                worst_rel = rel;
                detail = fmt("%s %s omega=%.4e: %.10e vs %.10e", te ? "TE" : "TM", c2 ? "C2" : "C1", w, got, want);
            }
        }
        verdict(6, worst_rel < 1e-5,
                fmt("20 random points, worst relative difference %.2e (limit 1e-5) at %s", worst_rel, detail.c_str()));
    }

    // 7. Closed-form integrals and error-estimate coverage.
    {
        const auto cases = analytic::fixed_cases();
        const double limits[] = {1e-12, 1e-9, 1e-8, 1e-8};
        const double tolerances[] = {1e-7, 1e-10, 1e-9, 1e-9};
        bool exact_ok = true;
        std::string detail;
        for (std::size_t i = 0; i < cases.size(); ++i) {
            QuadratureSettings s;
            s.rel_tol = tolerances[i];
            const double err = std::abs(analytic::integrate(cases[i], s).value - cases[i].exact);
            const double rel = i == 0 ? err : err / std::abs(cases[i].exact);
            exact_ok = exact_ok && rel <= limits[i];
            detail += fmt(" %s: %.1e (limit %.0e);", cases[i].name.c_str(), rel, limits[i]);
        }
        const auto coverage = analytic::error_estimate_coverage(20240611, 100);
        verdict(7, exact_ok && coverage.bounded >= 95,
                fmt("%s error estimate bounds true error in %d/%d randomized cases (need >= 95)", detail.c_str(),
                    coverage.bounded, coverage.total));
    }

    // 8. Spectrum shape on the default 400-point grid.
    {
        const FrequencyGrid grid;
        const auto samples = sweep(grid, gold, {}, std::array{Mode::TE, Mode::TM}, std::array{Contour::C1, Contour::C2});
        int te_c2_negative = 0;
        double first_negative = 0.0;
        int c1_sign_changes[2] = {0, 0};
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto& c = samples[i].contributions; // te_c1, te_c2, tm_c1, tm_c2
            if (!(c[1].value > 0.0)) {
                if (te_c2_negative++ == 0) first_negative = samples[i].omega;
            }
            if (i > 0) {
                const auto& p = samples[i - 1].contributions;
                for (int m = 0; m < 2; ++m) {
                    if ((p[2 * m].value > 0.0) != (c[2 * m].value > 0.0)) ++c1_sign_changes[m];
                }
            }
        }
        const bool positive = te_c2_negative == 0;
        const bool oscillates = c1_sign_changes[0] + c1_sign_changes[1] > 0;
        verdict(8, positive && oscillates,
                fmt("(a) TE C2 impedance spectrum positive on [1e10, 1e14]: %s (%d of %zu points non-positive, "
                    "first at omega = %.3e); (b) C1 spectrum changes sign: %s (TE %d, TM %d changes)",
                    positive ? "yes" : "no", te_c2_negative, samples.size(), first_negative,
                    oscillates ? "yes" : "no", c1_sign_changes[0], c1_sign_changes[1]));
    }

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
