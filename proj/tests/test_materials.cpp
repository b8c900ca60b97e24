#include <doctest.h>

#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/materials.hpp"

using namespace casimir;

namespace {

// Reference values from a 50-digit evaluation of the closed forms (tests/oracles/closed_form_oracle.py).
void check_close(Complex got, Complex want, double rel) {
    CHECK(std::abs(got - want) <= rel * std::abs(want));
}

const DrudeMetal kGold = DrudeMetal::gold();
const DrudeMetal kGoldNoRelaxation{3e17, 0.0};

} // namespace

TEST_CASE("conductivity") {
    CHECK(drude_conductivity(0.0, kGold) == Complex(3e17, 0.0));
    const double w = 1.0 / kGold.tau();
    check_close(drude_conductivity(w, kGold), Complex(1.5e17, 1.5e17), 1e-15);
    check_close(drude_conductivity(1e13, kGold), Complex(2.8975876616853915e17, 5.4474648039685361e16), 1e-14);
    CHECK_THROWS_AS(drude_conductivity(-1.0, kGold), DomainError);
}

TEST_CASE("conductivity magnitude is non-increasing") {
    double previous = std::abs(drude_conductivity(0.0, kGold));
    for (double lw = 6.0; lw <= 16.0; lw += 0.01) {
        const double now = std::abs(drude_conductivity(std::pow(10.0, lw), kGold));
        CHECK(now <= previous * (1.0 + 4e-16));
        previous = now;
    }
    CHECK(std::abs(drude_conductivity(1.0, kGold) - 3e17) < 1e-9 * 3e17);
}

TEST_CASE("surface impedance") {
    check_close(surface_impedance(1e13, kGoldNoRelaxation),
                Complex(0.0011516471649044516, -0.0011516471649044516), 1e-14);
    check_close(surface_impedance(1e13, kGold), Complex(0.0010488961564849406, -0.0012644637738755058), 1e-14);

    SUBCASE("without relaxation the phase is exactly -pi/4") {
        for (double w : {1e9, 1e11, 1e13, 1e14}) {
            const Complex z = surface_impedance(w, kGoldNoRelaxation);
            CHECK(z.real() == doctest::Approx(-z.imag()).epsilon(1e-15));
        }
    }
    SUBCASE("small in the normal skin-effect range") {
        for (double lw = 9.0; lw <= 14.0; lw += 0.05) CHECK(std::abs(surface_impedance(std::pow(10.0, lw), kGold)) < 0.05);
    }
    SUBCASE("vanishes for an ideal conductor") {
        CHECK(std::abs(surface_impedance(1e13, DrudeMetal(1e40, 0.0))) < 1e-12);
    }
    CHECK_THROWS_AS(surface_impedance(0.0, kGold), DomainError);
}

TEST_CASE("dielectric function") {
    check_close(dielectric_function(1e13, kGoldNoRelaxation), Complex(1.0, 376991.11843077519), 1e-14);
    check_close(dielectric_function(1e13, kGold), Complex(-68453.861635346064, 364121.60444333013), 1e-13);
    for (double w : {1e9, 1e12, 1e15}) CHECK(dielectric_function(w, kGoldNoRelaxation).real() == 1.0);
    CHECK_THROWS_AS(dielectric_function(-5.0, kGold), DomainError);
}

TEST_CASE("metal validation") {
    CHECK_THROWS_AS(DrudeMetal(0.0, 1e-14), DomainError);
    CHECK_THROWS_AS(DrudeMetal(3e17, -1.0), DomainError);
    CHECK_THROWS_AS(DrudeMetal(NAN, 1e-14), DomainError);
    CHECK(DrudeMetal::gold() == DrudeMetal(3e17, 1.88e-14));
}

TEST_CASE("model names") {
    for (auto m : {BoundaryModel::Impedance, BoundaryModel::Dielectric, BoundaryModel::PerfectConductor}) {
        CHECK(parse_boundary_model(to_string(m)) == m);
    }
    CHECK_THROWS_AS(parse_boundary_model("drude"), DomainError);
}

TEST_CASE("reflection factors") {
    check_close(reflection_te(Complex(0.0, 5.0), 1e13, kGold, BoundaryModel::Impedance),
                Complex(1.0126690255290479, 0.010622563257895092), 1e-13);
    CHECK(std::abs(reflection_te(Complex(0.0, 5.0), 1e13, kGold, BoundaryModel::Impedance)) != doctest::Approx(1.0));
    check_close(reflection_tm(Complex(0.0, 2.0), 1e12, kGold, BoundaryModel::Impedance),
                Complex(0.99963238045167084, -0.00036064312652902261), 1e-13);

    SUBCASE("perfect conductor") {
        for (Complex p : {Complex(0.3, 0.0), Complex(0.0, 7.0), Complex(1.0, 0.0)}) {
            CHECK(reflection_te(p, 1e13, kGold, BoundaryModel::PerfectConductor) == Complex(1.0, 0.0));
            CHECK(reflection_tm(p, 1e13, kGold, BoundaryModel::PerfectConductor) == Complex(1.0, 0.0));
        }
    }
    SUBCASE("zeta = 0 and grazing limits") {
        MaterialResponse ideal{BoundaryModel::Impedance, Complex(0.0, 0.0), Complex(1.0, 0.0)};
        CHECK(reflection_fraction_te(Complex(0.4, 0.0), ideal).value() == Complex(1.0, 0.0));
        CHECK(reflection_fraction_tm(Complex(1.0, 0.0), ideal).value() == Complex(1.0, 0.0));
        const auto response = MaterialResponse::at(1e13, kGold, BoundaryModel::Impedance);
        CHECK(reflection_fraction_te(Complex(0.0, 0.0), response).value() == Complex(1.0, 0.0));
    }
    SUBCASE("pole") {
        MaterialResponse pole{BoundaryModel::Impedance, Complex(0.5, 0.0), Complex(1.0, 0.0)};
        CHECK_THROWS_AS(reflection_fraction_te(Complex(2.0, 0.0), pole), SingularityError);
        CHECK_THROWS_AS(reflection_fraction_tm(Complex(0.5, 0.0), pole), SingularityError);
    }
    SUBCASE("fraction parts are consistent") {
        for (auto model : {BoundaryModel::Impedance, BoundaryModel::Dielectric}) {
            const auto response = MaterialResponse::at(3e12, kGold, model);
            for (Complex p : {Complex(0.7, 0.0), Complex(0.0, 40.0)}) {
                for (const auto& f : {reflection_fraction_te(p, response), reflection_fraction_tm(p, response)}) {
                    CHECK(std::abs(f.num_minus_den - (f.num - f.den)) <= 1e-12 * std::abs(f.num));
                    CHECK(std::abs(f.num_plus_den - (f.num + f.den)) <= 1e-12 * std::abs(f.num));
                }
            }
        }
    }
}

TEST_CASE("impedance and dielectric factors agree for plane waves") {
    for (double lw = 10.0; lw <= 14.0; lw += 0.25) {
        const double w = std::pow(10.0, lw);
        for (double p = 0.05; p <= 1.0; p += 0.05) {
            const Complex te_i = reflection_te(p, w, kGold, BoundaryModel::Impedance);
            const Complex te_d = reflection_te(p, w, kGold, BoundaryModel::Dielectric);
            const Complex tm_i = reflection_tm(p, w, kGold, BoundaryModel::Impedance);
            const Complex tm_d = reflection_tm(p, w, kGold, BoundaryModel::Dielectric);
            CHECK(std::abs(te_i - te_d) < 1e-2 * std::abs(te_d));
            CHECK(std::abs(tm_i - tm_d) < 1e-2 * std::abs(tm_d));
        }
    }
}
