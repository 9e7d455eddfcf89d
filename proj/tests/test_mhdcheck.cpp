#include <doctest.h>

#include <cmath>
#include <string>

#include "mhdlab/mhdcheck.hpp"
#include "mhdlab/solutions.hpp"

using namespace mhdlab;

namespace {

struct Toy {  // rho = 1 + x, p = x^2, v = (t, 0, 0), B = (0, y, 0)
    template <class T>
    FieldState<T> operator()(const T& t, const T& x, const T& y, const T&) const {
        FieldState<T> s;
        s.rho = 1.0 + x;
        s.p = x * x;
        s.v = {t, T(0.0), T(0.0)};
        s.B = {T(0.0), y, T(0.0)};
        return s;
    }
};

// current-carrying static equilibrium: B = (0, x, 0), p = 1 - x^2/2, rho = 1, v = 0
struct Pinch {
    template <class T>
    FieldState<T> operator()(const T&, const T& x, const T&, const T&) const {
        FieldState<T> s;
        s.rho = T(1.0);
        s.p = 1.0 - 0.5 * x * x;
        s.B = {T(0.0), x, T(0.0)};
        return s;
    }
};

}  // namespace

TEST_SUITE("mhdcheck") {

TEST_CASE("hand-computed residuals") {
    const auto f = make_field("toy", 2.0, Toy{});
    const auto r = residual(*f, SpacetimePoint{0.5, 0.3, 0.2, 0.0});
    CHECK(r.continuity == doctest::Approx(0.5));
    CHECK(r.momentum[0] == doctest::Approx(1.0 + 0.6 / 1.3));
    CHECK(r.momentum[1] == doctest::Approx(0.0));
    CHECK(r.pressure == doctest::Approx(0.3));
    CHECK(r.induction[0] == doctest::Approx(-0.5));
    CHECK(r.divB == doctest::Approx(1.0));
    CHECK(r.max_abs == doctest::Approx(1.0 + 0.6 / 1.3));
    const auto j = to_json(r);
    CHECK(j["momentum"].size() == 3);
    CHECK(j["divB"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("static equilibrium") {
    const auto f = make_field("pinch", 5.0 / 3.0, Pinch{});
    const SpacetimePoint p{0.0, 0.4, -0.2, 0.7};
    CHECK(residual(*f, p).max_abs < 1e-15);
    const Vec3 J = current_density(*f, p);
    CHECK(J[2] == doctest::Approx(1.0));
    const auto d = force_decomposition(*f, p);
    // J x B = -grad(B^2/2) + (B . grad) B, here purely magnetic pressure
    for (int k = 0; k < 3; ++k)
        CHECK(d.lorentz[k] == doctest::Approx(d.pressure_part[k] + d.tension_part[k]));
    CHECK(d.lorentz[0] == doctest::Approx(-0.4));
    CHECK_FALSE(is_force_free(*f, p, 1e-12));
}

TEST_CASE("corrected closed forms are exact solutions") {
    struct Case {
        const char* id;
        const char* variant;
    };
    const Case cases[] = {{"G1/gamma=1", ""},          {"G1/gamma=2", ""},        {"G1/gamma=generic", ""},
                          {"G2/gamma=3/2", "corrected"}, {"G2/gamma=2", "corrected"}, {"G2/gamma=generic", "corrected"},
                          {"G3/case1", "corrected"},   {"G3/case2", ""},          {"G3/case3", ""},
                          {"G4", ""},                  {"G6/alpha2=0", "corrected"}, {"G7", ""},
                          {"G9", "corrected"},         {"G10/case1", ""},         {"G10/case2", ""}};
    for (const auto& c : cases) {
        CAPTURE(c.id);
        const auto f = make_family(c.id, {}, c.variant);
        const auto s = sweep(*f, sample_points(*f, 400, 8));
        CHECK(s.max_abs < 1e-8);
        CHECK(s.max_divB < 1e-11);
    }
}

TEST_CASE("printed typos are detected") {
    const auto g9 = make_family("G9", {}, "printed");
    const auto s = sweep(*g9, sample_points(*g9, 200, 8));
    CHECK(s.max_abs > 1e-4);
    // only B carries the misprint, so mass and pressure stay clean
    CHECK(s.max_norms.continuity < 1e-9);
    CHECK(s.max_norms.pressure < 1e-9);
    CHECK(s.max_norms.induction[0] + s.max_norms.induction[2] > 1e-4);
    CHECK((s.worst_equation.rfind("momentum", 0) == 0 || s.worst_equation.rfind("induction", 0) == 0));
    CHECK(s.points == 200);
}

TEST_CASE("G8 fails only through the unstated compatibility condition") {
    auto f = make_family("G8");
    const double defect = f->derived_constants().at("induction_compatibility");
    CHECK(std::abs(defect) > 1e-3);
    CHECK(sweep(*f, sample_points(*f, 200, 8)).max_abs > 1e-4);
    // choose Z_o so that alpha beta X_o - alpha Y_o + Z_o = 0
    const double al = 0.5, be = 1.2, X = 0.4, Y = 0.5;
    f = make_family("G8", {{"Z_o", al * Y - al * be * X}});
    CHECK(sweep(*f, sample_points(*f, 200, 8)).max_abs < 1e-8);
}

TEST_CASE("sweep is independent of the thread count") {
    const auto f = make_family("G4");
    const auto pts = sample_points(*f, 500, 2);
    const auto a = sweep(*f, pts, 1), b = sweep(*f, pts, 4);
    CHECK(a.max_abs == b.max_abs);
    CHECK(a.max_rel == b.max_rel);
    CHECK(a.worst_point.x == b.worst_point.x);
    CHECK(a.max_norms.momentum[2] == b.max_norms.momentum[2]);
    CHECK(thread_count(3) == 3);
    CHECK(thread_count(0) >= 1);
}

TEST_CASE("frozen-in and vorticity transport hold on solutions") {
    // the transport law drops the baroclinic source grad(rho) x grad(p) / rho^2,
    // so the residual equals that term and vanishes only where it does
    for (const std::string id : {"G1/gamma=2", "G7", "G10/case2", "G4"}) {
        CAPTURE(id);
        const auto f = make_family(id);
        for (const auto& p : sample_points(*f, 50, 5)) {
            for (double c : frozen_in_residual(*f, p)) CHECK(std::abs(c) < 1e-9);
            const auto vt = vorticity_transport(*f, p);
            const FieldJet j = f->jet(p);
            const Vec3 gr{j.rho.g[1], j.rho.g[2], j.rho.g[3]}, gp{j.p.g[1], j.p.g[2], j.p.g[3]};
            const Vec3 baro = cross(gr, gp);
            const double r2 = j.rho.v * j.rho.v;
            for (int k = 0; k < 3; ++k) CHECK(std::abs(vt.residual[k] - baro[k] / r2) < 1e-8);
            const Vec3 w = vorticity(*f, p);
            for (int k = 0; k < 3; ++k) CHECK(w[k] == vt.omega[k]);
        }
    }
    // barotropic along G7, so the bare law closes there
    const auto g7 = make_family("G7");
    for (const auto& p : sample_points(*g7, 50, 6))
        for (double c : vorticity_transport(*g7, p).residual) CHECK(std::abs(c) < 1e-8);
}

TEST_CASE("energy law with the standard flux") {
    for (const std::string id : {"G1/gamma=2", "G10/case1", "G7"}) {
        CAPTURE(id);
        const auto f = make_family(id);
        for (const auto& p : sample_points(*f, 50, 6)) {
            const auto e = energy_law_residual(*f, p, -1.0);
            CHECK(std::abs(e.residual) < 1e-8 * std::max(1.0, e.scale));
        }
    }
    // the literal sign fails wherever v . B varies (G1 has v . B = 0, so it cannot tell)
    const auto g10 = make_family("G10/case1");
    double worst = 0.0;
    for (const auto& p : sample_points(*g10, 50, 6))
        worst = std::max(worst, std::abs(energy_law_residual(*g10, p, 1.0).residual));
    CHECK(worst > 1e-6);
}

TEST_CASE("field-aligned quantities") {
    // B . grad v = 0 on G1 and G4; B . grad p = 0 on G5
    for (const char* id : {"G1/gamma=generic", "G4"}) {
        const auto f = make_family(id);
        for (const auto& p : sample_points(*f, 30, 2))
            for (double c : b_dot_grad_v(*f, p)) CHECK(std::abs(c) < 1e-10);
    }
    const auto g5 = make_family("G5");
    for (const auto& p : sample_points(*g5, 30, 2)) {
        CHECK(std::abs(field_aligned_gradient(*g5, p, ScalarSel::p)) < 1e-9);
        const auto bal = cylindrical_balance(*g5, p);
        CHECK(std::abs(bal[0]) < 1e-7);
        CHECK(std::abs(bal[1]) < 1e-7);
    }
}

TEST_CASE("force-free families") {
    for (const char* id : {"G10/case1", "G6/alpha2=0"}) {
        CAPTURE(id);
        const auto f = make_family(id, {}, std::string(id) == "G6/alpha2=0" ? "corrected" : "");
        for (const auto& p : sample_points(*f, 30, 2)) CHECK(is_force_free(*f, p, 1e-10));
    }
}

TEST_CASE("residual outside the domain throws") {
    const auto f = make_family("G9");
    CHECK_THROWS_AS(residual(*f, SpacetimePoint{-1, 0, 0, 0}), DomainError);
}

}  // TEST_SUITE
