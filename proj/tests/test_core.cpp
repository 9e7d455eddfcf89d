#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "mhdlab/core.hpp"

using namespace mhdlab;

TEST_SUITE("core") {

TEST_CASE("cylindrical round trip") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 500; ++i) {
        const Vec3 pos{u(rng), u(rng), u(rng)}, vec{u(rng), u(rng), u(rng)};
        const auto c = cart_to_cyl(pos, vec);
        const auto [p2, v2] = cyl_to_cart(c);
        for (int k = 0; k < 3; ++k) {
            CHECK(p2[k] == doctest::Approx(pos[k]).epsilon(1e-13));
            CHECK(std::abs(v2[k] - vec[k]) < 1e-13);
        }
        // rotation keeps the length
        const double n1 = std::hypot(vec[0], vec[1], vec[2]);
        const double n2 = std::hypot(c.vec[0], c.vec[1], c.vec[2]);
        CHECK(n2 == doctest::Approx(n1).epsilon(1e-14));
    }
}

TEST_CASE("cylindrical known values") {
    const auto c = cart_to_cyl({0, 2, 1}, {1, 0, 5});
    CHECK(c.r == 2.0);
    CHECK(c.phi == doctest::Approx(M_PI / 2));
    CHECK(std::abs(c.vec[0]) < 1e-15);   // e_x is azimuthal at phi = pi/2
    CHECK(c.vec[1] == doctest::Approx(-1.0));
    CHECK(c.vec[2] == 5.0);
}

TEST_CASE("axis is rejected") {
    CHECK_THROWS_AS(cart_to_cyl({0, 0, 1}, {1, 1, 1}), DomainError);
    CHECK_THROWS_AS(cyl_to_cart({0.0, 1.0, 0.0, {1, 0, 0}}), DomainError);
}

TEST_CASE("catalog ids are unique and resolvable") {
    std::set<std::string> seen;
    for (const auto& d : family_catalog()) {
        CHECK(seen.insert(d.id).second);
        CHECK(&family_descriptor(d.id) == &d);
        CHECK((d.kind == "closed" || d.kind == "reduced"));
        CHECK(d.free_gamma == !d.fixed_gamma);
    }
    CHECK(seen.size() == 22);
    CHECK_THROWS_AS(family_descriptor("G11"), UnknownFamily);
}

TEST_CASE("defaults validate for every family") {
    for (const auto& d : family_catalog()) {
        CAPTURE(d.id);
        ParamSet p;
        CHECK_NOTHROW(p = validate_params(d.id, {}));
        CHECK(p.count("gamma") == 1);
    }
}

TEST_CASE("fixed gamma values") {
    CHECK(validate_params("G1/gamma=1", {}).at("gamma") == 1.0);
    CHECK(validate_params("G1/gamma=2", {}).at("gamma") == 2.0);
    CHECK(validate_params("G2/gamma=3/2", {}).at("gamma") == 1.5);
    CHECK(validate_params("G9", {}).at("gamma") == 3.0);
    CHECK(validate_params("G10/case1", {}).at("gamma") == doctest::Approx(4.0 / 3.0));
    CHECK(validate_params("G10/case2", {}).at("gamma") == doctest::Approx(1.25));
    MhdConfig cfg;
    cfg.gamma = 1.4;
    CHECK(validate_params("G7", {}, cfg).at("gamma") == 1.4);
}

TEST_CASE("constraint failures are all reported") {
    try {
        validate_params("G1/gamma=1", {{"R_o", -1.0}, {"alpha", 0.0}});
        FAIL("expected ConstraintViolation");
    } catch (const ConstraintViolation& e) {
        CHECK(e.failures().size() >= 2);
        CHECK(std::string(e.what()).find("G1/gamma=1") != std::string::npos);
    }
    CHECK_THROWS_AS(validate_params("G7", {{"bogus", 1.0}}), ConstraintViolation);
    CHECK_THROWS_AS(validate_params("G7", {{"E_o", NAN}}), ConstraintViolation);
    CHECK_THROWS_AS(validate_params("G9", {{"alpha", -0.4}}), ConstraintViolation);
    CHECK_THROWS_AS(validate_params("G3/case2", {{"alpha2", 2.0}}), ConstraintViolation);
}

TEST_CASE("G3 case 4 interval") {
    CHECK_NOTHROW(validate_params("G3/case4", {{"alpha1", 0.75}, {"alpha2", 1.35}}));
    CHECK_THROWS_AS(validate_params("G3/case4", {{"alpha1", 0.75}, {"alpha2", 1.6}}), ConstraintViolation);
}

TEST_CASE("variant resolution") {
    auto v = resolve_variant("G5", "");
    CHECK(v.at("vz") == "printed-vz");
    CHECK(v.at("rho") == "rho-free");
    v = resolve_variant("G5", "corrected-vz,const-cyl-corrected");
    CHECK(v.at("vz") == "corrected-vz");
    CHECK(v.at("rho") == "const-cyl-corrected");
    CHECK(variant_string(v) == "const-cyl-corrected,corrected-vz");
    CHECK(variant_string(resolve_variant("G10/case1", "")) == "default");
    CHECK_THROWS_AS(resolve_variant("G9", "nonsense"), ConstraintViolation);
}

TEST_CASE("finiteness") {
    CHECK(SpacetimePoint{1, 2, 3, 4}.finite());
    CHECK_FALSE(SpacetimePoint{1, NAN, 3, 4}.finite());
    MhdState s;
    CHECK(is_finite(s));
    s.B[2] = INFINITY;
    CHECK_FALSE(is_finite(s));
}

}  // TEST_SUITE
