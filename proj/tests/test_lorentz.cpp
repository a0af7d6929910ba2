#include <doctest.h>

#include <numbers>

#include "maxlor/koebe.hpp"

using namespace maxlor;
using doctest::Approx;

namespace {
bool near(const LVec3& a, const LVec3& b, double tol) { return maxabs(a - b) < tol; }
}  // namespace

TEST_CASE("lorentz form on basis and isotropic vectors") {
    CHECK(ldot({1, 0, 0}, {1, 0, 0}) == 1);
    CHECK(ldot({0, 0, 1}, {0, 0, 1}) == -1);
    CHECK(ldot({1, 0, 1}, {1, 0, 1}) == 0);
    LVec3 a{0.3, -1.2, 2}, b{1.1, 0.4, -0.7};
    CHECK(ldot(lcross(a, b), a) == Approx(0).epsilon(1e-14));
    CHECK(ldot(lcross(a, b), b) == Approx(0).epsilon(1e-14));
}

TEST_CASE("rotation about a timelike axis") {
    auto R = rotation_about_timelike_axis({0, 0, 1}, std::numbers::pi / 2);
    CHECK(near(R({1, 0, 0}), {0, 1, 0}, 1e-15));

    LVec3 p = sigma(0.3);
    auto I = rotation_about_timelike_axis(p, 0);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) CHECK(I.Q(r, c) == Approx(r == c ? 1.0 : 0.0).epsilon(1e-14));

    auto Q = rotation_about_timelike_axis(p, std::numbers::pi / 3);
    CHECK(Q.form_defect() < 1e-13);
    CHECK(near(Q(p), p, 1e-14));

    CHECK_THROWS_WITH_AS(rotation_about_timelike_axis({1, 0, 0}, 0.5), doctest::Contains("NonTimelikeAxis"),
                         GeometryError);
}

TEST_CASE("random isometries preserve the form") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 20; ++k) {
        auto L = random_isometry(rng, 2.0);
        CHECK(L.form_defect() < 1e-11);
        LVec3 a{0.2, 0.5, -1}, b{-0.4, 1.5, 0.3};
        CHECK(ldot(L(a) - L(b), L(a) - L(b)) == Approx(ldot(a - b, a - b)).epsilon(1e-10));
    }
}

TEST_CASE("spacelike basis is orthonormal") {
    LVec3 ax = sigma({0.3, -0.4});
    auto e = spacelike_basis(ax);
    CHECK(ldot(e[0], e[0]) == Approx(1).epsilon(1e-13));
    CHECK(ldot(e[1], e[1]) == Approx(1).epsilon(1e-13));
    CHECK(std::abs(ldot(e[0], e[1])) < 1e-13);
    CHECK(std::abs(ldot(e[0], ax)) < 1e-13);
    CHECK(std::abs(ldot(e[1], ax)) < 1e-13);
}

TEST_CASE("common isotropic lines of two unit spheres") {
    OrientedSphere a{{1, 0, 0}, 1}, b{{-1, 0, 0}, -1};
    CHECK(touching_residual(a, b) < 1e-15);
    CHECK(near(contact_point(a, b), {0, 0, 0}, 1e-15));
    auto L = common_isotropic_lines(a, b);
    std::array<double, 2> d2{L[0].dir.x2, L[1].dir.x2};
    std::sort(d2.begin(), d2.end());
    for (const auto& l : L) {
        CHECK(near(l.point, {0, 0, 0}, 1e-14));
        CHECK(std::abs(l.dir.x1) < 1e-14);
        CHECK(l.dir.x3 == 1);
        CHECK(line_sphere_residual(l, a) < 1e-13);
        CHECK(line_sphere_residual(l, b) < 1e-13);
    }
    CHECK(d2[0] == Approx(-1));
    CHECK(d2[1] == Approx(1));
}

TEST_CASE("common lines with a null-sphere pass through its apex") {
    OrientedSphere w{{0.5, 0.2, 1}, 0.7};
    // apex on the sphere's cone of contact: any point at Lorentz distance^2 = R^2 with the right sign
    LVec3 apex = w.center + LVec3{0.7 * std::cos(0.4) * 1.5, 0.7 * std::sin(0.4) * 1.5, 0.7 * std::sqrt(1.25)};
    OrientedSphere n{apex, 0};
    REQUIRE(touching_residual(w, n) < 1e-12);
    for (const auto& l : common_isotropic_lines(w, n)) {
        LVec3 q = l.at(apex.x3 - l.point.x3);
        CHECK(near(q, apex, 1e-12));
    }
}

TEST_CASE("common lines are equivariant under isometries") {
    std::mt19937_64 rng(11);
    OrientedSphere a{{1, 0, 0}, 1}, b{{-1, 0, 0}, -1};
    for (int k = 0; k < 10; ++k) {
        auto T = random_isometry(rng);
        auto L = common_isotropic_lines(a, b);
        auto M = common_isotropic_lines({T(a.center), a.radius}, {T(b.center), b.radius});
        for (const auto& l : L) {
            // image line: through T(K), direction Q d
            LVec3 p = T(l.point), d = T.linear(l.dir);
            bool found = false;
            for (const auto& m : M) {
                LVec3 c = ecross(d, m.dir);
                double off = enorm(ecross(m.point - p, d)) / enorm(d);
                found = found || (enorm(c) < 1e-9 * enorm(d) && off < 1e-9);
            }
            CHECK(found);
        }
    }
}

TEST_CASE("spheres not in contact are rejected") {
    CHECK_THROWS_WITH_AS(common_isotropic_lines({{2, 0, 0}, 0.5}, {{-2, 0, 0}, 0.3}), doctest::Contains("NotInContact"),
                         GeometryError);
}

TEST_CASE("sphere through a spacelike circle") {
    SpacelikeCircle c{{0.3, -0.2, 1.4}, {0, 0, 1}, 1.0};
    auto s = sphere_through_circle_with_radius(c, 1.0, 1);
    CHECK(near(s.center, c.center, 1e-15));

    auto t = sphere_through_circle_with_radius(c, 0.6, 1);
    CHECK(lnorm(t.center - c.center) == Approx(0.8).epsilon(1e-14));
    CHECK(near(t.center - c.center, c.axis * 0.8, 1e-14));
    auto e = spacelike_basis(c.axis);
    for (int k = 0; k < 8; ++k) {
        double a = 2 * std::numbers::pi * k / 8;
        LVec3 x = c.center + e[0] * (c.radius * std::cos(a)) + e[1] * (c.radius * std::sin(a));
        CHECK(ldot(x - t.center, x - t.center) == Approx(0.36).epsilon(1e-13));
    }

    auto n = sphere_through_circle_with_radius(c, 0.0, -1);
    CHECK(n.radius == 0);
    CHECK(lnorm(n.center - c.center) == Approx(1.0).epsilon(1e-14));
    LVec3 x = c.center + e[0] * c.radius;
    CHECK(std::abs(ldot(x - n.center, x - n.center)) < 1e-14);

    CHECK_THROWS_WITH_AS(sphere_through_circle_with_radius(c, 1.5, 1), doctest::Contains("RadiusTooLarge"), GeometryError);
}

TEST_CASE("circle through four concyclic points") {
    LVec3 ax = sigma({0.1, 0.2}), ctr{0.4, 0.1, 2.0};
    auto e = spacelike_basis(ax);
    std::array<LVec3, 4> pts;
    for (int k = 0; k < 4; ++k) {
        double a = 0.3 + 1.4 * k;
        pts[k] = ctr + e[0] * (0.7 * std::cos(a)) + e[1] * (0.7 * std::sin(a));
    }
    double res = 1;
    auto c = circle_through(pts, &res);
    CHECK(res < 1e-12);
    CHECK(near(c.center, ctr, 1e-12));
    CHECK(c.radius == Approx(0.7).epsilon(1e-12));
    CHECK(c.axis.x3 > 0);
    CHECK(std::abs(ldot(c.axis, e[0])) < 1e-12);

    CHECK_THROWS_WITH_AS(circle_through({LVec3{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}),
                         doctest::Contains("DegenerateFacePlane"), GeometryError);
}

TEST_CASE("isotropic lines through a common point meet there") {
    LVec3 p{0.1, 0.2, 0.3};
    IsotropicLine a{p - LVec3{0.6, 0.8, 1} * 2, {0.6, 0.8, 1}, 1}, b{p + LVec3{-1, 0, 1} * 0.5, {-1, 0, 1}, 1};
    double gap = 1;
    CHECK(near(line_meet(a, b, &gap), p, 1e-14));
    CHECK(gap < 1e-14);
    CHECK_THROWS_WITH_AS(line_meet(a, IsotropicLine{{0, 0, 0}, {0.6, 0.8, 1}, 1}), doctest::Contains("ParallelGenerators"),
                         GeometryError);
}
