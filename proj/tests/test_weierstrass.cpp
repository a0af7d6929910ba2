#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "maxlor/christoffel.hpp"
#include "maxlor/weierstrass.hpp"

using namespace maxlor;
using doctest::Approx;

TEST_CASE("dual radii") {
    CHECK(w_radius_white(0, 0.5) == Approx(1.25));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> U(-0.4, 0.4), V(0.01, 0.3);
    for (int k = 0; k < 50; ++k) {
        cplx c(U(rng), U(rng));
        double rho = V(rng);
        CHECK(w_radius_white(c, rho) * w_radius_black(c, rho) == Approx(1).epsilon(1e-14));
        CHECK(w_radius_white(c, rho) == Approx(1 / polar_sphere(c, rho).radius).epsilon(1e-14));
    }
}

TEST_CASE("frame") {
    auto p = gen_regular_pattern(3, 3, 0.2);
    auto F = w_frame(p, {1, 1});
    CHECK(maxabs(F.N - LVec3{0, 0, 1}) < 1e-15);

    auto q = fx::mobius();
    for (auto f : q.patch.faces()) {
        auto W = w_frame(q, f);
        CHECK(ldot(W.N, W.N) == Approx(-1).epsilon(1e-13));
        CHECK(ldot(W.T_white, W.T_white) == Approx(1).epsilon(1e-13));
        CHECK(ldot(W.T_black, W.T_black) == Approx(1).epsilon(1e-13));
        CHECK(std::abs(ldot(W.N, W.T_white)) < 1e-13);
        CHECK(std::abs(ldot(W.N, W.T_black)) < 1e-13);
    }
}

TEST_CASE("white tangent follows the Koebe edge") {
    auto p = fx::mobius();
    auto net = build_koebe_net(p);
    const Patch& P = p.patch;
    for (auto f : P.faces()) {
        auto w = Patch::face_whites(f);
        LVec3 T = w_frame(p, f).T_white;
        LVec3 e = lunit(net.white[P.vid(w[0])].center - net.white[P.vid(w[1])].center);
        CHECK(std::abs(std::abs(ldot(T, e)) - 1) < 1e-10);
    }
}

TEST_CASE("edge increments") {
    auto p = fx::mobius();
    const Patch& P = p.patch;
    for (auto f : P.faces()) {
        auto w = Patch::face_whites(f);
        LVec3 a = w_edge_white(p, w[0], w[1], f), b = w_edge_white(p, w[1], w[0], f);
        CHECK(maxabs(a + b) < 1e-12);
        double R0 = w_radius_white(p.center[P.vid(w[0])], p.radius[P.vid(w[0])]);
        double R1 = w_radius_white(p.center[P.vid(w[1])], p.radius[P.vid(w[1])]);
        CHECK(lnorm(a) == Approx(R0 + R1).epsilon(1e-12));
        for (auto bb : Patch::face_blacks(f))
            for (int k = 0; k < 2; ++k) {
                auto [h, c] = w_contact_increments(p, bb, w[0], f, k);
                CHECK(lnorm(h) == Approx(R0).epsilon(1e-12));
                CHECK(std::abs(ldot(c, c)) < 1e-10 * edot(c, c));
            }
    }
}

TEST_CASE("Weierstrass assembly matches the Christoffel dual") {
    for (const auto& p : {fx::regular(4, 0.2), fx::mobius(), fx::mobius(8, 0.1)}) {
        auto W = assemble_weierstrass(p);
        auto koebe = build_koebe_net(p);
        auto D = dualize(koebe, koebe_congruences(koebe));
        double diam = diameter(D.net.points());
        CHECK(W.residual < 1e-11 * diam);
        CHECK(W.isotropy < 1e-10);
        CHECK(translation_residual(W.net.points(), D.net.points()) < 1e-9 * diam);
        const Patch& P = p.patch;
        for (int k = 0; k < 2; ++k) {
            CHECK(W.planar[k].residual() < 1e-9 * diam);
            for (auto w : P.whites())
                CHECK(std::abs(W.planar[k].white[P.vid(w)].radius) ==
                      Approx(w_radius_white(p.center[P.vid(w)], p.radius[P.vid(w)])).epsilon(1e-12));
            std::vector<LVec3> a, b;
            for (auto v : P.blacks()) {
                a.push_back(W.cong[k].black[P.vid(v)]->center);
                b.push_back(D.cong[k].black[P.vid(v)]->center);
            }
            CHECK(translation_residual(a, b) < 1e-9 * diam);
        }
    }
}
