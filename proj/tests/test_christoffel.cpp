#include <doctest.h>

#include "fixtures.hpp"
#include "maxlor/christoffel.hpp"

using namespace maxlor;
using doctest::Approx;

namespace {
struct Setup {
    SIsothermicNet koebe;
    std::array<Congruence, 2> cong;
    DualResult dual;
    double diam;
    explicit Setup(const DiskCirclePattern& p)
        : koebe(build_koebe_net(p)), cong(koebe_congruences(koebe)), dual(dualize(koebe, cong, 1e-11)),
          diam(diameter(dual.net.points())) {}
};
}  // namespace

TEST_CASE("dual form inverts edge lengths") {
    Setup s(fx::mobius());
    const Patch& P = s.koebe.patch;
    auto F = dual_form_isothermic(s.koebe);
    for (auto f : P.faces()) {
        auto c = Patch::corners(f);
        for (int k = 0; k < 4; ++k) {
            if (!Patch::is_white(c[k])) continue;
            double L = lnorm(s.koebe.contact[P.fid(f)] - s.koebe.white[P.vid(c[k])].center);
            CHECK(lnorm(F.at(f, k)) == Approx(1 / L).epsilon(1e-12));
        }
    }
}

TEST_CASE("Christoffel dual of a Koebe net") {
    for (const auto& p : {fx::regular(4, 0.2), fx::mobius(), fx::mobius(8, 0.1)}) {
        Setup s(p);
        const Patch& P = s.koebe.patch;
        CHECK(s.dual.residual < 1e-11 * s.diam);
        CHECK(s.dual.cong_residual[0] < 1e-11 * s.diam);
        CHECK(s.dual.cong_residual[1] < 1e-11 * s.diam);
        CHECK(s.dual.white_agreement[0] < 1e-10 * s.diam);
        CHECK(s.dual.white_agreement[1] < 1e-10 * s.diam);
        for (auto w : P.whites())
            CHECK(s.dual.net.white[P.vid(w)].radius == Approx(1 / s.koebe.white[P.vid(w)].radius).epsilon(1e-14));
        // dual contact points sit on the dual spheres
        for (auto f : P.faces())
            for (auto w : Patch::face_whites(f)) {
                const auto& S = s.dual.net.white[P.vid(w)];
                CHECK(lnorm(s.dual.net.contact[P.fid(f)] - S.center) == Approx(std::abs(S.radius)).epsilon(1e-10));
            }
        CHECK(s.dual.cong[0].contact_residual() < 1e-9 * s.diam);
        auto dd = dualize_net(s.dual.net);
        CHECK(similarity_residual(dd.points(), s.koebe.points()) < 1e-10 * s.diam);
    }
}

TEST_CASE("R = 0.8 dualizes to 1.25") { CHECK(1 / 0.8 == Approx(1.25)); }

TEST_CASE("black half-edges of the congruence dual are isotropic") {
    Setup s(fx::mobius());
    const Patch& P = s.koebe.patch;
    for (int k = 0; k < 2; ++k) {
        auto F = dual_form_congruence(s.koebe, s.cong, k);
        for (auto f : P.faces()) {
            auto c = Patch::corners(f);
            for (int q = 0; q < 4; ++q)
                if (Patch::is_black(c[q])) {
                    LVec3 v = F.at(f, q);
                    CHECK(std::abs(ldot(v, v)) < 1e-10 * edot(v, v));
                }
        }
    }
}

TEST_CASE("maximality of the dual") {
    Setup s(fx::mobius());
    double d3 = s.diam * s.diam * s.diam;
    CHECK(check_maximal(s.dual.net).coplanarity < 1e-9 * d3);
    // Koebe net of a deformed pattern is not maximal
    double dk = diameter(s.koebe.points());
    CHECK(check_maximal(s.koebe).coplanarity > 1e2 * 1e-9 * dk * dk * dk);

    // planar net: all black centres in one plane
    SIsothermicNet flat = s.koebe;
    for (auto b : flat.patch.blacks()) flat.black[flat.patch.vid(b)].center = {b.i * 1.0, b.j * 0.7 + b.i * b.i, 0};
    CHECK(check_maximal(flat).coplanarity == 0);
}

TEST_CASE("Steiner coefficients") {
    Setup s(fx::mobius());
    const Patch& P = s.koebe.patch;
    std::vector<LVec3> normals(P.num_vertices());
    for (auto w : P.whites()) normals[P.vid(w)] = s.koebe.white[P.vid(w)].center;
    auto faces = steiner_coefficients(s.dual.net, normals, 1e-2 * s.diam);
    REQUIRE(faces.size() == P.interior_blacks().size());
    for (const auto& f : faces) {
        CHECK(std::abs(f.H) < 1e-9 * s.diam);
        CHECK(f.refit < 1e-12);
        auto w = Patch::star(f.black);
        LVec3 d1 = s.dual.net.white[P.vid(w[2])].center - s.dual.net.white[P.vid(w[0])].center;
        LVec3 d2 = s.dual.net.white[P.vid(w[3])].center - s.dual.net.white[P.vid(w[1])].center;
        CHECK(std::abs(f.A0) == Approx(0.5 * lnorm(lcross(d1, d2))).epsilon(1e-9));
    }
}
