#include <doctest.h>

#include <numbers>

#include "fixtures.hpp"
#include "maxlor/associated.hpp"
#include "maxlor/christoffel.hpp"

using namespace maxlor;
using doctest::Approx;
constexpr double pi = std::numbers::pi;

namespace {
struct Setup {
    SIsothermicNet koebe;
    std::array<Congruence, 2> kc;
    DualResult dual;
    explicit Setup(const DiskCirclePattern& p = fx::mobius())
        : koebe(build_koebe_net(p)), kc(koebe_congruences(koebe)), dual(dualize(koebe, kc)) {}
};

// 180 degree relabelling (i,j) -> (M-i, N-j): swaps b1<->b3 and b2<->b4 in every star.
IncircularNet rotate_labels(const IncircularNet& n) {
    const Patch& P = n.patch;
    IncircularNet out(P);
    for (auto v : P.vertices()) {
        int src = P.vid(v), dst = P.vid({P.M - v.i, P.N - v.j});
        out.white[dst] = n.white[src];
        out.black[dst] = n.black[src];
    }
    return out;
}
}  // namespace

TEST_CASE("projection of a sphere is its contour") {
    Patch P(1, 1);
    Congruence c(P);
    c.white[P.vid({1, 0})] = {{1, 2, 5}, 0.8};
    c.black[P.vid({0, 0})] = OrientedSphere{{0.5, 0.1, 3}, 0};
    auto n = project(c);
    CHECK(n.white[P.vid({1, 0})].center == cplx(1, 2));
    CHECK(n.white[P.vid({1, 0})].radius == 0.8);
    CHECK(*n.black[P.vid({0, 0})] == cplx(0.5, 0.1));
}

TEST_CASE("projected congruences are incircular nets") {
    Setup s;
    for (const auto& c : {s.kc[0], s.kc[1], s.dual.cong[0], s.dual.cong[1]}) CHECK(project(c).residual() < 1e-9);
}

TEST_CASE("X-variables") {
    Setup reg(fx::regular(6, 0.12));
    auto pr = project(reg.dual.cong[0]);
    CHECK(x_planar(pr, {3, 2}) == Approx(1).epsilon(1e-9));
    CHECK(x_lorentz(reg.dual.cong[0], {3, 2}) == Approx(1).epsilon(1e-9));

    Setup s;
    const Patch& P = s.koebe.patch;
    std::mt19937_64 rng(9);
    for (const auto& c : {s.kc[0], s.kc[1], s.dual.cong[0]}) {
        auto n = project(c);
        auto rot = rotate_labels(n);
        auto field = x_field(c);
        REQUIRE(!field.empty());
        auto L = random_isometry(rng);
        Congruence moved = c;
        for (auto b : P.blacks())
            if (moved.black[P.vid(b)]) moved.black[P.vid(b)]->center = L(moved.black[P.vid(b)]->center);
        for (auto& [id, x] : field) {
            VertexIdx w = P.vertex(id);
            cplx xp = x_planar_complex(n, w);
            CHECK(std::abs(xp.imag()) < 1e-9 * std::abs(xp));
            CHECK(std::abs(xp.real() - x) < 1e-10 * std::abs(x));
            CHECK(std::abs(x_lorentz(moved, w) - x) < 1e-10 * std::abs(x));
            VertexIdx w2{P.M - w.i, P.N - w.j};
            CHECK(std::abs(x_planar_complex(rot, w2) - xp) < 1e-12 * std::abs(xp));
        }
    }
    // the Koebe congruences of a deformed pattern have X != 1
    bool away = false;
    for (auto& [id, x] : x_field(s.kc[0])) away = away || std::abs(x - 1) > 1e-3;
    CHECK(away);
}

TEST_CASE("X is invariant along the associated family") {
    Setup s;
    std::array<std::map<int, double>, 2> x0;
    for (int k = 0; k < 16; ++k) {
        auto cp = contact_congruences(associate(s.koebe, k * pi / 8));
        for (int q = 0; q < 2; ++q) {
            auto n = null_congruence(cp.cong[q], cp.radius[q]);
            auto x = x_field(n);
            auto xc = x_field(cp.cong[q]);
            if (k == 0) x0[q] = x;
            for (auto& [id, v] : x) {
                CHECK(std::abs(v - x0[q].at(id)) < 1e-8);
                CHECK(xc.at(id) == v);
                CHECK(x_field(project(n)).at(id) == Approx(v).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("other tangents") {
    Setup s;
    const Patch& P = s.koebe.patch;
    auto p1 = project(s.kc[0]), p2 = project(s.kc[1]);
    auto o = other_tangents(p1);
    auto back = other_tangents(o);
    for (auto f : P.faces()) {
        int id = P.fid(f);
        CHECK(line_distance(*back.lines[id], *p1.lines[id]) < 1e-10);
        CHECK(line_distance(*o.lines[id], *p2.lines[id]) < 1e-10);
    }
    for (auto w : P.whites()) {
        CHECK(o.white[P.vid(w)].center == p1.white[P.vid(w)].center);
        CHECK(o.white[P.vid(w)].radius == p1.white[P.vid(w)].radius);
    }
}

TEST_CASE("common tangents touch both circles") {
    Circle2 a{{0, 0}, 1}, b{{3, 0.5}, -0.6};
    for (const auto& l : common_tangents(a, b)) {
        CHECK(signed_distance(l, a.center) == Approx(a.radius).epsilon(1e-13));
        CHECK(signed_distance(l, b.center) == Approx(b.radius).epsilon(1e-13));
    }
}

TEST_CASE("Koebe concurrency") {
    Setup s;
    auto k = koebe_concurrency_test(project(s.kc[0]), project(s.kc[1]));
    CHECK(k.max_distance < 1e-9);
    CHECK(std::abs(k.point) < 1e-9);
    CHECK(k.lines > 0);
    auto m = koebe_concurrency_test(project(s.dual.cong[0]), project(s.dual.cong[1]));
    CHECK(m.max_distance > 1e-3);
}

TEST_CASE("Menelaus product") {
    Setup s;
    const Patch& P = s.koebe.patch;
    auto m1 = project(s.dual.cong[0]), m2 = project(s.dual.cong[1]);
    // second net translated off the maximal configuration
    auto shifted = m2;
    for (auto& b : shifted.black)
        if (b) *b += cplx(0.3, 0.1);
    double off = 0;
    for (auto w : P.whites()) {
        if (!P.interior(w)) continue;
        CHECK(std::abs(menelaus_maximal_test(m1, m2, w) - 1.0) < 1e-8);
        off = std::max(off, std::abs(menelaus_maximal_test(m1, shifted, w) - 1.0));
    }
    CHECK(off > 1e-4);

    // symmetric star around the white at the disk centre; its Menelaus lines are parallel in pairs
    Setup reg(gen_regular_pattern(6, 4, 0.12));
    auto r = menelaus_maximal_test(project(reg.dual.cong[0]), project(reg.dual.cong[1]), {3, 2});
    CHECK(std::abs(r - 1.0) < 1e-12);
}

TEST_CASE("other tangents of associated nets touch a circle of radius 2 sin(phi)") {
    Setup s;
    for (double phi : {pi / 6, 0.0, 1.3, 4.4}) {
        auto cp = contact_congruences(associate(s.koebe, phi));
        auto p1 = project(null_congruence(cp.cong[0], cp.radius[0]));
        auto p2 = project(null_congruence(cp.cong[1], cp.radius[1]));
        auto a = assoc_tangent_circle_test(p1, p2, -2 * std::sin(phi));
        auto b = assoc_tangent_circle_test(p2, p1, 2 * std::sin(phi));
        CHECK(a.samples > 0);
        CHECK(a.max_deviation < 1e-8);
        CHECK(b.max_deviation < 1e-8);
        CHECK(std::abs(a.min_distance + 2 * std::sin(phi)) < 1e-8);
    }

    // sensitivity: moving one black point of the partner net grows the deviation linearly
    auto cp = contact_congruences(associate(s.koebe, pi / 6));
    auto p1 = project(null_congruence(cp.cong[0], cp.radius[0]));
    auto p2 = project(null_congruence(cp.cong[1], cp.radius[1]));
    const Patch& P = p2.patch;
    int id = P.vid(P.interior_blacks()[0]);
    double prev = assoc_tangent_circle_test(p1, p2, -1).max_deviation;
    for (double eps : {1e-6, 1e-4, 1e-2}) {
        auto q = p2;
        *q.black[id] += cplx(eps, 0);
        double d = assoc_tangent_circle_test(p1, q, -1).max_deviation;
        CHECK(d > prev);
        CHECK(d < 2 * eps);
        prev = d;
    }
}
