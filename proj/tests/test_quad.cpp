#include <doctest.h>

#include <random>

#include "maxlor/quad.hpp"

using namespace maxlor;

TEST_CASE("parity and face incidence") {
    Patch P(4, 3);
    CHECK(Patch::is_black({0, 0}));
    CHECK(Patch::is_white({1, 0}));
    for (auto f : P.faces()) {
        int whites = 0;
        for (auto v : Patch::corners(f)) whites += Patch::is_white(v);
        CHECK(whites == 2);
        for (auto w : Patch::face_whites(f)) CHECK(Patch::is_white(w));
        for (auto b : Patch::face_blacks(f)) CHECK(Patch::is_black(b));
    }
    CHECK(P.whites().size() + P.blacks().size() == P.vertices().size());
}

TEST_CASE("edge signs") {
    CHECK(edge_sign(VertexIdx{0, 0}, FaceIdx{0, 0}) == 1);
    CHECK(edge_sign(VertexIdx{1, 0}, FaceIdx{0, 0}) == -1);
    CHECK(edge_sign(VertexIdx{1, 1}, FaceIdx{0, 0}) == 1);
    CHECK(edge_sign(VertexIdx{1, 0}, VertexIdx{2, 1}) == 1);
    CHECK(edge_sign(VertexIdx{2, 1}, VertexIdx{1, 0}) == 1);
    CHECK(edge_sign(VertexIdx{1, 2}, VertexIdx{2, 1}) == -1);
    CHECK_THROWS_WITH_AS(edge_sign(VertexIdx{3, 0}, FaceIdx{0, 0}), doctest::Contains("InvalidEdge"), GeometryError);
    CHECK_THROWS_WITH_AS(edge_sign(VertexIdx{1, 0}, VertexIdx{3, 1}), doctest::Contains("InvalidEdge"), GeometryError);
}

TEST_CASE("white star") {
    Patch P(3, 3);
    CHECK_THROWS_WITH_AS(P.white_star({1, 0}), doctest::Contains("BoundaryVertex"), GeometryError);
    auto s = P.white_star({2, 1});
    CHECK(s[0] == VertexIdx{3, 1});
    CHECK(s[1] == VertexIdx{2, 2});
    CHECK(s[2] == VertexIdx{1, 1});
    CHECK(s[3] == VertexIdx{2, 0});
    Patch Q(6, 6);
    for (auto w : Q.whites())
        if (Q.interior(w))
            for (auto b : Q.white_star(w)) CHECK(Patch::is_black(b));
}

namespace {
CombinedForm differential(const Patch& P, const std::vector<LVec3>& gv, const std::vector<LVec3>& gf) {
    CombinedForm F(P);
    for (auto f : P.faces()) {
        auto c = Patch::corners(f);
        for (int k = 0; k < 4; ++k) F.at(f, k) = gf[P.fid(f)] - gv[P.vid(c[k])];
    }
    return F;
}
}  // namespace

TEST_CASE("integrating combined forms") {
    Patch P(5, 4);
    CombinedForm zero(P);
    auto Z = integrate_form(zero, {0, 1}, {1, 2, 3});
    CHECK(Z.residual == 0);
    for (auto v : P.vertices()) CHECK(Z.vertex[P.vid(v)] == LVec3{1, 2, 3});
    for (auto f : P.faces()) CHECK(Z.face[P.fid(f)] == LVec3{1, 2, 3});

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-5, 5);
    std::vector<LVec3> gv(P.num_vertices()), gf(P.num_faces());
    for (auto& x : gv) x = {U(rng), U(rng), U(rng)};
    for (auto& x : gf) x = {U(rng), U(rng), U(rng)};
    auto F = differential(P, gv, gf);
    auto G = integrate_form(F, {0, 1}, {0, 0, 0}, 1e-12);
    CHECK(G.residual < 1e-13);
    LVec3 shift = gv[P.vid({0, 1})];
    for (auto v : P.vertices()) CHECK(maxabs(G.vertex[P.vid(v)] + shift - gv[P.vid(v)]) < 1e-12);
    for (auto f : P.faces()) CHECK(maxabs(G.face[P.fid(f)] + shift - gf[P.fid(f)]) < 1e-12);

    const double eps = 1e-3;
    F.at({2, 2}, 1).x2 += eps;
    auto H = integrate_form(F, {0, 1}, {0, 0, 0});
    CHECK(H.residual == doctest::Approx(eps).epsilon(1e-6));
    CHECK_THROWS_WITH_AS(integrate_form(F, {0, 1}, {0, 0, 0}, 1e-6), doctest::Contains("NotClosed"), GeometryError);
}

TEST_CASE("integrating white-sublattice forms") {
    Patch P(4, 4);
    std::vector<LVec3> g(P.num_vertices());
    for (auto w : P.whites()) g[P.vid(w)] = {w.i * 0.5 + w.j * w.j, std::sin(w.i + 0.3 * w.j), 1.0 * w.i * w.j};
    WhiteForm F(P);
    for (auto f : P.faces()) {
        auto w = Patch::face_whites(f);
        F.value[P.fid(f)] = g[P.vid(w[1])] - g[P.vid(w[0])];
    }
    auto X = integrate_white_form(F, {0, 1}, g[P.vid({0, 1})], 1e-12);
    CHECK(X.residual < 1e-13);
    for (auto w : P.whites()) CHECK(maxabs(X.vertex[P.vid(w)] - g[P.vid(w)]) < 1e-12);

    F.value[P.fid({1, 1})].x1 += 1e-3;
    CHECK_THROWS_WITH_AS(integrate_white_form(F, {0, 1}, {}, 1e-6), doctest::Contains("NotClosed"), GeometryError);
}

TEST_CASE("deep whites and diameter") {
    Patch P(6, 6);
    for (auto w : P.deep_whites())
        for (auto b : Patch::star(w)) CHECK(P.interior(b));
    CHECK(diameter({{0, 0, 0}, {3, 4, 0}, {1, 1, 1}}) == doctest::Approx(5));
}
