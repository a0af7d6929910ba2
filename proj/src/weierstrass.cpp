#include "maxlor/weierstrass.hpp"

namespace maxlor {

double w_radius_white(cplx c, double rho) {
    if (rho == 0) throw GeometryError("ZeroRadiusCircle", "circle radius is zero");
    return (1 - std::norm(c) + rho * rho) / (2 * rho);
}

double w_radius_black(cplx c, double rho) { return 2 * rho / (1 - std::norm(c) + rho * rho); }

LVec3 w_tangent(cplx z, cplx c1, cplx c2) {
    cplx d = c1 - c2;
    if (std::abs(d) == 0) throw GeometryError("CoincidentCenters", "adjacent circle centres coincide");
    cplx u = std::conj(d) / std::abs(d);
    double q = 1 - std::norm(z);
    const cplx I(0, 1);
    return LVec3{(u * (1.0 + z * z)).real(), (u * I * (1.0 - z * z)).real(), (u * 2.0 * z).real()} / q;
}

WFrame w_frame(const DiskCirclePattern& p, FaceIdx f) {
    const Patch& P = p.patch;
    cplx z = p.face_point[P.fid(f)];
    auto w = Patch::face_whites(f);
    auto b = Patch::face_blacks(f);
    return {sigma(z), w_tangent(z, p.center[P.vid(w[0])], p.center[P.vid(w[1])]),
            w_tangent(z, p.center[P.vid(b[0])], p.center[P.vid(b[1])])};
}

namespace {
VertexIdx other(const std::array<VertexIdx, 2>& pair, VertexIdx v) { return pair[0] == v ? pair[1] : pair[0]; }

// X(f) - X(w) of the dual white centres.
LVec3 white_half(const DiskCirclePattern& p, VertexIdx w, FaceIdx f) {
    const Patch& P = p.patch;
    VertexIdx w2 = other(Patch::face_whites(f), w);
    cplx z = p.face_point[P.fid(f)];
    double Rs = w_radius_white(p.center[P.vid(w)], p.radius[P.vid(w)]);
    return w_tangent(z, p.center[P.vid(w)], p.center[P.vid(w2)]) * (edge_sign(w, w2) * Rs);
}

// (1 -+ R)/R (T -+ N) for apex index 0 (upper signs) or 1, i.e. c*(b) - h*(f) without edge sign.
LVec3 black_apex_term(const DiskCirclePattern& p, VertexIdx b, FaceIdx f, int apex) {
    const Patch& P = p.patch;
    VertexIdx b2 = other(Patch::face_blacks(f), b);
    cplx z = p.face_point[P.fid(f)];
    double R = w_radius_black(p.center[P.vid(b)], p.radius[P.vid(b)]);
    LVec3 T = w_tangent(z, p.center[P.vid(b)], p.center[P.vid(b2)]);
    LVec3 N = sigma(z);
    double sg = apex == 0 ? 1.0 : -1.0;
    return (T - N * sg) * ((1 - sg * R) / R);
}

int apex_index(VertexIdx b, int congruence, int edge) {
    int base = (b.i + congruence) & 1;
    return edge > 0 ? base : 1 - base;
}
}  // namespace

LVec3 w_edge_white(const DiskCirclePattern& p, VertexIdx w, VertexIdx w2, FaceIdx f) {
    // h*(w) - h*(w2) = (X(f) - X(w2)) - (X(f) - X(w))
    return white_half(p, w2, f) - white_half(p, w, f);
}

std::pair<LVec3, LVec3> w_contact_increments(const DiskCirclePattern& p, VertexIdx b, VertexIdx w, FaceIdx f,
                                             int congruence) {
    int s = edge_sign(b, f);
    return {-white_half(p, w, f), black_apex_term(p, b, f, apex_index(b, congruence, s)) * -1.0 * s};
}

WeierstrassResult assemble_weierstrass(const DiskCirclePattern& p) {
    require_valid(p);
    const Patch& P = p.patch;
    WeierstrassResult r{SIsothermicNet{P, std::vector<OrientedSphere>(P.num_vertices()),
                                       std::vector<SpacelikeCircle>(P.num_vertices()), {}},
                        {Congruence(P), Congruence(P)},
                        {IncircularNet(P), IncircularNet(P)}};
    CombinedForm iso(P);
    std::array<CombinedForm, 2> cf{CombinedForm(P), CombinedForm(P)};
    for (auto f : P.faces()) {
        WFrame fr = w_frame(p, f);
        r.frame = std::max({r.frame, std::abs(ldot(fr.N, fr.N) + 1), std::abs(ldot(fr.T_white, fr.T_white) - 1),
                            std::abs(ldot(fr.T_black, fr.T_black) - 1), std::abs(ldot(fr.N, fr.T_white)),
                            std::abs(ldot(fr.N, fr.T_black))});
        auto c = Patch::corners(f);
        cplx z = p.face_point[P.fid(f)];
        for (int k = 0; k < 4; ++k) {
            VertexIdx v = c[k];
            int s = edge_sign(v, f);
            if (Patch::is_white(v)) {
                LVec3 d = white_half(p, v, f);
                iso.at(f, k) = cf[0].at(f, k) = cf[1].at(f, k) = d;
            } else {
                double R = w_radius_black(p.center[P.vid(v)], p.radius[P.vid(v)]);
                VertexIdx b2 = other(Patch::face_blacks(f), v);
                LVec3 T = w_tangent(z, p.center[P.vid(v)], p.center[P.vid(b2)]);
                iso.at(f, k) = (T + fr.N * R) * (s / R);
                for (int q = 0; q < 2; ++q) {
                    LVec3 d = black_apex_term(p, v, f, apex_index(v, q, s)) * s;
                    r.isotropy = std::max(r.isotropy, std::abs(ldot(d, d)) / std::max(1.0, edot(d, d)));
                    cf[q].at(f, k) = d;
                }
            }
        }
    }
    auto X = integrate_form(iso, {0, 1}, {});
    r.residual = X.residual;
    r.net.contact = X.face;
    for (auto v : P.vertices()) {
        int id = P.vid(v);
        if (Patch::is_white(v)) {
            double Rs = w_radius_white(p.center[id], p.radius[id]);
            r.net.white[id] = {X.vertex[id], (v.i % 2 == 0) ? Rs : -Rs};
        } else {
            double R = w_radius_black(p.center[id], p.radius[id]);
            OrientedSphere S = polar_sphere(p.center[id], p.radius[id]);
            r.net.black[id] = {X.vertex[id], S.center / lnorm(S.center), std::sqrt(1 - R * R) / R};
        }
    }
    for (int q = 0; q < 2; ++q) {
        auto Y = integrate_form(cf[q], {0, 1}, {});
        r.residual = std::max(r.residual, Y.residual);
        Congruence& c = r.cong[q];
        c.white = r.net.white;
        for (auto b : P.blacks()) c.black[P.vid(b)] = OrientedSphere{Y.vertex[P.vid(b)], 0.0};
        for (auto f : P.faces()) {
            auto w = Patch::face_whites(f);
            auto b = Patch::face_blacks(f);
            c.lines[P.fid(f)] = face_line(c.white[P.vid(w[0])], c.white[P.vid(w[1])], c.black[P.vid(b[0])]->center);
        }
        r.planar[q] = project(c);
    }
    return r;
}

}  // namespace maxlor
