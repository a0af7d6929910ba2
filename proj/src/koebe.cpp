#include "maxlor/koebe.hpp"

#include <deque>

namespace maxlor {

std::vector<LVec3> SIsothermicNet::points() const {
    std::vector<LVec3> out;
    for (auto v : patch.vertices())
        out.push_back(Patch::is_white(v) ? white[patch.vid(v)].center : black[patch.vid(v)].center);
    out.insert(out.end(), contact.begin(), contact.end());
    return out;
}

double Congruence::contact_residual() const {
    double r = 0;
    for (auto f : patch.faces()) {
        const auto& l = lines[patch.fid(f)];
        if (!l) continue;
        for (auto v : Patch::corners(f)) {
            int id = patch.vid(v);
            if (Patch::is_white(v))
                r = std::max(r, line_sphere_residual(*l, white[id]));
            else if (black[id])
                r = std::max(r, line_sphere_residual(*l, *black[id]));
        }
    }
    return r;
}

LVec3 sigma(cplx z) {
    double r2 = std::norm(z);
    if (!(r2 < 1)) throw GeometryError("OutsideDisk", "sigma needs |z| < 1");
    return LVec3{2 * z.real(), 2 * z.imag(), 1 + r2} / (1 - r2);
}

OrientedSphere polar_sphere(cplx c, double rho) {
    if (!(std::abs(c) + rho < 1)) throw GeometryError("OutsideDisk", "circle must lie inside the unit disk");
    double D = 1 - std::norm(c) + rho * rho;
    return {LVec3{2 * c.real(), 2 * c.imag(), 1 + std::norm(c) - rho * rho} / D, 2 * rho / D};
}

SIsothermicNet build_koebe_net(const DiskCirclePattern& p) {
    require_valid(p);
    const Patch& P = p.patch;
    SIsothermicNet net{P, std::vector<OrientedSphere>(P.num_vertices()),
                       std::vector<SpacelikeCircle>(P.num_vertices()), {}};
    for (auto v : P.vertices()) {
        int id = P.vid(v);
        OrientedSphere S = polar_sphere(p.center[id], p.radius[id]);
        if (Patch::is_white(v)) {
            net.white[id] = S;
        } else {
            double q = 1 - S.radius * S.radius;
            net.black[id] = {S.center / q, S.center / std::sqrt(q), S.radius / std::sqrt(q)};
        }
    }
    for (cplx z : p.face_point) net.contact.push_back(sigma(z));

    // Orientation: seed (0,1) positive, propagate across white diagonals.
    std::vector<int> sign(P.num_vertices(), 0);
    VertexIdx seed{0, 1};
    sign[P.vid(seed)] = 1;
    std::deque<VertexIdx> q{seed};
    while (!q.empty()) {
        VertexIdx w = q.front();
        q.pop_front();
        for (auto [di, dj] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
            VertexIdx u{w.i + di, w.j + dj};
            if (!P.has(u)) continue;
            OrientedSphere a = net.white[P.vid(w)], b = net.white[P.vid(u)];
            a.radius *= sign[P.vid(w)];
            OrientedSphere bm = b;
            bm.radius = -b.radius;
            int s = touching_residual(a, b) < touching_residual(a, bm) ? 1 : -1;
            if (sign[P.vid(u)] == 0) {
                sign[P.vid(u)] = s;
                q.push_back(u);
            } else if (sign[P.vid(u)] != s) {
                throw GeometryError("OrientationInconsistent", "sphere orientations do not propagate consistently");
            }
        }
    }
    for (auto w : P.whites()) net.white[P.vid(w)].radius *= sign[P.vid(w)];
    return net;
}

std::array<LVec3, 2> koebe_apices(const SpacelikeCircle& c) {
    double R = c.radius / std::sqrt(1 + c.radius * c.radius);
    LVec3 m = c.axis / std::sqrt(1 + c.radius * c.radius);
    return {m / (1 + R), m / (1 - R)};
}

std::vector<int> koebe_apex_choice(const SIsothermicNet& net) {
    const Patch& P = net.patch;
    std::vector<int> S(P.num_vertices(), -1);
    VertexIdx seed{0, 0};
    S[P.vid(seed)] = 0;
    std::deque<VertexIdx> q{seed};
    while (!q.empty()) {
        VertexIdx b = q.front();
        q.pop_front();
        for (auto [di, dj] : {std::pair{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}) {
            VertexIdx u{b.i + di, b.j + dj};
            if (!P.has(u)) continue;
            FaceIdx f{std::min(b.i, u.i), std::min(b.j, u.j)};
            LVec3 K = net.contact[P.fid(f)];
            LVec3 da = koebe_apices(net.black[P.vid(b)])[S[P.vid(b)]] - K;
            auto cand = koebe_apices(net.black[P.vid(u)]);
            double best = 1e300;
            int pick = 0;
            for (int s = 0; s < 2; ++s) {
                LVec3 e = cand[s] - K;
                double c = enorm(ecross(da, e)) / (enorm(da) * enorm(e));
                if (c < best) best = c, pick = s;
            }
            if (S[P.vid(u)] < 0) {
                S[P.vid(u)] = pick;
                q.push_back(u);
            } else if (S[P.vid(u)] != pick) {
                throw GeometryError("DegenerateContact", "apex pairing is inconsistent");
            }
        }
    }
    return S;
}

IsotropicLine face_line(const OrientedSphere& w1, const OrientedSphere& w2, const LVec3& apex, double* miss) {
    auto ls = common_isotropic_lines(w1, w2);
    double m[2];
    for (int k = 0; k < 2; ++k) {
        LVec3 v = apex - ls[k].point;
        // distance of the apex from the line (Euclidean)
        m[k] = enorm(ecross(v, ls[k].dir)) / enorm(ls[k].dir);
    }
    int k = m[0] <= m[1] ? 0 : 1;
    if (miss) *miss = m[k];
    return ls[k];
}

std::array<Congruence, 2> koebe_congruences(const SIsothermicNet& net) {
    const Patch& P = net.patch;
    auto S = koebe_apex_choice(net);
    std::array<Congruence, 2> out{Congruence(P), Congruence(P)};
    for (int k = 0; k < 2; ++k) {
        Congruence& c = out[k];
        c.white = net.white;
        for (auto b : P.blacks()) {
            int id = P.vid(b);
            c.black[id] = OrientedSphere{koebe_apices(net.black[id])[S[id] ^ k], 0.0};
        }
        for (auto f : P.faces()) {
            auto w = Patch::face_whites(f);
            auto b = Patch::face_blacks(f);
            c.lines[P.fid(f)] = face_line(net.white[P.vid(w[0])], net.white[P.vid(w[1])], c.black[P.vid(b[0])]->center);
        }
    }
    return out;
}

LiftReport check_lift(const DiskCirclePattern& p, const SIsothermicNet& net, const std::array<Congruence, 2>& cong) {
    LiftReport r;
    const Patch& P = net.patch;
    r.diameter = diameter(net.points());
    for (auto v : P.vertices()) {
        int id = P.vid(v);
        OrientedSphere S = polar_sphere(p.center[id], p.radius[id]);
        r.polar = std::max(r.polar, std::abs(ldot(S.center, S.center) - S.radius * S.radius + 1));
        if (Patch::is_black(v)) {
            const auto& c = net.black[id];
            auto e = spacelike_basis(c.axis);
            for (int k = 0; k < 8; ++k) {
                double t = k * 0.7853981633974483;
                LVec3 x = c.center + (e[0] * std::cos(t) + e[1] * std::sin(t)) * c.radius;
                r.hyperboloid = std::max(r.hyperboloid, std::abs(ldot(x, x) + 1));
            }
        }
    }
    for (auto f : P.faces()) {
        LVec3 K = net.contact[P.fid(f)];
        r.hyperboloid = std::max(r.hyperboloid, std::abs(ldot(K, K) + 1));
        auto w = Patch::face_whites(f);
        r.touching = std::max(r.touching, touching_residual(net.white[P.vid(w[0])], net.white[P.vid(w[1])]));
        // The black circle meets the white sphere orthogonally at K: its tangent at K is the sphere normal.
        for (auto b : Patch::face_blacks(f)) {
            const auto& c = net.black[P.vid(b)];
            LVec3 tangent = lcross(c.axis, K - c.center);
            for (auto ww : w) {
                LVec3 n = K - net.white[P.vid(ww)].center;
                r.orthogonal = std::max(r.orthogonal, enorm(ecross(tangent, n)) / (enorm(tangent) * enorm(n)));
            }
        }
    }
    for (const auto& c : cong) r.congruence = std::max(r.congruence, c.contact_residual());
    return r;
}

}  // namespace maxlor
