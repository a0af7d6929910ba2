#include "maxlor/christoffel.hpp"

namespace maxlor {

namespace {
LVec3 position(const SIsothermicNet& net, VertexIdx v) {
    int id = net.patch.vid(v);
    return Patch::is_white(v) ? net.white[id].center : net.black[id].center;
}
}  // namespace

CombinedForm dual_form_isothermic(const SIsothermicNet& net) {
    CombinedForm form(net.patch);
    for (auto f : net.patch.faces()) {
        auto c = Patch::corners(f);
        LVec3 K = net.contact[net.patch.fid(f)];
        for (int k = 0; k < 4; ++k) {
            LVec3 d = position(net, c[k]) - K;
            double L = ldot(d, d);
            if (std::abs(L) < 1e-300) throw GeometryError("ZeroLengthEdge", "isotropic combined edge");
            form.at(f, k) = d * (edge_sign(c[k], f) / L);
        }
    }
    return form;
}

CombinedForm dual_form_congruence(const SIsothermicNet& net, const std::array<Congruence, 2>& cong, int k) {
    const Patch& P = net.patch;
    CombinedForm form(P);
    for (auto f : P.faces()) {
        auto c = Patch::corners(f);
        LVec3 K = net.contact[P.fid(f)];
        for (int s = 0; s < 4; ++s) {
            int id = P.vid(c[s]);
            int sg = edge_sign(c[s], f);
            if (Patch::is_white(c[s])) {
                double R = net.white[id].radius;
                if (R == 0) throw GeometryError("ZeroRadius", "white sphere radius is zero");
                form.at(f, s) = (net.white[id].center - K) * (sg / (R * R));
            } else {
                double r = net.black[id].radius;
                if (r == 0) throw GeometryError("ZeroRadius", "black circle radius is zero");
                const Congruence& use = sg > 0 ? cong[k] : cong[1 - k];
                form.at(f, s) = (use.black[id]->center - K) * (sg / (r * r));
            }
        }
    }
    return form;
}

namespace {
SIsothermicNet assemble(const SIsothermicNet& net, const CombinedIntegral& X) {
    const Patch& P = net.patch;
    SIsothermicNet out{P, std::vector<OrientedSphere>(P.num_vertices()), std::vector<SpacelikeCircle>(P.num_vertices()),
                       X.face};
    for (auto v : P.vertices()) {
        int id = P.vid(v);
        if (Patch::is_white(v))
            out.white[id] = {X.vertex[id], 1 / net.white[id].radius};
        else
            out.black[id] = {X.vertex[id], net.black[id].axis, 1 / net.black[id].radius};
    }
    return out;
}
}  // namespace

SIsothermicNet dualize_net(const SIsothermicNet& net, double tol) {
    auto X = integrate_form(dual_form_isothermic(net), {0, 1}, {}, tol);
    return assemble(net, X);
}

DualResult dualize(const SIsothermicNet& koebe, const std::array<Congruence, 2>& cong, double tol) {
    const Patch& P = koebe.patch;
    auto X = integrate_form(dual_form_isothermic(koebe), {0, 1}, {}, -1);
    double diam = diameter(X.vertex);
    if (tol >= 0 && X.residual > tol * diam)
        throw GeometryError("NotClosed", "cycle residual " + std::to_string(X.residual));
    DualResult r{assemble(koebe, X), {Congruence(P), Congruence(P)}, X.residual, {}, {}};
    for (int k = 0; k < 2; ++k) {
        auto Y = integrate_form(dual_form_congruence(koebe, cong, k), {0, 1}, {}, -1);
        if (tol >= 0 && Y.residual > tol * diam)
            throw GeometryError("NotClosed", "congruence cycle residual " + std::to_string(Y.residual));
        r.cong_residual[k] = Y.residual;
        Congruence& c = r.cong[k];
        c.white = r.net.white;
        for (auto w : P.whites())
            r.white_agreement[k] = std::max(r.white_agreement[k], maxabs(Y.vertex[P.vid(w)] - X.vertex[P.vid(w)]));
        for (auto b : P.blacks()) c.black[P.vid(b)] = OrientedSphere{Y.vertex[P.vid(b)], 0.0};
        for (auto f : P.faces()) {
            auto w = Patch::face_whites(f);
            auto b = Patch::face_blacks(f);
            c.lines[P.fid(f)] = face_line(c.white[P.vid(w[0])], c.white[P.vid(w[1])], c.black[P.vid(b[0])]->center);
        }
    }
    return r;
}

double translation_residual(const std::vector<LVec3>& X, const std::vector<LVec3>& Y) {
    LVec3 t;
    for (size_t k = 0; k < X.size(); ++k) t += X[k] - Y[k];
    t = t / static_cast<double>(X.size());
    double r = 0;
    for (size_t k = 0; k < X.size(); ++k) r = std::max(r, maxabs(X[k] - Y[k] - t));
    return r;
}

double similarity_residual(const std::vector<LVec3>& X, const std::vector<LVec3>& Y) {
    LVec3 mx, my;
    for (size_t k = 0; k < X.size(); ++k) mx += X[k], my += Y[k];
    mx = mx / static_cast<double>(X.size());
    my = my / static_cast<double>(Y.size());
    double num = 0, den = 0;
    for (size_t k = 0; k < X.size(); ++k) {
        num += edot(X[k] - mx, Y[k] - my);
        den += edot(Y[k] - my, Y[k] - my);
    }
    double s = den > 0 ? num / den : 0;
    double r = 0;
    for (size_t k = 0; k < X.size(); ++k) r = std::max(r, maxabs(X[k] - mx - (Y[k] - my) * s));
    return r;
}

MaximalReport check_maximal(const SIsothermicNet& net) {
    MaximalReport r;
    const Patch& P = net.patch;
    for (auto w : P.whites()) {
        if (!P.interior(w)) continue;
        auto b = Patch::star(w);
        LVec3 c0 = net.black[P.vid(b[0])].center;
        LVec3 a = net.black[P.vid(b[1])].center - c0, bb = net.black[P.vid(b[2])].center - c0,
              c = net.black[P.vid(b[3])].center - c0;
        r.coplanarity = std::max(r.coplanarity, std::abs(edot(a, ecross(bb, c))));
    }
    return r;
}

namespace {
// Signed area of a planar quad in a spacelike plane with unit timelike normal nu.
double quad_area(const std::array<LVec3, 4>& q, const LVec3& nu) {
    return -0.5 * ldot(lcross(q[2] - q[0], q[3] - q[1]), nu);
}
}  // namespace

std::vector<SteinerFace> steiner_coefficients(const SIsothermicNet& net, const std::vector<LVec3>& normals, double h) {
    const Patch& P = net.patch;
    std::vector<SteinerFace> out;
    for (auto b : P.interior_blacks()) {
        auto ws = Patch::star(b);
        auto quad = [&](double t) {
            std::array<LVec3, 4> q;
            for (int k = 0; k < 4; ++k) q[k] = net.white[P.vid(ws[k])].center + normals[P.vid(ws[k])] * t;
            return q;
        };
        auto q0 = quad(0);
        LVec3 n = lcross(q0[2] - q0[0], q0[3] - q0[1]);
        if (!(ldot(n, n) < 0)) throw GeometryError("NonPlanarOffsetQuad", "face plane is not spacelike");
        LVec3 nu = n / lnorm(n);
        // planarity of the offset quads
        for (double t : {-h, h}) {
            auto q = quad(t);
            double vol = std::abs(edot(q[1] - q[0], ecross(q[2] - q[0], q[3] - q[0])));
            double sc = std::pow(std::max({enorm(q[2] - q[0]), enorm(q[3] - q[1]), 1e-300}), 3);
            if (vol > 1e-8 * sc) throw GeometryError("NonPlanarOffsetQuad", "offset quad is not planar");
        }
        double Am = quad_area(quad(-h), nu), A0 = quad_area(q0, nu), Ap = quad_area(quad(h), nu);
        SteinerFace s{b, A0, 0, 0, 0};
        // A^t = A0 - 2 H t + K t^2
        s.H = -(Ap - Am) / (4 * h);
        s.K = (Ap + Am - 2 * A0) / (2 * h * h);
        double A2 = quad_area(quad(2 * h), nu);
        double pred = A0 - 2 * s.H * 2 * h + s.K * 4 * h * h;
        s.refit = std::abs(A2 - pred) / std::max(1.0, std::abs(A0));
        out.push_back(s);
    }
    return out;
}

}  // namespace maxlor
