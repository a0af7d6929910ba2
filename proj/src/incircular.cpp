#include "maxlor/incircular.hpp"

#include <cmath>

namespace maxlor {

double cross2(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }
double signed_distance(const Line2& l, cplx x) { return cross2(l.dir, x - l.point); }

double IncircularNet::residual() const {
    double r = 0;
    for (auto f : patch.faces()) {
        const auto& l = lines[patch.fid(f)];
        if (!l) continue;
        for (auto v : Patch::corners(f)) {
            int id = patch.vid(v);
            if (Patch::is_white(v))
                r = std::max(r, std::abs(signed_distance(*l, white[id].center) - white[id].radius));
            else if (black[id])
                r = std::max(r, std::abs(signed_distance(*l, *black[id])));
        }
    }
    return r;
}

IncircularNet project(const Congruence& c) {
    IncircularNet out(c.patch);
    const Patch& P = c.patch;
    for (auto v : P.vertices()) {
        int id = P.vid(v);
        if (Patch::is_white(v))
            out.white[id] = {cplx(c.white[id].center.x1, c.white[id].center.x2), c.white[id].radius};
        else if (c.black[id])
            out.black[id] = cplx(c.black[id]->center.x1, c.black[id]->center.x2);
    }
    for (auto f : P.faces()) {
        const auto& l = c.lines[P.fid(f)];
        if (!l) continue;
        if (std::abs(l->dir.x3) < 1e-12) throw GeometryError("VerticalLine", "isotropic line has no planar projection");
        cplx d(l->dir.x1 / l->dir.x3, l->dir.x2 / l->dir.x3);
        out.lines[P.fid(f)] = Line2{cplx(l->point.x1, l->point.x2), d * static_cast<double>(l->orientation) / std::abs(d)};
    }
    return out;
}

cplx x_planar_complex(const IncircularNet& net, VertexIdx w) {
    auto b = net.patch.white_star(w);
    cplx m = net.white[net.patch.vid(w)].center;
    std::array<cplx, 4> d;
    for (int k = 0; k < 4; ++k) {
        const auto& p = net.black[net.patch.vid(b[k])];
        if (!p) throw GeometryError("BoundaryVertex", "missing black point in white star");
        d[k] = *p - m;
    }
    return -(d[0] * d[2]) / (d[1] * d[3]);
}

double x_planar(const IncircularNet& net, VertexIdx w, double tol) {
    cplx x = x_planar_complex(net, w);
    if (std::abs(x.imag()) > tol * std::abs(x)) throw GeometryError("NonRealX", "X-variable has an imaginary part");
    return x.real();
}

double x_lorentz(const Congruence& c, VertexIdx w) {
    auto b = c.patch.white_star(w);
    std::array<LVec3, 4> m;
    for (int k = 0; k < 4; ++k) {
        const auto& s = c.black[c.patch.vid(b[k])];
        if (!s) throw GeometryError("BoundaryVertex", "missing black sphere in white star");
        m[k] = s->center;
    }
    LVec3 d1 = m[0] - m[2], d2 = m[1] - m[3];
    double den = ldot(d2, d2);
    if (std::abs(den) < 1e-300) throw GeometryError("DegenerateDiagonal", "isotropic black diagonal");
    return ldot(d1, d1) / den;
}

namespace {
template <class Present>
std::vector<VertexIdx> full_stars(const Patch& P, Present present) {
    std::vector<VertexIdx> out;
    for (auto w : P.whites()) {
        if (!P.interior(w)) continue;
        bool ok = true;
        for (auto b : Patch::star(w)) ok = ok && present(P.vid(b));
        if (ok) out.push_back(w);
    }
    return out;
}
}  // namespace

std::map<int, double> x_field(const Congruence& c) {
    std::map<int, double> out;
    for (auto w : full_stars(c.patch, [&](int id) { return c.black[id].has_value(); }))
        out[c.patch.vid(w)] = x_lorentz(c, w);
    return out;
}

std::map<int, double> x_field(const IncircularNet& net) {
    std::map<int, double> out;
    for (auto w : full_stars(net.patch, [&](int id) { return net.black[id].has_value(); }))
        out[net.patch.vid(w)] = x_planar(net, w);
    return out;
}

std::array<Line2, 2> common_tangents(const Circle2& a, const Circle2& b) {
    cplx D = a.center - b.center;
    double L2 = std::norm(D), dr = a.radius - b.radius;
    double q = L2 - dr * dr;
    if (L2 == 0 || q < -1e-10 * L2) throw GeometryError("NoSecondTangent", "circles admit no common oriented tangent");
    double s = std::sqrt(std::max(0.0, q));  // 0: internally tangent, one double tangent
    std::array<Line2, 2> out;
    for (int k = 0; k < 2; ++k) {
        double sg = k == 0 ? 1.0 : -1.0;
        cplx n = (dr * D + sg * s * cplx(0, 1) * D) / L2;  // <n, c> - h = r on both circles
        double h = (std::conj(n) * a.center).real() - a.radius;
        out[k] = Line2{h * n, cplx(0, -1) * n};
    }
    return out;
}

double line_distance(const Line2& a, const Line2& b) {
    // compare (normal, offset) pairs of the oriented lines
    cplx na = cplx(0, 1) * a.dir, nb = cplx(0, 1) * b.dir;
    double ha = (std::conj(na) * a.point).real(), hb = (std::conj(nb) * b.point).real();
    return std::max(std::abs(na - nb), std::abs(ha - hb) / std::max(1.0, std::abs(ha)));
}

namespace {
bool intersect(const Line2& a, const Line2& b, cplx& out) {
    double den = cross2(a.dir, b.dir);
    if (std::abs(den) < 1e-12) return false;
    double t = cross2(b.point - a.point, b.dir) / den;
    out = a.point + t * a.dir;
    return true;
}
}  // namespace

IncircularNet other_tangents(const IncircularNet& net) {
    const Patch& P = net.patch;
    IncircularNet out(P);
    out.white = net.white;
    for (auto f : P.faces()) {
        const auto& l = net.lines[P.fid(f)];
        if (!l) continue;
        auto w = Patch::face_whites(f);
        const Circle2 &a = net.white[P.vid(w[0])], &c = net.white[P.vid(w[1])];
        double scale = std::max({1.0, std::abs(a.radius), std::abs(c.radius)});
        if (std::abs(signed_distance(*l, a.center) - a.radius) > 1e-6 * scale ||
            std::abs(signed_distance(*l, c.center) - c.radius) > 1e-6 * scale)
            throw GeometryError("ValidationFailed", "line is not a common tangent of its incircles");
        cplx D = c.center - a.center;
        if (std::abs(D) == 0) throw GeometryError("NoSecondTangent", "concentric incircles");
        // mirror in the line of centres, reversed to keep the orientation
        cplx u2 = D * D / std::norm(D);
        out.lines[P.fid(f)] = Line2{a.center + u2 * std::conj(l->point - a.center), -u2 * std::conj(l->dir)};
    }
    for (auto b : P.blacks()) {
        std::vector<Line2> around;
        for (auto f : Patch::vertex_faces(b))
            if (P.has(f) && out.lines[P.fid(f)]) around.push_back(*out.lines[P.fid(f)]);
        if (around.size() < 2) continue;
        cplx acc = 0;
        int n = 0;
        for (size_t k = 0; k + 1 < around.size(); ++k) {
            cplx x;
            if (intersect(around[k], around[k + 1], x)) acc += x, ++n;
        }
        if (n > 0) out.black[P.vid(b)] = acc / static_cast<double>(n);
    }
    return out;
}

ConcurrencyReport koebe_concurrency_test(const IncircularNet& p1, const IncircularNet& p2) {
    const Patch& P = p1.patch;
    double a11 = 0, a12 = 0, a22 = 0, r1 = 0, r2 = 0;
    std::vector<std::pair<cplx, cplx>> ls;
    for (auto b : P.blacks()) {
        const auto &x = p1.black[P.vid(b)], &y = p2.black[P.vid(b)];
        if (!x || !y || std::abs(*y - *x) < 1e-14) continue;
        cplx u = (*y - *x) / std::abs(*y - *x);
        ls.push_back({*x, u});
        // (I - u u^T)
        double m11 = 1 - u.real() * u.real(), m12 = -u.real() * u.imag(), m22 = 1 - u.imag() * u.imag();
        a11 += m11, a12 += m12, a22 += m22;
        r1 += m11 * x->real() + m12 * x->imag();
        r2 += m12 * x->real() + m22 * x->imag();
    }
    ConcurrencyReport rep;
    rep.lines = static_cast<int>(ls.size());
    if (ls.empty()) return rep;
    double det = a11 * a22 - a12 * a12;
    if (ls.size() == 1) {
        rep.point = ls[0].first;
        return rep;
    }
    if (std::abs(det) < 1e-12 * (a11 + a22) * (a11 + a22))
        throw GeometryError("ParallelLines", "all lines are parallel");
    rep.point = cplx((r1 * a22 - r2 * a12) / det, (a11 * r2 - a12 * r1) / det);
    for (auto& [x, u] : ls) rep.max_distance = std::max(rep.max_distance, std::abs(cross2(u, rep.point - x)));
    return rep;
}

cplx menelaus_maximal_test(const IncircularNet& p1, const IncircularNet& p2, VertexIdx w) {
    auto bs = p1.patch.white_star(w);
    std::array<cplx, 4> M, D;
    for (int k = 0; k < 4; ++k) {
        const auto &x = p1.black[p1.patch.vid(bs[k])], &y = p2.black[p1.patch.vid(bs[k])];
        if (!x || !y) throw GeometryError("BoundaryVertex", "missing black point");
        M[k] = 0.5 * (*x + *y);
        D[k] = *y - *x;
        if (std::abs(D[k]) < 1e-12 * std::max(1.0, std::abs(M[k])))
            throw GeometryError("DegenerateStar", "black points of the two nets coincide");
    }
    cplx prod = 1;
    for (int k = 0; k < 4; ++k) {
        int n = (k + 1) % 4;
        cplx Pk;
        // parallel lines meet at infinity, where the ratio is -1
        if (intersect(Line2{M[k], D[k] / std::abs(D[k])}, Line2{M[n], D[n] / std::abs(D[n])}, Pk))
            prod *= (M[k] - Pk) / (Pk - M[n]);
        else
            prod *= -1.0;
    }
    return prod;
}

TangentCircleReport assoc_tangent_circle_test(const IncircularNet& p1, const IncircularNet& p2, double radius) {
    const Patch& P = p1.patch;
    TangentCircleReport r;
    r.min_distance = 1e300;
    r.max_distance = -1e300;
    auto o = other_tangents(p1);
    for (auto b : P.blacks()) {
        const auto& c = p2.black[P.vid(b)];
        if (!c || !p1.black[P.vid(b)]) continue;
        for (auto f : Patch::vertex_faces(b)) {
            if (!P.has(f) || !o.lines[P.fid(f)]) continue;
            double d = signed_distance(*o.lines[P.fid(f)], *c);
            r.max_deviation = std::max(r.max_deviation, std::abs(d - radius));
            r.min_distance = std::min(r.min_distance, d);
            r.max_distance = std::max(r.max_distance, d);
            ++r.samples;
        }
    }
    return r;
}

}  // namespace maxlor
