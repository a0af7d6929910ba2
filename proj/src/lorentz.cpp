#include "maxlor/lorentz.hpp"

#include <algorithm>

namespace maxlor {

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    return r;
}

Mat3 Mat3::transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
}

double LIsometry::form_defect() const {
    double worst = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += Q(k, i) * Q(k, j) * (k == 2 ? -1.0 : 1.0);
            double eta = i == j ? (i == 2 ? -1.0 : 1.0) : 0.0;
            worst = std::max(worst, std::abs(s - eta));
        }
    return worst;
}

LIsometry boost_to(const LVec3& p) {
    if (!(ldot(p, p) < 0) || p.x3 <= 0)
        throw GeometryError("NonTimelikeAxis", "boost target must lie on the upper hyperboloid");
    LIsometry L;
    double g = p.x3;
    L.Q(0, 0) = 1 + p.x1 * p.x1 / (1 + g);
    L.Q(0, 1) = p.x1 * p.x2 / (1 + g);
    L.Q(1, 0) = L.Q(0, 1);
    L.Q(1, 1) = 1 + p.x2 * p.x2 / (1 + g);
    L.Q(0, 2) = L.Q(2, 0) = p.x1;
    L.Q(1, 2) = L.Q(2, 1) = p.x2;
    L.Q(2, 2) = g;
    return L;
}

namespace {
// eta Q^T eta
Mat3 lorentz_inverse(const Mat3& Q) {
    Mat3 r = Q.transpose();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if ((i == 2) != (j == 2)) r(i, j) = -r(i, j);
    return r;
}

Mat3 rz(double phi) {
    Mat3 R;
    R(0, 0) = std::cos(phi);
    R(0, 1) = -std::sin(phi);
    R(1, 0) = std::sin(phi);
    R(1, 1) = std::cos(phi);
    return R;
}
}  // namespace

LIsometry rotation_about_timelike_axis(const LVec3& p, double phi) {
    if (std::abs(ldot(p, p) + 1) > 1e-9 || p.x3 <= 0)
        throw GeometryError("NonTimelikeAxis", "rotation axis must be a unit timelike vector with x3 > 0");
    Mat3 L = boost_to(p).Q;
    return {L * rz(phi) * lorentz_inverse(L), {}};
}

LIsometry random_isometry(std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    auto hyp = [&] {
        double x = u(rng), y = u(rng);
        return LVec3{x, y, std::sqrt(1 + x * x + y * y)};
    };
    LIsometry a = boost_to(hyp());
    LIsometry b = boost_to(hyp());
    LIsometry r{rz(3 * u(rng)), {}};
    LIsometry t{Mat3{}, LVec3{u(rng), u(rng), u(rng)} * scale};
    return t * a * r * LIsometry{lorentz_inverse(b.Q), {}};
}

std::array<LVec3, 2> spacelike_basis(const LVec3& axis) {
    LVec3 a = axis.x3 < 0 ? -axis : axis;
    a = a / lnorm(a);
    LIsometry L = boost_to(a);
    return {L.linear({1, 0, 0}), L.linear({0, 1, 0})};
}

double touching_residual(const OrientedSphere& a, const OrientedSphere& b) {
    LVec3 d = b.center - a.center;
    double dr = a.radius - b.radius;
    return std::abs(ldot(d, d) - dr * dr);
}

LVec3 contact_point(const OrientedSphere& a, const OrientedSphere& b) {
    double dr = a.radius - b.radius;
    if (dr == 0) throw GeometryError("DegenerateContact", "equal oriented radii have no contact point");
    return a.center + (b.center - a.center) * (a.radius / dr);
}

namespace {
double signed_distance(const IsotropicLine& l, const LVec3& m) {
    double u1 = l.orientation * l.dir.x1, u2 = l.orientation * l.dir.x2;
    double v1 = m.x1 - l.point.x1, v2 = m.x2 - l.point.x2;
    return u1 * v2 - u2 * v1;
}
}  // namespace

double line_sphere_residual(const IsotropicLine& l, const OrientedSphere& s) {
    LVec3 v = l.point - s.center;
    double on = std::max(std::abs(ldot(l.dir, v)), std::abs(ldot(v, v) - s.radius * s.radius) /
                                                        std::max(1.0, std::abs(s.radius)));
    return std::max(on, std::abs(signed_distance(l, s.center) - s.radius));
}

std::array<IsotropicLine, 2> common_isotropic_lines(const OrientedSphere& s1, const OrientedSphere& s2,
                                                    double tol) {
    LVec3 D = s2.center - s1.center;
    double L = ldot(D, D);
    double scale = std::max({1.0, std::abs(L), s1.radius * s1.radius, s2.radius * s2.radius});
    if (!(L > 0) || touching_residual(s1, s2) > tol * scale)
        throw GeometryError("NotInContact", "spheres are not in oriented contact");
    LVec3 K = contact_point(s1, s2);
    LVec3 n = D / std::sqrt(L);
    // d = (x, y, 1) with <d, n> = 0 and x^2 + y^2 = 1
    double rr = n.x1 * n.x1 + n.x2 * n.x2;
    double x0 = n.x1 * n.x3 / rr, y0 = n.x2 * n.x3 / rr;
    double t = std::sqrt(std::max(0.0, (1 - n.x3 * n.x3 / rr) / rr));
    std::array<IsotropicLine, 2> out{IsotropicLine{K, {x0 - n.x2 * t, y0 + n.x1 * t, 1.0}, 1},
                                     IsotropicLine{K, {x0 + n.x2 * t, y0 - n.x1 * t, 1.0}, 1}};
    const OrientedSphere& ref = std::abs(s1.radius) >= std::abs(s2.radius) ? s1 : s2;
    for (auto& l : out) {
        double sd = signed_distance(l, ref.center);
        l.orientation = (sd * ref.radius >= 0) ? 1 : -1;
    }
    return out;
}

OrientedSphere sphere_through_circle_with_radius(const SpacelikeCircle& c, double rho, int side, double tol) {
    double q = c.radius * c.radius - rho * rho;
    if (q < -tol * std::max(1.0, c.radius * c.radius))
        throw GeometryError("RadiusTooLarge", "sphere radius exceeds circle radius");
    return {c.center + c.axis * (side * std::sqrt(std::max(0.0, q))), rho};
}

SpacelikeCircle circle_through(const std::array<LVec3, 4>& pts, double* res) {
    LVec3 a = pts[1] - pts[0], b = pts[2] - pts[0];
    double g11 = ldot(a, a), g12 = ldot(a, b), g22 = ldot(b, b);
    double det = g11 * g22 - g12 * g12;
    if (std::abs(det) < 1e-300) throw GeometryError("DegenerateFacePlane", "collinear circle points");
    double r1 = 0.5 * g11, r2 = 0.5 * g22;
    double x = (r1 * g22 - r2 * g12) / det, y = (g11 * r2 - g12 * r1) / det;
    SpacelikeCircle c;
    c.center = pts[0] + a * x + b * y;
    LVec3 n = lcross(a, b);
    if (!(ldot(n, n) < 0)) throw GeometryError("DegenerateFacePlane", "circle plane is not spacelike");
    n = n / lnorm(n);
    c.axis = n.x3 < 0 ? -n : n;
    LVec3 v = pts[0] - c.center;
    c.radius = std::sqrt(std::abs(ldot(v, v)));
    if (res) {
        double r = 0;
        for (auto& p : pts) {
            LVec3 w = p - c.center;
            r = std::max(r, std::abs(ldot(w, w) - c.radius * c.radius) / std::max(1.0, c.radius));
            r = std::max(r, std::abs(ldot(w, c.axis)));
        }
        *res = r;
    }
    return c;
}

LVec3 line_meet(const IsotropicLine& a, const IsotropicLine& b, double* gap) {
    LVec3 r = b.point - a.point;
    double aa = edot(a.dir, a.dir), ab = edot(a.dir, b.dir), bb = edot(b.dir, b.dir);
    double ra = edot(r, a.dir), rb = edot(r, b.dir);
    double det = aa * bb - ab * ab;
    if (std::abs(det) < 1e-14 * aa * bb) throw GeometryError("ParallelGenerators", "lines are parallel");
    double s = (ra * bb - rb * ab) / det, t = (ra * ab - rb * aa) / det;
    LVec3 p = a.at(s), q = b.at(t);
    if (gap) *gap = enorm(p - q);
    return (p + q) * 0.5;
}

}  // namespace maxlor
