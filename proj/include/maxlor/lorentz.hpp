#pragma once

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace maxlor {

// Error type shared by all modules; `code` names the failure (NotClosed, OutsideDisk, ...).
class GeometryError : public std::runtime_error {
public:
    GeometryError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct LVec3 {
    double x1 = 0, x2 = 0, x3 = 0;

    constexpr LVec3() = default;
    constexpr LVec3(double a, double b, double c) : x1(a), x2(b), x3(c) {}

    constexpr double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
    double& operator[](int i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

    constexpr LVec3 operator+(const LVec3& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
    constexpr LVec3 operator-(const LVec3& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
    constexpr LVec3 operator-() const { return {-x1, -x2, -x3}; }
    constexpr LVec3 operator*(double s) const { return {x1 * s, x2 * s, x3 * s}; }
    constexpr LVec3 operator/(double s) const { return {x1 / s, x2 / s, x3 / s}; }
    LVec3& operator+=(const LVec3& o) { x1 += o.x1; x2 += o.x2; x3 += o.x3; return *this; }
    LVec3& operator-=(const LVec3& o) { x1 -= o.x1; x2 -= o.x2; x3 -= o.x3; return *this; }
    bool operator==(const LVec3&) const = default;

    bool finite() const { return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3); }
};

constexpr LVec3 operator*(double s, const LVec3& v) { return v * s; }

// Lorentz form x1y1 + x2y2 - x3y3.
constexpr double ldot(const LVec3& a, const LVec3& b) { return a.x1 * b.x1 + a.x2 * b.x2 - a.x3 * b.x3; }
inline double lnorm(const LVec3& a) { return std::sqrt(std::abs(ldot(a, a))); }
constexpr double edot(const LVec3& a, const LVec3& b) { return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3; }
inline double enorm(const LVec3& a) { return std::sqrt(edot(a, a)); }
inline double maxabs(const LVec3& a) { return std::max({std::abs(a.x1), std::abs(a.x2), std::abs(a.x3)}); }
constexpr LVec3 ecross(const LVec3& a, const LVec3& b) {
    return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}
// Lorentz cross product: <lcross(a,b), a> = <lcross(a,b), b> = 0.
constexpr LVec3 lcross(const LVec3& a, const LVec3& b) {
    LVec3 c = ecross(a, b);
    return {c.x1, c.x2, -c.x3};
}
inline LVec3 lunit(const LVec3& a) { return a / lnorm(a); }

struct Mat3 {
    std::array<double, 9> a{1, 0, 0, 0, 1, 0, 0, 0, 1};

    double operator()(int r, int c) const { return a[3 * r + c]; }
    double& operator()(int r, int c) { return a[3 * r + c]; }
    LVec3 operator*(const LVec3& v) const {
        return {a[0] * v.x1 + a[1] * v.x2 + a[2] * v.x3, a[3] * v.x1 + a[4] * v.x2 + a[5] * v.x3,
                a[6] * v.x1 + a[7] * v.x2 + a[8] * v.x3};
    }
    Mat3 operator*(const Mat3& o) const;
    Mat3 transpose() const;
    static Mat3 identity() { return {}; }
};

// Affine map x -> Q x + t with Q preserving the Lorentz form.
struct LIsometry {
    Mat3 Q;
    LVec3 t;

    LVec3 operator()(const LVec3& x) const { return Q * x + t; }
    LVec3 linear(const LVec3& v) const { return Q * v; }
    LIsometry operator*(const LIsometry& o) const { return {Q * o.Q, Q * o.t + t}; }
    // max |(Q^T eta Q - eta)_ij|
    double form_defect() const;
};

struct OrientedSphere {
    LVec3 center;
    double radius = 0;  // signed; 0 means null-sphere (light cone with apex `center`)
};

struct IsotropicLine {
    LVec3 point;
    LVec3 dir;  // <dir,dir> = 0, dir.x3 = 1
    int orientation = 1;

    LVec3 at(double t) const { return point + dir * t; }
};

struct SpacelikeCircle {
    LVec3 center;
    LVec3 axis;  // timelike unit
    double radius = 0;
};

// Boost taking (0,0,1) to p, for p on the upper unit hyperboloid.
LIsometry boost_to(const LVec3& p);
LIsometry rotation_about_timelike_axis(const LVec3& p, double phi);
// Product of boosts, a rotation and a translation; used for invariance tests.
LIsometry random_isometry(std::mt19937_64& rng, double scale = 1.0);
// Orthonormal spacelike pair spanning the plane <x, axis> = 0.
std::array<LVec3, 2> spacelike_basis(const LVec3& timelike_axis);

// Oriented contact uses the difference convention <m1-m2,m1-m2> = (r1-r2)^2.
double touching_residual(const OrientedSphere& a, const OrientedSphere& b);
LVec3 contact_point(const OrientedSphere& a, const OrientedSphere& b);
std::array<IsotropicLine, 2> common_isotropic_lines(const OrientedSphere& s1, const OrientedSphere& s2,
                                                    double tol = 1e-9);
// Signed planar distance of the sphere centre from the projected line, minus the radius, combined
// with the incidence defect <d, K-m> of the line with the sphere.
double line_sphere_residual(const IsotropicLine& l, const OrientedSphere& s);
OrientedSphere sphere_through_circle_with_radius(const SpacelikeCircle& c, double rho, int side,
                                                 double tol = 1e-12);
// Circle through four (nominally concyclic) points; residual returned through `res`.
SpacelikeCircle circle_through(const std::array<LVec3, 4>& pts, double* res = nullptr);
// Closest-approach midpoint of two lines; `gap` receives the distance between them at that point.
LVec3 line_meet(const IsotropicLine& a, const IsotropicLine& b, double* gap = nullptr);

}  // namespace maxlor
