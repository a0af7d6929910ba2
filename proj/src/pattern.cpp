#include "maxlor/pattern.hpp"

#include <cmath>

namespace maxlor {

DiskCirclePattern gen_regular_pattern(int M, int N, double s) {
    DiskCirclePattern p{Patch(M, N), {}, {}, {}};
    if (!(s > 0)) throw GeometryError("InvalidSpacing", "spacing must be positive");
    const double rho = s / std::sqrt(2.0);
    for (auto v : p.patch.vertices()) {
        cplx c(s * (v.i - M / 2.0), s * (v.j - N / 2.0));
        if (std::abs(c) + rho >= 1) throw GeometryError("DoesNotFitInDisk", "circle leaves the unit disk");
        p.center.push_back(c);
        p.radius.push_back(rho);
    }
    for (auto f : p.patch.faces()) p.face_point.emplace_back(s * (f.i + 0.5 - M / 2.0), s * (f.j + 0.5 - N / 2.0));
    return p;
}

namespace {
std::pair<cplx, double> circle3(cplx a, cplx b, cplx c) {
    double d = 2 * (a.real() * (b.imag() - c.imag()) + b.real() * (c.imag() - a.imag()) +
                    c.real() * (a.imag() - b.imag()));
    double na = std::norm(a), nb = std::norm(b), nc = std::norm(c);
    double ux = (na * (b.imag() - c.imag()) + nb * (c.imag() - a.imag()) + nc * (a.imag() - b.imag())) / d;
    double uy = (na * (c.real() - b.real()) + nb * (a.real() - c.real()) + nc * (b.real() - a.real())) / d;
    cplx m(ux, uy);
    return {m, std::abs(a - m)};
}
}  // namespace

DiskCirclePattern apply_disk_automorphism(const DiskCirclePattern& p, cplx a, double alpha) {
    if (!(std::abs(a) < 1)) throw GeometryError("OutsideDisk", "automorphism parameter must satisfy |a| < 1");
    const cplx rot = std::polar(1.0, alpha);
    auto f = [&](cplx z) { return rot * (z - a) / (1.0 - std::conj(a) * z); };
    DiskCirclePattern q{p.patch, {}, {}, {}};
    for (size_t k = 0; k < p.center.size(); ++k) {
        cplx c = p.center[k];
        double r = p.radius[k];
        auto [m, rr] = circle3(f(c + std::polar(r, 0.3)), f(c + std::polar(r, 2.4)), f(c + std::polar(r, 4.4)));
        q.center.push_back(m);
        q.radius.push_back(rr);
    }
    for (cplx z : p.face_point) q.face_point.push_back(f(z));
    return q;
}

PatternReport validate_pattern(const DiskCirclePattern& p) {
    PatternReport r;
    const Patch& P = p.patch;
    for (auto v : P.vertices()) {
        int a = P.vid(v);
        if (std::abs(p.center[a]) + p.radius[a] >= 1) r.contained = false;
        for (VertexIdx u : {VertexIdx{v.i + 1, v.j}, VertexIdx{v.i, v.j + 1}}) {
            if (!P.has(u)) continue;
            int b = P.vid(u);
            double e = std::norm(p.center[a] - p.center[b]) - p.radius[a] * p.radius[a] - p.radius[b] * p.radius[b];
            r.orthogonality = std::max(r.orthogonality, std::abs(e));
        }
    }
    for (auto f : P.faces())
        for (auto v : Patch::corners(f)) {
            int a = P.vid(v);
            double e = std::abs(p.face_point[P.fid(f)] - p.center[a]) - p.radius[a];
            r.incidence = std::max(r.incidence, std::abs(e));
        }
    return r;
}

void require_valid(const DiskCirclePattern& p, double tol) {
    auto r = validate_pattern(p);
    if (!r.contained) throw GeometryError("PatternInvalid", "a circle leaves the unit disk");
    if (r.orthogonality > tol || r.incidence > tol)
        throw GeometryError("PatternInvalid", "orthogonality/incidence residual exceeds tolerance");
}

}  // namespace maxlor
