#include "maxlor/associated.hpp"

#include <deque>

namespace maxlor {

WhiteForm associated_form(const SIsothermicNet& koebe, double phi) {
    const Patch& P = koebe.patch;
    WhiteForm form(P);
    for (auto f : P.faces()) {
        auto w = Patch::face_whites(f);
        const auto &a = koebe.white[P.vid(w[0])], &b = koebe.white[P.vid(w[1])];
        LVec3 d = b.center - a.center;
        LIsometry J = rotation_about_timelike_axis(koebe.contact[P.fid(f)], phi);
        double s = -edge_sign(w[0], w[1]) * (1 / std::abs(a.radius) + 1 / std::abs(b.radius));
        form.value[P.fid(f)] = J.linear(d) * (s / lnorm(d));
    }
    return form;
}

AssociatedSurface integrate_associated(const WhiteForm& form, const SIsothermicNet& koebe, double phi, double tol) {
    const Patch& P = koebe.patch;
    auto X = integrate_white_form(form, {0, 1}, {});
    AssociatedSurface s{P, phi, X.vertex, std::vector<double>(P.num_vertices()), {},
                        std::vector<std::optional<SpacelikeCircle>>(P.num_vertices()), X.residual, 0};
    double diam = 0;
    {
        std::vector<LVec3> pts;
        for (auto w : P.whites()) pts.push_back(X.vertex[P.vid(w)]);
        diam = diameter(pts);
    }
    if (tol >= 0 && X.residual > tol * diam)
        throw GeometryError("NotClosed", "associated form residual " + std::to_string(X.residual));
    for (auto w : P.whites()) s.radius[P.vid(w)] = 1 / koebe.white[P.vid(w)].radius;
    for (auto f : P.faces()) {
        auto w = Patch::face_whites(f);
        LVec3 a = s.center[P.vid(w[0])], d = s.center[P.vid(w[1])] - a;
        s.contact.push_back(a + d * (std::abs(s.radius[P.vid(w[0])]) / lnorm(d)));
    }
    for (auto b : P.interior_blacks()) {
        auto fs = Patch::vertex_faces(b);
        std::array<LVec3, 4> pts;
        for (int k = 0; k < 4; ++k) pts[k] = s.contact[P.fid(fs[k])];
        double res = 0;
        s.face_circle[P.vid(b)] = circle_through(pts, &res);
        s.circle_residual = std::max(s.circle_residual, res);
    }
    return s;
}

AssociatedSurface associate(const SIsothermicNet& koebe, double phi, double tol) {
    return integrate_associated(associated_form(koebe, phi), koebe, phi, tol);
}

SimilarityReport face_similarity_check(const AssociatedSurface& surf, const SIsothermicNet& dual,
                                       const SIsothermicNet& koebe) {
    const Patch& P = surf.patch;
    SimilarityReport r;
    for (auto b : P.interior_blacks()) {
        const SpacelikeCircle& C = *surf.face_circle[P.vid(b)];
        auto ws = Patch::star(b);
        std::array<LVec3, 4> q, d;
        for (int k = 0; k < 4; ++k) {
            LVec3 x = surf.center[P.vid(ws[k])];
            q[k] = x + C.axis * ldot(x - C.center, C.axis);  // <axis,axis> = -1
            d[k] = dual.white[P.vid(ws[k])].center;
        }
        double rb = koebe.black[P.vid(b)].radius;
        double mu = std::sqrt(1 + rb * rb * std::sin(surf.phi) * std::sin(surf.phi));
        for (int a = 0; a < 4; ++a)
            for (int c = a + 1; c < 4; ++c)
                r.max_deviation = std::max(r.max_deviation, std::abs(lnorm(q[a] - q[c]) / lnorm(d[a] - d[c]) - mu));
        // incircle of the projected quad: centre of C, radius mu * r*
        double rstar = dual.black[P.vid(b)].radius;
        for (int k = 0; k < 4; ++k) {
            LVec3 e = q[(k + 1) % 4] - q[k];
            LVec3 v = C.center - q[k];
            double along = ldot(v, e) / ldot(e, e);
            double dist = lnorm(v - e * along);
            r.incircle = std::max(r.incircle, std::abs(dist - mu * std::abs(rstar)));
        }
    }
    return r;
}

namespace {
// Oriented black radius making the sphere touch every adjacent white sphere.
double signed_black_radius(const AssociatedSurface& s, VertexIdx b, const LVec3& m, double rho, double* dev) {
    double plus = 0, minus = 0;
    for (auto w : Patch::star(b)) {
        OrientedSphere W = s.sphere(w);
        plus = std::max(plus, touching_residual(W, {m, rho}));
        minus = std::max(minus, touching_residual(W, {m, -rho}));
    }
    if (dev) *dev = std::min(plus, minus);
    return plus <= minus ? rho : -rho;
}
}  // namespace

ContactPair contact_congruences(const AssociatedSurface& surf) {
    const Patch& P = surf.patch;
    const double rho = std::abs(std::sin(surf.phi));
    auto blacks = P.interior_blacks();
    if (blacks.empty()) throw GeometryError("InconsistentAssignment", "patch has no interior black vertex");
    std::vector<std::array<LVec3, 2>> cand(P.num_vertices());
    for (auto b : blacks) {
        const auto& C = *surf.face_circle[P.vid(b)];
        cand[P.vid(b)] = {sphere_through_circle_with_radius(C, rho, 1, 1e-9).center,
                          sphere_through_circle_with_radius(C, rho, -1, 1e-9).center};
    }
    std::vector<std::optional<std::array<IsotropicLine, 2>>> gens(P.num_faces());
    auto generators = [&](FaceIdx f) -> const std::array<IsotropicLine, 2>& {
        auto& g = gens[P.fid(f)];
        if (!g) {
            auto w = Patch::face_whites(f);
            g = common_isotropic_lines(surf.sphere(w[0]), surf.sphere(w[1]));
        }
        return *g;
    };
    auto incidence = [&](const LVec3& m, const IsotropicLine& l) { return std::abs(ldot(l.dir, l.point - m)); };
    auto which = [&](const LVec3& m, FaceIdx f) {
        const auto& g = generators(f);
        return incidence(m, g[0]) <= incidence(m, g[1]) ? 0 : 1;
    };

    ContactPair out{{Congruence(P), Congruence(P)}, {}, 0, 0};
    std::array<std::vector<int>, 2> side{std::vector<int>(P.num_vertices(), -1), std::vector<int>(P.num_vertices(), -1)};
    std::array<std::vector<int>, 2> line{std::vector<int>(P.num_faces(), -1), std::vector<int>(P.num_faces(), -1)};
    for (int k = 0; k < 2; ++k) {
        side[k][P.vid(blacks[0])] = k;
        std::deque<VertexIdx> q{blacks[0]};
        while (!q.empty()) {
            VertexIdx b = q.front();
            q.pop_front();
            LVec3 m = cand[P.vid(b)][side[k][P.vid(b)]];
            for (auto f : Patch::vertex_faces(b)) {
                int g = which(m, f);
                if (line[k][P.fid(f)] >= 0 && line[k][P.fid(f)] != g)
                    throw GeometryError("InconsistentAssignment", "generator choice conflicts at a face");
                line[k][P.fid(f)] = g;
                for (auto b2 : Patch::face_blacks(f)) {
                    if (b2 == b || !P.interior(b2)) continue;
                    const auto& c2 = cand[P.vid(b2)];
                    const auto& G = generators(f)[g];
                    int s2 = incidence(c2[0], G) <= incidence(c2[1], G) ? 0 : 1;
                    if (side[k][P.vid(b2)] < 0) {
                        side[k][P.vid(b2)] = s2;
                        q.push_back(b2);
                    } else if (side[k][P.vid(b2)] != s2) {
                        throw GeometryError("InconsistentAssignment", "black sphere choice conflicts");
                    }
                }
            }
        }
    }
    for (int k = 0; k < 2; ++k) {
        Congruence& c = out.cong[k];
        for (auto w : P.whites()) c.white[P.vid(w)] = surf.sphere(w);
        double dev = 0;
        out.radius[k] = signed_black_radius(surf, blacks[0], cand[P.vid(blacks[0])][side[k][P.vid(blacks[0])]], rho, &dev);
        for (auto b : blacks) {
            LVec3 m = cand[P.vid(b)][side[k][P.vid(b)]];
            c.black[P.vid(b)] = OrientedSphere{m, out.radius[k]};
            for (auto w : Patch::star(b)) {
                // radius implied by oriented contact with the white sphere
                OrientedSphere W = surf.sphere(w);
                LVec3 d = m - W.center;
                double L = std::sqrt(std::max(0.0, ldot(d, d)));
                double implied = std::abs(W.radius - L - out.radius[k]) < std::abs(W.radius + L - out.radius[k])
                                     ? W.radius - L
                                     : W.radius + L;
                out.radius_deviation = std::max(out.radius_deviation, std::abs(implied - out.radius[k]));
            }
        }
        for (auto f : P.faces())
            if (line[k][P.fid(f)] >= 0) c.lines[P.fid(f)] = generators(f)[line[k][P.fid(f)]];
        out.contact = std::max(out.contact, c.contact_residual());
    }
    // first congruence carries black radius sin(phi)
    const double target = std::sin(surf.phi);
    if (std::abs(out.radius[1] - target) < std::abs(out.radius[0] - target)) {
        std::swap(out.cong[0], out.cong[1]);
        std::swap(out.radius[0], out.radius[1]);
    }
    return out;
}

Congruence null_congruence(const Congruence& contact, double rho) {
    const Patch& P = contact.patch;
    Congruence c(P);
    for (auto w : P.whites()) {
        c.white[P.vid(w)] = contact.white[P.vid(w)];
        c.white[P.vid(w)].radius -= rho;
    }
    for (auto b : P.blacks())
        if (contact.black[P.vid(b)]) c.black[P.vid(b)] = OrientedSphere{contact.black[P.vid(b)]->center, 0.0};
    for (auto f : P.faces()) {
        auto w = Patch::face_whites(f);
        for (auto b : Patch::face_blacks(f)) {
            if (!c.black[P.vid(b)]) continue;
            double miss = 0;
            c.lines[P.fid(f)] = face_line(c.white[P.vid(w[0])], c.white[P.vid(w[1])], c.black[P.vid(b)]->center, &miss);
            if (miss > 1e-6 * std::max(1.0, enorm(c.black[P.vid(b)]->center)))
                throw GeometryError("ContactLost", "shifted spheres lost contact with the black apex");
            break;
        }
    }
    return c;
}

VertexStarReport vertex_star_analysis(const AssociatedSurface& surf, const Congruence& contact,
                                      const SIsothermicNet& koebe, VertexIdx w) {
    const Patch& P = surf.patch;
    if (!P.interior(w) || !Patch::is_white(w)) throw GeometryError("BoundaryVertex", "vertex star needs an interior white");
    LVec3 m0 = koebe.white[P.vid(w)].center;
    LVec3 n0 = m0 / lnorm(m0);
    LVec3 P0 = surf.center[P.vid(w)];
    double R0 = std::abs(surf.radius[P.vid(w)]);
    auto fs = Patch::vertex_faces(w);
    std::array<LVec3, 4> t;
    for (int k = 0; k < 4; ++k) {
        auto pair = Patch::face_whites(fs[k]);
        VertexIdx w2 = pair[0] == w ? pair[1] : pair[0];
        LVec3 T = lunit(koebe.white[P.vid(w2)].center - m0);
        LVec3 B = lcross(T, koebe.contact[P.fid(fs[k])]);
        t[k] = lunit(lcross(n0, B)) * static_cast<double>(edge_sign(w, w2));
    }
    VertexStarReport r;
    for (int k = 0; k < 4; ++k) {
        int n = (k + 1) % 4;
        const auto &la = contact.lines[P.fid(fs[k])], &lb = contact.lines[P.fid(fs[n])];
        if (!la || !lb) throw GeometryError("BoundaryVertex", "missing generator around vertex");
        double gap = 0;
        LVec3 Y = line_meet(*la, *lb, &gap);
        r.gap = std::max(r.gap, gap);
        LVec3 Z = Y + n0 * ldot(Y - P0, n0);
        r.distance[k] = lnorm(Z - P0);
        double ca = std::clamp(ldot(t[k], t[n]), -1.0, 1.0);
        r.predicted[k] = R0 / std::cos(std::acos(ca) / 2);
    }
    return r;
}

}  // namespace maxlor
