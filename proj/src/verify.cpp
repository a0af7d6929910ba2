#include "maxlor/verify.hpp"

#include <map>
#include <numbers>
#include <random>

#include "maxlor/associated.hpp"
#include "maxlor/christoffel.hpp"
#include "maxlor/weierstrass.hpp"

namespace maxlor {

bool SuiteReport::pass() const {
    if (!error.empty()) return false;
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lift", "dual", "weierstrass", "associated", "xinvariance", "planar"};
    return names;
}

std::vector<double> phi_grid(int n) {
    std::vector<double> out;
    for (int k = 0; k < n; ++k) out.push_back(2 * std::numbers::pi * k / n);
    return out;
}

namespace {

class Recorder {
public:
    Recorder(SuiteReport& r, const VerifyOptions& o) : rep_(r), opt_(o) {}
    // threshold = base * scale, base replaced by the override when present
    void upper(const std::string& name, double value, double base, double scale = 1) {
        double th = opt_.tol.value_or(base) * scale;
        rep_.checks.push_back({name, value, th, value < th, false});
    }
    void lower(const std::string& name, double value, double threshold) {
        rep_.checks.push_back({name, value, threshold, value > threshold, true});
    }

private:
    SuiteReport& rep_;
    const VerifyOptions& opt_;
};

struct Pipeline {
    SIsothermicNet koebe;
    std::array<Congruence, 2> kc;
    DualResult dual;
    double diam = 0;  // of the maximal net

    explicit Pipeline(const DiskCirclePattern& p)
        : koebe(build_koebe_net(p)), kc(koebe_congruences(koebe)), dual(dualize(koebe, kc)),
          diam(diameter(dual.net.points())) {}
};

void suite_lift(const DiskCirclePattern& p, Recorder& R) {
    auto net = build_koebe_net(p);
    auto kc = koebe_congruences(net);
    auto r = check_lift(p, net, kc);
    auto pr = validate_pattern(p);
    R.upper("pattern_orthogonality", pr.orthogonality, 1e-11);
    R.upper("pattern_incidence", pr.incidence, 1e-11);
    R.upper("hyperboloid", r.hyperboloid, 1e-10);
    R.upper("polar_sphere", r.polar, 1e-10);
    R.upper("touching", r.touching, 1e-10, r.diameter * r.diameter);
    R.upper("orthogonal_intersection", r.orthogonal, 1e-9);
    R.upper("congruence_contact", r.congruence, 1e-9);
}

void suite_dual(const Pipeline& P, Recorder& R) {
    R.upper("closedness", P.dual.residual, 1e-11, P.diam);
    R.upper("closedness_congruence_1", P.dual.cong_residual[0], 1e-11, P.diam);
    R.upper("closedness_congruence_2", P.dual.cong_residual[1], 1e-11, P.diam);
    R.upper("congruence_white_agreement", std::max(P.dual.white_agreement[0], P.dual.white_agreement[1]), 1e-10, P.diam);
    R.upper("dual_congruence_contact", std::max(P.dual.cong[0].contact_residual(), P.dual.cong[1].contact_residual()), 1e-9,
            P.diam);
    auto dd = dualize_net(P.dual.net);
    R.upper("dual_of_dual_similarity", similarity_residual(dd.points(), P.koebe.points()), 1e-10, P.diam);
    R.upper("coplanarity", check_maximal(P.dual.net).coplanarity, 1e-9, P.diam * P.diam * P.diam);
    std::vector<LVec3> normals(P.koebe.patch.num_vertices());
    for (auto w : P.koebe.patch.whites()) normals[P.koebe.patch.vid(w)] = P.koebe.white[P.koebe.patch.vid(w)].center;
    double H = 0, refit = 0;
    for (const auto& s : steiner_coefficients(P.dual.net, normals, 1e-2 * P.diam)) {
        H = std::max(H, std::abs(s.H));
        refit = std::max(refit, s.refit);
    }
    R.upper("steiner_mean_curvature", H, 1e-9, P.diam);
    R.upper("steiner_quadratic_refit", refit, 1e-12);
}

void suite_weierstrass(const DiskCirclePattern& p, const Pipeline& P, Recorder& R) {
    auto W = assemble_weierstrass(p);
    const Patch& Q = p.patch;
    R.upper("frame_orthonormality", W.frame, 1e-10);
    R.upper("black_isotropy", W.isotropy, 1e-10);
    R.upper("closedness", W.residual, 1e-11, P.diam);
    R.upper("oracle_equivalence", translation_residual(W.net.points(), P.dual.net.points()), 1e-9, P.diam);
    double cong = 0, radii = 0, sisters = 0;
    for (int k = 0; k < 2; ++k) {
        std::vector<LVec3> a, b;
        for (auto v : Q.blacks()) {
            a.push_back(W.cong[k].black[Q.vid(v)]->center);
            b.push_back(P.dual.cong[k].black[Q.vid(v)]->center);
        }
        for (auto w : Q.whites()) a.push_back(W.cong[k].white[Q.vid(w)].center), b.push_back(P.dual.net.white[Q.vid(w)].center);
        cong = std::max(cong, translation_residual(a, b));
        for (auto w : Q.whites())
            radii = std::max(radii, std::abs(std::abs(W.planar[k].white[Q.vid(w)].radius) -
                                             w_radius_white(p.center[Q.vid(w)], p.radius[Q.vid(w)])));
        sisters = std::max(sisters, W.planar[k].residual());
    }
    R.upper("congruence_equivalence", cong, 1e-9, P.diam);
    R.upper("incircle_radii", radii, 1e-10);
    R.upper("incircular_validity", sisters, 1e-9, P.diam);
}

void suite_associated(const Pipeline& P, const VerifyOptions& opt, Recorder& R) {
    const Patch& Q = P.koebe.patch;
    auto phis = phi_grid(opt.phi_grid);
    double closed = 0, len = 0, sym = 0, mu = 0, incircle = 0, radii = 0, circle = 0, contact = 0, nullc = 0;
    double star_law = 0, star_spread = 0, gap = 0, dual0 = 0;
    auto f0 = associate(P.koebe, 0.0);
    auto fpi = associate(P.koebe, std::numbers::pi);
    {
        std::vector<LVec3> s;
        for (auto w : Q.whites()) s.push_back(f0.center[Q.vid(w)] + fpi.center[Q.vid(w)]);
        LVec3 mean;
        for (auto& x : s) mean += x;
        mean = mean / static_cast<double>(s.size());
        for (auto& x : s) sym = std::max(sym, maxabs(x - mean));
        for (auto w : Q.whites()) dual0 = std::max(dual0, maxabs(f0.center[Q.vid(w)] - P.dual.net.white[Q.vid(w)].center));
    }
    auto deep = Q.deep_whites();
    std::vector<std::array<double, 4>> star0;
    for (size_t k = 0; k < phis.size(); ++k) {
        double phi = phis[k];
        auto a = associate(P.koebe, phi);
        closed = std::max(closed, a.closedness);
        circle = std::max(circle, a.circle_residual);
        for (auto f : Q.faces()) {
            auto w = Patch::face_whites(f);
            double l0 = lnorm(f0.center[Q.vid(w[1])] - f0.center[Q.vid(w[0])]);
            double l = lnorm(a.center[Q.vid(w[1])] - a.center[Q.vid(w[0])]);
            len = std::max(len, std::abs(l - l0) / l0);
        }
        auto sim = face_similarity_check(a, P.dual.net, P.koebe);
        mu = std::max(mu, sim.max_deviation);
        incircle = std::max(incircle, sim.incircle);
        auto cp = contact_congruences(a);
        radii = std::max({radii, cp.radius_deviation, std::abs(cp.radius[0] - std::sin(phi)),
                          std::abs(cp.radius[1] + std::sin(phi))});
        contact = std::max(contact, cp.contact);
        for (int q = 0; q < 2; ++q) nullc = std::max(nullc, null_congruence(cp.cong[q], cp.radius[q]).contact_residual());
        for (size_t i = 0; i < deep.size(); ++i) {
            auto vs = vertex_star_analysis(a, cp.cong[0], P.koebe, deep[i]);
            gap = std::max(gap, vs.gap);
            if (k == 0) star0.push_back(vs.distance);
            for (int m = 0; m < 4; ++m) {
                star_law = std::max(star_law, std::abs(vs.distance[m] - vs.predicted[m]));
                star_spread = std::max(star_spread, std::abs(vs.distance[m] - star0[i][m]));
            }
        }
    }
    R.upper("phi0_equals_dual", dual0, 1e-10, P.diam);
    R.upper("closedness", closed, 1e-11, P.diam);
    R.upper("edge_length_invariance", len, 1e-10);
    R.upper("central_symmetry_pi", sym, 1e-10, P.diam);
    R.upper("face_circle", circle, 1e-9, P.diam);
    R.upper("similarity_factor", mu, 1e-9);
    R.upper("projected_incircle", incircle, 1e-9, P.diam);
    R.upper("contact_sphere_radius", radii, 1e-9);
    R.upper("contact_congruence", contact, 1e-9, P.diam);
    R.upper("null_congruence", nullc, 1e-9, P.diam);
    R.upper("vertex_star_law", star_law, 1e-9);
    R.upper("vertex_star_phi_independence", star_spread, 1e-9);
    R.upper("generator_intersection", gap, 1e-9, P.diam);
}

void suite_xinvariance(const Pipeline& P, const VerifyOptions& opt, Recorder& R) {
    const Patch& Q = P.koebe.patch;
    double rel = 0, imag = 0, inv = 0, iso = 0;
    std::mt19937_64 rng(20240611);
    auto cross_check = [&](const Congruence& c) {
        auto pl = project(c);
        LIsometry L = random_isometry(rng, 1.0);
        Congruence moved = c;
        for (auto b : Q.blacks())
            if (moved.black[Q.vid(b)]) moved.black[Q.vid(b)]->center = L(moved.black[Q.vid(b)]->center);
        for (auto& [id, x] : x_field(c)) {
            cplx xp = x_planar_complex(pl, Q.vertex(id));
            rel = std::max(rel, std::abs(xp.real() - x) / std::abs(x));
            imag = std::max(imag, std::abs(xp.imag()) / std::abs(xp));
            iso = std::max(iso, std::abs(x_lorentz(moved, Q.vertex(id)) - x) / std::abs(x));
        }
    };
    for (const auto& c : P.kc) cross_check(c);
    for (const auto& c : P.dual.cong) cross_check(c);
    std::array<std::map<int, double>, 2> x0;
    for (double phi : phi_grid(opt.phi_grid)) {
        auto cp = contact_congruences(associate(P.koebe, phi));
        for (int q = 0; q < 2; ++q) {
            auto nc = null_congruence(cp.cong[q], cp.radius[q]);
            cross_check(nc);
            auto x = x_field(nc);
            if (x0[q].empty()) x0[q] = x;
            for (auto& [id, v] : x) inv = std::max(inv, std::abs(v - x0[q].at(id)));
            // X of the contact congruence coincides with X of its Laguerre shift
            for (auto& [id, v] : x_field(cp.cong[q])) inv = std::max(inv, std::abs(v - x.at(id)));
        }
    }
    R.upper("planar_equals_lorentz", rel, 1e-10);
    R.upper("x_real", imag, 1e-8);
    R.upper("isometry_invariance", iso, 1e-10);
    R.upper("phi_invariance", inv, 1e-8);
}

void suite_planar(const Pipeline& P, const VerifyOptions& opt, Recorder& R) {
    const Patch& Q = P.koebe.patch;
    auto k1 = project(P.kc[0]), k2 = project(P.kc[1]);
    auto kc = koebe_concurrency_test(k1, k2);
    R.upper("koebe_concurrency", kc.max_distance, 1e-9);
    R.upper("koebe_concurrency_origin", std::abs(kc.point), 1e-9);
    auto m1 = project(P.dual.cong[0]), m2 = project(P.dual.cong[1]);
    R.lower("maximal_concurrency_negative", koebe_concurrency_test(m1, m2).max_distance, 1e-6);
    double men = 0;
    int stars = 0;
    for (auto w : Q.whites()) {
        if (!Q.interior(w)) continue;
        bool full = true;
        for (auto b : Patch::star(w)) full = full && m1.black[Q.vid(b)] && m2.black[Q.vid(b)];
        if (!full) continue;
        try {
            men = std::max(men, std::abs(menelaus_maximal_test(m1, m2, w) - 1.0));
            ++stars;
        } catch (const GeometryError& e) {
            if (e.code() != "DegenerateStar") throw;
        }
    }
    R.lower("menelaus_stars", stars, 0);
    R.upper("menelaus_product", men, 1e-8);
    double other = 0;
    auto ot = other_tangents(k1);
    auto back = other_tangents(ot);
    for (auto f : Q.faces()) {
        int id = Q.fid(f);
        if (ot.lines[id] && k2.lines[id]) other = std::max(other, line_distance(*ot.lines[id], *k2.lines[id]));
        if (back.lines[id] && k1.lines[id]) other = std::max(other, line_distance(*back.lines[id], *k1.lines[id]));
    }
    R.upper("other_tangents", other, 1e-10);
    double tc = 0;
    for (double phi : phi_grid(opt.phi_grid)) {
        auto cp = contact_congruences(associate(P.koebe, phi));
        auto p1 = project(null_congruence(cp.cong[0], cp.radius[0]));
        auto p2 = project(null_congruence(cp.cong[1], cp.radius[1]));
        tc = std::max(tc, assoc_tangent_circle_test(p1, p2, -2 * std::sin(phi)).max_deviation);
        tc = std::max(tc, assoc_tangent_circle_test(p2, p1, 2 * std::sin(phi)).max_deviation);
    }
    R.upper("other_tangent_circle", tc, 1e-8);
}

}  // namespace

SuiteReport verify_suite(const DiskCirclePattern& p, const std::string& suite, const VerifyOptions& opt) {
    SuiteReport rep{suite, {}, {}};
    Recorder R(rep, opt);
    try {
        if (suite == "lift") {
            suite_lift(p, R);
            return rep;
        }
        Pipeline P(p);
        if (suite == "dual")
            suite_dual(P, R);
        else if (suite == "weierstrass")
            suite_weierstrass(p, P, R);
        else if (suite == "associated")
            suite_associated(P, opt, R);
        else if (suite == "xinvariance")
            suite_xinvariance(P, opt, R);
        else if (suite == "planar")
            suite_planar(P, opt, R);
        else
            throw GeometryError("UnknownSuite", suite);
    } catch (const GeometryError& e) {
        if (e.code() == "UnknownSuite") throw;
        rep.error = e.code();
    }
    return rep;
}

std::vector<SuiteReport> verify(const DiskCirclePattern& p, const std::string& suite, const VerifyOptions& opt) {
    std::vector<SuiteReport> out;
    if (suite == "all")
        for (const auto& s : suite_names()) out.push_back(verify_suite(p, s, opt));
    else
        out.push_back(verify_suite(p, suite, opt));
    return out;
}

}  // namespace maxlor
