// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "jumpcon/jumpcon.hpp"
#include "oracles.hpp"
#include "process.hpp"

using namespace jumpcon;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& what) {
        if (ok) detail << what;
        ok = false;
    }
};

// The message is only built when the condition fails.
#define REQUIRE(check, cond, what) \
    do {                           \
        if (!(cond)) (check).fail(what); \
    } while (0)

/// 20 instances per k, drawn from disjoint seed ranges.
std::vector<HulsbergenData> general_instances(std::size_t k) {
    std::vector<HulsbergenData> out;
    for (std::uint64_t i = 0; i < 20; ++i) out.push_back(random_instance(k, 100000 * k + i, true));
    return out;
}

const std::vector<std::vector<HulsbergenData>>& all_instances() {
    static const std::vector<std::vector<HulsbergenData>> cache = [] {
        std::vector<std::vector<HulsbergenData>> v;
        for (std::size_t k = 1; k <= 6; ++k) v.push_back(general_instances(k));
        return v;
    }();
    return cache;
}

std::string label(std::size_t k, std::size_t i) { return "k=" + std::to_string(k) + " instance " + std::to_string(i) + ": "; }

bool proportional_matrices(const RatMatrix& a, const RatMatrix& b) {
    RatVector fa, fb;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            fa.push_back(a(i, j));
            fb.push_back(b(i, j));
        }
    return projectively_equal(fa, fb);
}

struct PonceletSetup {
    Plane h;
    EmbeddedPlane frame;
    PlaneConic outer, inner;
    std::array<RatVector, 3> lines;
};

PonceletSetup poncelet_setup(const HulsbergenData& d) {
    const auto& z = d.points();
    const Plane h = plane_through(z[0], z[1], z[2]);
    const EmbeddedPlane frame = polar_frame(h);
    return {h, frame, project_cone(cone_data(d), frame), dual_conic(h),
            {dual_line(z[0], frame), dual_line(z[1], frame), dual_line(z[2], frame)}};
}

Check degree_law() {
    Check c;
    for (const auto& group : all_instances())
        for (std::size_t i = 0; i < group.size(); ++i) {
            const auto& d = group[i];
            const JumpingSurface s = jumping_polynomial(d);
            REQUIRE(c, s.degree == d.k() - 1 && s.equation.degree() == d.k() - 1, label(d.k(), i) + "wrong degree");
        }
    return c;
}

Check closed_form_equivalence() {
    Check c;
    for (const auto& group : all_instances())
        for (std::size_t i = 0; i < group.size(); ++i) {
            const auto& d = group[i];
            REQUIRE(c, proportional(sym_det(delta_symbolic(d)), closed_form(d)), label(d.k(), i) + "not proportional");
        }
    for (std::size_t i = 0; i < all_instances()[2].size(); ++i) {
        const auto& d = all_instances()[2][i];
        const PonceletSetup p = poncelet_setup(d);
        const PlaneConic display = embed_extension({d.coeffs()[0], d.coeffs()[1], d.coeffs()[2]}, p.lines, p.frame);
        REQUIRE(c, proportional_matrices(display.gram, p.outer.gram), label(3, i) + "projection differs from c1Z2Z3+c2Z1Z3+c3Z1Z2");
    }
    return c;
}

Check symmetry() {
    Check c;
    for (const auto& group : all_instances())
        for (std::size_t i = 0; i < group.size(); ++i) {
            const LinearFormMatrix m = delta_symbolic(group[i]);
            bool sym = true;
            for (std::size_t a = 0; a < m.size(); ++a)
                for (std::size_t b = 0; b < m.size(); ++b) sym = sym && m(a, b) == m(b, a);
            REQUIRE(c, sym, label(group[i].k(), i) + "delta not symmetric");
        }
    return c;
}

Check corank_criterion() {
    Check c;
    SmallRationals gen(424242);
    std::size_t jumping_forced = 0, jumping_random = 0, random_total = 0;
    for (const auto& group : all_instances())
        for (std::size_t i = 0; i < group.size(); ++i) {
            const auto& d = group[i];
            const JumpingSurface s = jumping_polynomial(d);
            const LinearFormMatrix delta = delta_symbolic(d);
            for (int t = 0; t < 200; ++t) {
                // every fourth plane is forced through two points so the jumping side is exercised
                const bool forced = t % 4 == 3 && d.k() >= 2;
                std::optional<Plane> h;
                if (forced)
                    h = fixtures::plane_through_points(
                        d, {static_cast<std::size_t>(t) % d.k(), (static_cast<std::size_t>(t) + 1) % d.k()}, gen);
                else
                    h = Plane(primitive_vector(gen.vector4()));
                if (!h) continue;
                const std::size_t corank = corank_at(delta, *h);
                if (t % 20 == 0) REQUIRE(c, corank == corank_at(d, *h), label(d.k(), i) + "cached delta disagrees");
                REQUIRE(c, s.contains(*h) == (corank > 0), label(d.k(), i) + "vanishing disagrees with corank");
                if (forced) {
                    jumping_forced += corank > 0 ? 1 : 0;
                    continue;
                }
                ++random_total;
                jumping_random += corank > 0 ? 1 : 0;
                if (corank == 0 && !is_tangent_plane(*h))
                    REQUIRE(c, splitting_type(delta, *h) == std::make_pair(-1, -1), label(d.k(), i) + "generic splitting");
            }
        }
    REQUIRE(c, jumping_forced > 0, "no jumping planes sampled");
    REQUIRE(c, 20 * jumping_random < random_total, "random planes jump too often");
    c.detail << (c.ok ? std::to_string(jumping_random) + " of " + std::to_string(random_total) + " random planes jump" : "");
    return c;
}

Check incidence_count() {
    Check c;
    SmallRationals gen(515151);
    std::size_t tested[4] = {0, 0, 0, 0};
    for (std::size_t k = 3; k <= 6; ++k)
        for (std::size_t i = 0; i < all_instances()[k - 1].size(); ++i) {
            const auto& d = all_instances()[k - 1][i];
            for (std::size_t m = 1; m <= 3; ++m) {
                std::vector<std::size_t> idx;
                for (std::size_t j = 0; j < m; ++j) idx.push_back((i + j) % k);
                const auto h = fixtures::plane_through_points(d, idx, gen);
                if (!h || fixtures::incidences(d, *h) != m) continue;
                ++tested[m];
                const std::size_t corank = corank_at(d, *h);
                const std::size_t expected = m == 1 ? 0 : m - 1;
                REQUIRE(c, corank == expected, label(k, i) + std::to_string(m) + "-point plane has corank " + std::to_string(corank));
            }
        }
    REQUIRE(c, tested[1] > 0 && tested[2] > 0 && tested[3] > 0, "some incidence count never constructed");
    return c;
}

Check singular_count() {
    Check c;
    SmallRationals gen(616161);
    const std::size_t expected[] = {0, 0, 0, 1, 4, 10};
    for (std::size_t k = 3; k <= 5; ++k)
        for (std::size_t i = 0; i < all_instances()[k - 1].size(); ++i) {
            const auto& d = all_instances()[k - 1][i];
            const auto planes = triple_plane_singularities(d);
            std::set<RatVector> distinct;
            bool all_singular = true;
            for (const auto& t : planes) {
                distinct.insert(primitive_vector(t.plane.y));
                all_singular = all_singular && t.singular;
            }
            REQUIRE(c, planes.size() == expected[k] && distinct.size() == expected[k] && all_singular,
                      label(k, i) + "triple planes are not " + std::to_string(expected[k]) + " distinct singular points");
            const JumpingSurface s = jumping_polynomial(d);
            for (int t = 0; t < 5; ++t) {
                const auto h = fixtures::plane_through_points(d, {0, 1}, gen);
                if (!h || fixtures::incidences(d, *h) != 2) continue;
                REQUIRE(c, !is_singular_at(s, *h), label(k, i) + "2-point plane is singular");
            }
        }
    return c;
}

Check k2_structure() {
    Check c;
    const DualPoint reg = dual_point(fixtures::k2_instance());
    REQUIRE(c, (reg.point == RatVector{3, 0, 0, 2} && !reg.on_quadric), "regression (2,3) instance");
    for (std::size_t i = 0; i < all_instances()[1].size(); ++i) {
        const auto& d = all_instances()[1][i];
        const DualPoint p = dual_point(d);
        REQUIRE(c, proportional(jumping_polynomial(d).equation, Form::linear(p.point)), label(2, i) + "surface is not the dual plane");
        REQUIRE(c, !p.on_quadric, label(2, i) + "point on Q with nonzero coefficients");
        for (std::size_t j = 0; j < 2; ++j) {
            RatVector coeffs = d.coeffs();
            coeffs[j] = 0;
            REQUIRE(c, dual_point(HulsbergenData(d.points(), coeffs)).on_quadric, label(2, i) + "zeroed coefficient leaves point off Q");
        }
    }
    return c;
}

Check k3_cone() {
    Check c;
    const ConeData t1 = cone_data(fixtures::t1());
    REQUIRE(c, (t1.vertex && t1.vertex->y == RatVector{0, 1, -1, 0}), "T1 vertex regression");
    SmallRationals gen(717171);
    std::size_t sampled = 0;
    for (std::size_t i = 0; i < all_instances()[2].size(); ++i) {
        const auto& d = all_instances()[2][i];
        const auto& z = d.points();
        const ConeData cone = cone_data(d);
        REQUIRE(c, cone.rank == 3 && is_zero(cone.gram * cone.vertex->y), label(3, i) + "cone rank or kernel");
        REQUIRE(c, *cone.vertex == plane_through(z[0], z[1], z[2]), label(3, i) + "vertex is not the plane through Z");
        REQUIRE(c, corank_at(d, *cone.vertex) == 2, label(3, i) + "corank at vertex");
        // a line through a known point p of the cone meets it again at s = −2B(p,r)/F(r)
        const auto p = fixtures::plane_through_points(d, {0, 1}, gen);
        if (!p) continue;
        for (int t = 0; t < 10; ++t) {
            const RatVector r = gen.vector4();
            const Rational fr = bilinear(r, cone.gram, r);
            if (fr == 0) continue;
            const Rational s = -2 * bilinear(p->y, cone.gram, r) / fr;
            RatVector q(4);
            for (std::size_t j = 0; j < 4; ++j) q[j] = p->y[j] + s * r[j];
            if (is_zero(q) || projectively_equal(q, cone.vertex->y)) continue;
            const Plane h(q);
            ++sampled;
            REQUIRE(c, jumping_polynomial(d).contains(h), label(3, i) + "sampled point is off the cone");
            REQUIRE(c, corank_at(d, h) == 1, label(3, i) + "corank at a non-vertex jumping plane");
        }
    }
    REQUIRE(c, sampled > 0, "no jumping planes sampled");
    return c;
}

RatMatrix diag(Rational a, Rational b, Rational c) { return {{a, 0, 0}, {0, b, 0}, {0, 0, c}}; }

Check poncelet_certificates() {
    Check c;
    std::size_t conclusive = 0;
    for (std::size_t i = 0; i < all_instances()[2].size(); ++i) {
        const auto& d = all_instances()[2][i];
        const PonceletSetup p = poncelet_setup(d);
        REQUIRE(c, !is_tangent_plane(p.h), label(3, i) + "tangent base plane");
        for (const auto& l : p.lines) REQUIRE(c, tangency_check(l, p.inner), label(3, i) + "dual line not tangent");
        for (const auto& v : triangle_vertices(p.lines)) REQUIRE(c, incident(v, p.outer), label(3, i) + "vertex not on C(E)");
        REQUIRE(c, cayley_triangle_invariant(p.outer, p.inner) == 0, label(3, i) + "Cayley invariant nonzero");
        const PlaneConic display = embed_extension({d.coeffs()[0], d.coeffs()[1], d.coeffs()[2]}, p.lines, p.frame);
        REQUIRE(c, proportional_matrices(display.gram, p.outer.gram), label(3, i) + "embedding differs from projection");
        const ClosureStatus s = closure_oracle_numeric(p.outer, p.inner, 32, 1e-9);
        if (s != ClosureStatus::inconclusive) ++conclusive;
        REQUIRE(c, s != ClosureStatus::open, label(3, i) + "numeric oracle reports open");
    }
    const EmbeddedPlane std_frame({RatVector{1, 0, 0, 0}, RatVector{0, 1, 0, 0}, RatVector{0, 0, 1, 0}}, "std");
    const PlaneConic unit(diag(1, 1, -1), std_frame);
    const PlaneConic euler(diag(1, 1, -4), std_frame), wide(diag(1, 1, -9), std_frame);
    REQUIRE(c, cayley_triangle_invariant(euler, unit) == 0 && closure_oracle_numeric(euler, unit) == ClosureStatus::closed,
              "R = 2r circle pair");
    REQUIRE(c, cayley_triangle_invariant(wide, unit) != 0 && closure_oracle_numeric(wide, unit) == ClosureStatus::open,
              "R = 3r circle pair");
    REQUIRE(c, conclusive > 0, "numeric oracle never conclusive");
    return c;
}

Check veronese() {
    Check c;
    for (std::size_t i = 0; i < all_instances()[2].size(); ++i) {
        const auto& d = all_instances()[2][i];
        const PonceletSetup p = poncelet_setup(d);
        std::array<Rational, 3> coeffs{d.coeffs()[0], d.coeffs()[1], d.coeffs()[2]};
        REQUIRE(c, veronese_rank(p.outer) == 3, label(3, i) + "rank below 3 before zeroing");
        for (std::size_t j = 0; j < 3; ++j) {
            std::array<Rational, 3> zeroed = coeffs;
            zeroed[j] = 0;
            // det δ vanishes identically once a coefficient is zero; C(E) is read from the closed form instead
            RatVector cz(zeroed.begin(), zeroed.end());
            const RatMatrix g = quadratic_gram(closed_form(HulsbergenData(d.points(), cz)));
            RatMatrix restricted(3, 3);
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b) restricted(a, b) = bilinear(p.frame.basis[a], g, p.frame.basis[b]);
            const PlaneConic dropped(restricted, p.frame);
            REQUIRE(c, veronese_rank(dropped) <= 2, label(3, i) + "zeroing c" + std::to_string(j + 1) + " keeps rank 3");
            REQUIRE(c, proportional_matrices(dropped.gram, embed_extension(zeroed, p.lines, p.frame).gram),
                      label(3, i) + "zeroed closed form differs from the embedding");
            REQUIRE(c, veronese_rank(embed_extension(coeffs, p.lines, p.frame)) == 3, label(3, i) + "restoring does not return rank 3");
        }
    }
    return c;
}

Check determinism() {
    Check c;
    const std::string cli = JUMPCON_CLI_PATH;
    std::vector<std::string> commands;
    for (const auto& entry : std::filesystem::directory_iterator(JUMPCON_CORPUS_DIR)) {
        if (entry.path().extension() != ".json") continue;
        const std::string in = "--input " + process::quote(entry.path().string());
        for (const std::string sub : {"surface --check-closed-form", "singular", "cone", "poncelet"}) commands.push_back(sub + " " + in);
        commands.push_back("plane --plane 1,2,3,5 " + in);
        commands.push_back("--format text surface " + in);
    }
    for (const std::string args : {"random --k 3 --seed 7", "random --k 5 --seed 1 --avoid-rulings", "random --k 1 --seed 3"})
        commands.push_back(args);
    std::sort(commands.begin(), commands.end());
    REQUIRE(c, commands.size() > 6, "empty corpus");
    for (const auto& args : commands) {
        const auto first = process::run(cli, args);
        const auto second = process::run(cli, args);
        REQUIRE(c, first.exit_code >= 0 && !first.out.empty(), "no output from: jumpcon " + args);
        REQUIRE(c, first.exit_code == second.exit_code && first.out == second.out, "outputs differ: jumpcon " + args);
    }
    c.detail << (c.ok ? std::to_string(commands.size()) + " invocations" : "");
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"degree law", degree_law},
        {"determinantal and closed-form equivalence", closed_form_equivalence},
        {"symmetry of delta", symmetry},
        {"corank criterion", corank_criterion},
        {"incidence count", incidence_count},
        {"singular count", singular_count},
        {"k=2 structure", k2_structure},
        {"k=3 cone", k3_cone},
        {"Poncelet certificates", poncelet_certificates},
        {"locally free and Veronese rank", veronese},
        {"CLI determinism over the corpus", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail << "exception: " << e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        failures += result.ok ? 0 : 1;
        std::cout << (result.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " (" << ms << " ms)";
        const std::string detail = result.detail.str();
        if (!detail.empty()) std::cout << "  " << detail;
        std::cout << "\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
