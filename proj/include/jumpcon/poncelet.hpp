#pragma once

// Plane conics attached to E ∈ M(3): the projected cone C(E), the dual conic
// C_H* of Q ∩ H, the triangle cut out by the dual lines of Z, and closure
// certificates for the Poncelet triangle C(E) / C_H*.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "jumpcon/errors.hpp"
#include "jumpcon/jump_surface.hpp"
#include "jumpcon/matrix.hpp"
#include "jumpcon/quadric.hpp"
#include "jumpcon/rational.hpp"

namespace jumpcon {

/// A conic in the coordinates of an embedded plane; scalar multiples are the same conic.
struct PlaneConic {
    RatMatrix gram;
    EmbeddedPlane frame;

    PlaneConic(RatMatrix g, EmbeddedPlane f) : gram(std::move(g)), frame(std::move(f)) {
        if (gram.rows() != 3 || gram.cols() != 3) throw DimensionError("PlaneConic: 3x3 Gram matrix required");
        if (!gram.is_symmetric()) throw InvariantError("PlaneConic: Gram matrix is not symmetric");
    }

    bool smooth() const { return rank(gram) == 3; }
};

namespace detail {

inline void require_same_frame(const PlaneConic& a, const PlaneConic& b) {
    if (!(a.frame == b.frame)) throw InvariantError("conics live in different frames (" + a.frame.id + " vs " + b.frame.id + ")");
}

inline RatMatrix symmetric_product(const RatVector& l, const RatVector& m) {
    RatMatrix g(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) g(i, j) = (l[i] * m[j] + m[i] * l[j]) / 2;
    return g;
}

}  // namespace detail

/// C(E) = π_q(S(E)): restriction of the cone's quadric to the plane P, which
/// agrees with projection from the vertex because the cone is constant along
/// lines through it.
inline PlaneConic project_cone(const ConeData& cone, const EmbeddedPlane& p) {
    if (cone.rank != 3 || !cone.vertex) throw DegenerateError("project_cone: cone must have rank 3");
    const RatMatrix span = RatMatrix::from_rows({p.basis[0], p.basis[1], p.basis[2], cone.vertex->y});
    if (rank(span) != 4) throw DomainError("project_cone: the target plane contains the vertex q_E");
    RatMatrix g(3, 3);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) g(a, b) = bilinear(p.basis[a], cone.gram, p.basis[b]);
    return {std::move(g), p};
}

/// C_H* in the frame polar_frame(H).
inline PlaneConic dual_conic(const Plane& h) {
    if (is_tangent_plane(h)) throw DegenerateError("dual_conic: H is tangent to Q, its dual conic degenerates");
    return {restricted_gram(h), polar_frame(h)};
}

/// Line coordinates of z* ⊂ P: the points of P whose planes contain z.
inline RatVector dual_line(const QuadricPoint& z, const EmbeddedPlane& p) {
    const RatVector s = segre(z);
    RatVector l{dot(p.basis[0], s), dot(p.basis[1], s), dot(p.basis[2], s)};
    if (is_zero(l)) throw DegenerateError("dual_line: every point of the frame is incident to " + z.to_string());
    return l;
}

/// Pairwise intersections (p₁₂, p₁₃, p₂₃) of three lines, sign-normalized.
inline std::array<RatVector, 3> triangle_vertices(const std::array<RatVector, 3>& lines) {
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    std::array<RatVector, 3> out;
    for (std::size_t i = 0; i < 3; ++i) {
        const RatVector p = cross(lines[pairs[i].first], lines[pairs[i].second]);
        if (is_zero(p))
            throw DegenerateError("triangle_vertices: lines " + std::to_string(pairs[i].first + 1) + " and " +
                                  std::to_string(pairs[i].second + 1) + " coincide");
        out[i] = primitive_vector(p);
    }
    return out;
}

/// ℓ is tangent to a smooth conic iff ℓᵀ·adj(G)·ℓ = 0.
inline bool tangency_check(const RatVector& line, const PlaneConic& c) {
    if (!c.smooth()) throw DomainError("tangency_check: conic is singular");
    return bilinear(line, adjugate(c.gram), line) == 0;
}

inline bool incident(const RatVector& point, const PlaneConic& c) { return bilinear(point, c.gram, point) == 0; }

/// Coefficients (f₃, f₂, f₁, f₀) of det(t·outer + inner).
inline std::array<Rational, 4> pencil_cubic(const PlaneConic& outer, const PlaneConic& inner) {
    detail::require_same_frame(outer, inner);
    const RatMatrix& a = outer.gram;
    const RatMatrix& b = inner.gram;
    auto trace = [](const RatMatrix& m) -> Rational { return m(0, 0) + m(1, 1) + m(2, 2); };
    return {det_exact(a), trace(adjugate(a) * b), trace(adjugate(b) * a), det_exact(b)};
}

/// f₁² − 4·f₀·f₂ for det(t·outer + inner) = f₃t³ + f₂t² + f₁t + f₀. It is the
/// t² coefficient of √det(t·outer + inner) up to the factor −1/(8·f₀^{3/2}),
/// so zero certifies a triangle inscribed in outer and circumscribed about inner.
inline Rational cayley_triangle_invariant(const PlaneConic& outer, const PlaneConic& inner) {
    if (!inner.smooth()) throw DomainError("cayley_triangle_invariant: inner conic is singular");
    const auto f = pencil_cubic(outer, inner);
    return f[2] * f[2] - 4 * f[3] * f[1];
}

/// Elementary symmetric functions (e₁, e₂, e₃) of inner⁻¹·outer, read off
/// det(A − t·I) = (−t)³ + e₁(−t)² + e₂(−t) + e₃.
inline std::array<Rational, 3> pencil_elementary(const PlaneConic& outer, const PlaneConic& inner) {
    detail::require_same_frame(outer, inner);
    const auto inv = inverse(inner.gram);
    if (!inv) throw DomainError("darboux_charpoly_invariant: inner conic is singular");
    const RatVector cp = char_poly(*inv * outer.gram);
    return {cp[1], Rational(-cp[2]), cp[3]};
}

/// e₂² − e₁·e₃, the literal char-poly condition, reported next to the Cayley invariant.
inline Rational darboux_charpoly_invariant(const PlaneConic& outer, const PlaneConic& inner) {
    const auto e = pencil_elementary(outer, inner);
    return e[1] * e[1] - e[0] * e[2];
}

/// Rank of the Gram matrix; rank ≤ 2 means the conic lies on the secant cubic V₃.
inline std::size_t veronese_rank(const PlaneConic& c) { return rank(c.gram); }

/// The conic c₁Z₂Z₃ + c₂Z₁Z₃ + c₃Z₁Z₂ for line forms Zᵢ in the given frame.
inline PlaneConic embed_extension(const std::array<Rational, 3>& coeffs, const std::array<RatVector, 3>& lines,
                                  const EmbeddedPlane& frame) {
    for (const auto& l : lines)
        if (l.size() != 3) throw DimensionError("embed_extension: line coordinates must have length 3");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (is_zero(cross(lines[i], lines[j])))
                throw DegenerateError("embed_extension: lines " + std::to_string(i + 1) + " and " +
                                      std::to_string(j + 1) + " are dependent");
    RatMatrix g(3, 3);
    g = g + coeffs[0] * detail::symmetric_product(lines[1], lines[2]);
    g = g + coeffs[1] * detail::symmetric_product(lines[0], lines[2]);
    g = g + coeffs[2] * detail::symmetric_product(lines[0], lines[1]);
    return {std::move(g), frame};
}

enum class ClosureStatus { closed, open, inconclusive };

inline std::string to_string(ClosureStatus s) {
    switch (s) {
        case ClosureStatus::closed:
            return "true";
        case ClosureStatus::open:
            return "false";
        case ClosureStatus::inconclusive:
            return "inconclusive";
    }
    return {};
}

namespace detail {

using Real = long double;
using RVec = std::array<Real, 3>;
using RMat = std::array<RVec, 3>;

inline RMat to_real(const RatMatrix& m) {
    RMat r{};
    Real scale = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            r[i][j] = static_cast<Real>(m(i, j).get_d());
            scale = std::max(scale, std::fabs(r[i][j]));
        }
    if (scale > 0)
        for (auto& row : r)
            for (auto& x : row) x /= scale;
    return r;
}

inline Real form(const RVec& a, const RMat& m, const RVec& b) {
    Real s = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s += a[i] * m[i][j] * b[j];
    return s;
}

inline RVec rcross(const RVec& a, const RVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Real rnorm(const RVec& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

inline RVec unit(const RVec& a) {
    const Real n = rnorm(a);
    return {a[0] / n, a[1] / n, a[2] / n};
}

inline RVec combine(Real s, const RVec& a, Real t, const RVec& b) {
    return {s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]};
}

/// Relative discriminant below which a tangent pair or a chord counts as
/// numerically degenerate and the start point is discarded.
inline constexpr Real kConditioning = 1e-8L;

/// The two tangents from the point p to the conic with dual Gram `dual`, or
/// nullopt when they are non-real or nearly coincide.
inline std::optional<std::array<RVec, 2>> tangents_from(const RVec& p, const RMat& dual) {
    RVec helper{1, 0, 0};
    if (std::fabs(p[0]) > std::fabs(p[1]) && std::fabs(p[0]) > std::fabs(p[2])) helper = {0, 1, 0};
    const RVec a = unit(rcross(p, helper));
    const RVec b = unit(rcross(p, a));
    const Real alpha = form(a, dual, a), beta = form(a, dual, b), gamma = form(b, dual, b);
    const Real disc = beta * beta - alpha * gamma;
    const Real mag = std::fabs(alpha) + std::fabs(beta) + std::fabs(gamma);
    if (mag == 0 || disc < kConditioning * mag * mag) return std::nullopt;
    const Real root = std::sqrt(disc);
    if (std::fabs(alpha) >= std::fabs(gamma)) {
        return std::array<RVec, 2>{unit(combine((-beta + root) / alpha, a, 1, b)),
                                   unit(combine((-beta - root) / alpha, a, 1, b))};
    }
    return std::array<RVec, 2>{unit(combine(1, a, (-beta + root) / gamma, b)),
                               unit(combine(1, a, (-beta - root) / gamma, b))};
}

/// Second intersection of the line ℓ through p (p on the conic) with the conic.
inline std::optional<RVec> second_intersection(const RVec& p, const RVec& line, const RMat& conic) {
    const RVec d = unit(rcross(line, p));
    const Real pd = form(p, conic, d), dd = form(d, conic, d);
    const Real mag = std::fabs(pd) + std::fabs(dd);
    if (mag == 0 || std::fabs(pd) < kConditioning * mag) return std::nullopt;  // ℓ tangent to the conic at p
    return unit(combine(dd, p, -2 * pd, d));
}

}  // namespace detail

/// Tangent-chord iteration: from each sampled real point of `outer`, follow a
/// tangent to `inner`, cross to `outer`, and repeat three times. Closed iff
/// every usable orbit returns to its start within `tol` (sine of the angle
/// between the representing unit vectors). Inconclusive when no sampled start
/// has real, well-separated tangents.
inline ClosureStatus closure_oracle_numeric(const PlaneConic& outer, const PlaneConic& inner, int starts = 32,
                                            double tol = 1e-9) {
    using namespace detail;
    require_same_frame(outer, inner);
    if (!outer.smooth() || !inner.smooth()) throw DomainError("closure_oracle_numeric: conics must be smooth");
    const RMat a = to_real(outer.gram);
    const RMat dual = to_real(adjugate(inner.gram));

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    auto random_vec = [&] { return RVec{coord(rng), coord(rng), coord(rng)}; };

    int usable = 0;
    for (int attempt = 0; attempt < 200 * starts && usable < starts; ++attempt) {
        // a random real line meets the outer conic in a real point when its discriminant is nonnegative
        const RVec x = random_vec(), y = random_vec();
        const Real qa = form(y, a, y), qb = form(x, a, y), qc = form(x, a, x);
        const Real disc = qb * qb - qa * qc;
        if (disc < 0 || qa == 0) continue;
        const RVec p0 = unit(combine(1, x, (-qb + std::sqrt(disc)) / qa, y));

        auto first = tangents_from(p0, dual);
        if (!first) continue;
        RVec p = p0;
        RVec incoming = (*first)[0];
        bool ok = true;
        for (int step = 0; step < 3 && ok; ++step) {
            RVec line = incoming;
            if (step > 0) {
                const auto t = tangents_from(p, dual);
                if (!t) {
                    ok = false;
                    break;
                }
                // take the tangent that is not the one we arrived along
                line = rnorm(rcross((*t)[0], incoming)) > rnorm(rcross((*t)[1], incoming)) ? (*t)[0] : (*t)[1];
            }
            const auto next = second_intersection(p, line, a);
            if (!next) {
                ok = false;
                break;
            }
            p = *next;
            incoming = line;
        }
        if (!ok) continue;
        ++usable;
        if (rnorm(rcross(p, p0)) > static_cast<Real>(tol)) return ClosureStatus::open;
    }
    return usable == 0 ? ClosureStatus::inconclusive : ClosureStatus::closed;
}

}  // namespace jumpcon
