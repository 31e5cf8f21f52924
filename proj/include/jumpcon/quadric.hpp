#pragma once

// Geometry of the Segre quadric Q = {x₀x₃ − x₁x₂ = 0} ⊂ P³ and of planes in P³*.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jumpcon/errors.hpp"
#include "jumpcon/matrix.hpp"
#include "jumpcon/rational.hpp"

namespace jumpcon {

/// A point of Q ≅ P¹×P¹. Both factors are stored with their first nonzero
/// coordinate scaled to 1, so equality is syntactic.
class QuadricPoint {
public:
    QuadricPoint(RatVector u, RatVector v) : u_(normalize(std::move(u))), v_(normalize(std::move(v))) {}

    const RatVector& u() const noexcept { return u_; }
    const RatVector& v() const noexcept { return v_; }

    friend bool operator==(const QuadricPoint&, const QuadricPoint&) = default;

    std::string to_string() const {
        return "([" + jumpcon::to_string(u_[0]) + ":" + jumpcon::to_string(u_[1]) + "],[" + jumpcon::to_string(v_[0]) +
               ":" + jumpcon::to_string(v_[1]) + "])";
    }

private:
    static RatVector normalize(RatVector w) {
        if (w.size() != 2) throw DimensionError("QuadricPoint: each factor needs two coordinates");
        if (w[0] == 0 && w[1] == 0) throw InputError("QuadricPoint: factor coordinates are both zero");
        const Rational lead = w[0] != 0 ? w[0] : w[1];
        for (auto& x : w) x /= lead;
        return w;
    }

    RatVector u_;
    RatVector v_;
};

/// A plane of P³, i.e. a point y of the dual space P³*. Compared up to scalar.
struct Plane {
    RatVector y;

    explicit Plane(RatVector coords) : y(std::move(coords)) {
        if (y.size() != 4) throw DimensionError("Plane: four coordinates required");
        if (is_zero(y)) throw InputError("Plane: all coordinates are zero");
    }

    friend bool operator==(const Plane& a, const Plane& b) { return projectively_equal(a.y, b.y); }
};

/// A plane inside P³* given by three independent spanning vectors; the basis
/// fixes plane coordinates (α₁,α₂,α₃) ↦ Σ αₐ·basisₐ.
struct EmbeddedPlane {
    std::array<RatVector, 3> basis;
    std::string id;

    EmbeddedPlane(std::array<RatVector, 3> b, std::string frame_id = {}) : basis(std::move(b)), id(std::move(frame_id)) {
        for (const auto& v : basis)
            if (v.size() != 4) throw DimensionError("EmbeddedPlane: basis vectors must have length 4");
        if (rank(RatMatrix::from_rows({basis[0], basis[1], basis[2]})) != 3)
            throw DegenerateError("EmbeddedPlane: basis does not have rank 3");
    }

    RatVector point(const RatVector& alpha) const {
        if (alpha.size() != 3) throw DimensionError("EmbeddedPlane::point: three coordinates required");
        RatVector y(4);
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t i = 0; i < 4; ++i) y[i] += alpha[a] * basis[a][i];
        return y;
    }

    friend bool operator==(const EmbeddedPlane& a, const EmbeddedPlane& b) { return a.basis == b.basis; }
};

inline RatVector segre(const QuadricPoint& p) {
    const auto& u = p.u();
    const auto& v = p.v();
    return {u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]};
}

/// Value of x₀x₃ − x₁x₂; zero iff x lies on Q.
inline Rational quadric_value(const RatVector& x) {
    if (x.size() != 4) throw DimensionError("quadric_value: 4-vector required");
    return x[0] * x[3] - x[1] * x[2];
}

/// Inverse of the Segre map on points of Q.
inline QuadricPoint point_from_segre(const RatVector& x) {
    if (x.size() != 4 || is_zero(x)) throw DomainError("point_from_segre: nonzero 4-vector required");
    if (quadric_value(x) != 0) throw DomainError("point_from_segre: point is not on the quadric");
    RatVector u = (x[0] != 0 || x[2] != 0) ? RatVector{x[0], x[2]} : RatVector{x[1], x[3]};
    RatVector v = (x[0] != 0 || x[1] != 0) ? RatVector{x[0], x[1]} : RatVector{x[2], x[3]};
    return {std::move(u), std::move(v)};
}

/// Symmetric Gram matrix of x₀x₃ − x₁x₂.
inline RatMatrix quadric_gram() {
    const Rational h(1, 2);
    return {{0, 0, 0, h}, {0, 0, -h, 0}, {0, -h, 0, 0}, {h, 0, 0, 0}};
}

/// ⟨y, segre(p)⟩; zero iff p ∈ H.
inline Rational plane_eval(const Plane& h, const QuadricPoint& p) { return dot(h.y, segre(p)); }

/// The gradient of x₀x₃ − x₁x₂: sends x to its polar plane. Involutive.
inline RatVector polar_map(const RatVector& x) {
    if (x.size() != 4) throw DimensionError("polar_map: 4-vector required");
    if (is_zero(x)) throw DomainError("polar_map: zero vector");
    return {x[3], -x[2], -x[1], x[0]};
}

/// Echelon basis of the 3-dimensional subspace {x : ⟨y, x⟩ = 0}.
inline std::array<RatVector, 3> plane_basis(const Plane& h) {
    auto ns = nullspace(RatMatrix::from_rows({h.y}));
    return {ns[0], ns[1], ns[2]};
}

/// Gram matrix of x₀x₃ − x₁x₂ restricted to the echelon basis of H.
inline RatMatrix restricted_gram(const Plane& h) {
    const auto b = plane_basis(h);
    const RatMatrix basis = RatMatrix::from_columns({b[0], b[1], b[2]});
    return basis.transpose() * quadric_gram() * basis;
}

/// H ∈ Q*, i.e. H is tangent to Q; equivalently y₀y₃ − y₁y₂ = 0.
inline bool is_tangent_plane(const Plane& h) { return h.y[0] * h.y[3] - h.y[1] * h.y[2] == 0; }

struct ConicSection {
    enum class Kind { smooth, line_pair };
    Kind kind;
    /// The tangency point l₁ ∩ l₂ when kind = line_pair.
    std::optional<QuadricPoint> vertex;
};

inline ConicSection conic_section(const Plane& h) {
    const RatMatrix g = restricted_gram(h);
    const auto ker = nullspace(g);
    if (ker.empty()) return {ConicSection::Kind::smooth, std::nullopt};
    if (ker.size() != 1) throw InvariantError("conic_section: plane section of Q has rank below 2");
    const auto b = plane_basis(h);
    RatVector x(4);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t i = 0; i < 4; ++i) x[i] += ker[0][a] * b[a][i];
    return {ConicSection::Kind::line_pair, point_from_segre(x)};
}

/// The unique plane through three points of Q with independent Segre vectors.
inline Plane plane_through(const QuadricPoint& z1, const QuadricPoint& z2, const QuadricPoint& z3) {
    const auto ns = nullspace(RatMatrix::from_rows({segre(z1), segre(z2), segre(z3)}));
    if (ns.size() != 1)
        throw DegenerateError("plane_through: points " + z1.to_string() + ", " + z2.to_string() + ", " +
                              z3.to_string() + " do not span a plane");
    return Plane(primitive_vector(ns[0]));
}

/// True iff the two points lie on a common line of Q.
inline bool same_ruling(const QuadricPoint& a, const QuadricPoint& b) { return a.u() == b.u() || a.v() == b.v(); }

inline std::string plane_id(const Plane& h) {
    std::string s;
    for (const auto& c : primitive_vector(h.y)) s += (s.empty() ? "" : ",") + to_string(c);
    return s;
}

/// The polar image f_Q(H) ⊂ P³* with basis (J·h₁, J·h₂, J·h₃) over the echelon basis of H.
/// In this frame the dual conic of Q ∩ H has the Gram matrix restricted_gram(H).
inline EmbeddedPlane polar_frame(const Plane& h) {
    const auto b = plane_basis(h);
    return EmbeddedPlane({polar_map(b[0]), polar_map(b[1]), polar_map(b[2])}, "polar:" + plane_id(h));
}

/// Central projection from `center` onto the plane P: coordinates α of the
/// point where the line through y and the center meets P.
inline RatVector project_to_plane(const EmbeddedPlane& p, const RatVector& center, const RatVector& y) {
    if (center.size() != 4 || y.size() != 4) throw DimensionError("project_to_plane: 4-vectors required");
    const RatMatrix system = RatMatrix::from_columns({p.basis[0], p.basis[1], p.basis[2], center});
    const auto sol = solve(system, y);
    if (!sol) throw DomainError("project_to_plane: the center lies on the target plane");
    RatVector alpha{(*sol)[0], (*sol)[1], (*sol)[2]};
    if (is_zero(alpha)) throw DomainError("project_to_plane: point coincides with the center");
    return alpha;
}

}  // namespace jumpcon
