#pragma once

// The jumping-conic hypersurface S(E) ⊂ P³* of a Hulsbergen bundle: its
// equation det δ, the closed form Σᵢ cᵢ·Π_{j≠i} w_j, singular points at planes
// through triples of Z, the dual point for k = 2 and the quadric cone for k = 3.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jumpcon/errors.hpp"
#include "jumpcon/form.hpp"
#include "jumpcon/hulsbergen.hpp"
#include "jumpcon/matrix.hpp"
#include "jumpcon/quadric.hpp"
#include "jumpcon/rational.hpp"

namespace jumpcon {

struct JumpingSurface {
    /// Primitive-normalized equation in y₀..y₃; the constant 1 when k = 1.
    Form equation;
    unsigned degree;
    HulsbergenData source;

    bool contains(const Plane& h) const { return equation.eval(h.y) == 0; }
};

inline JumpingSurface jumping_polynomial(const HulsbergenData& d) {
    const Form det = sym_det(delta_symbolic(d));
    if (det.is_zero()) {
        const auto flags = validate(d).strings();
        throw DegenerateError("jumping_polynomial: det δ vanishes identically", flags);
    }
    const auto degree = static_cast<unsigned>(d.k() - 1);
    if (det.degree() != degree) throw InvariantError("jumping_polynomial: det δ has unexpected degree");
    return {primitive_normalize(det), degree, d};
}

/// Σᵢ cᵢ·Π_{j≠i} w_j, primitive-normalized. Equals det δ up to the factor
/// λ²·Πcᵢ (Cauchy–Binet on δ = Vᵀ·diag(cᵢwᵢ)·V), so it is computed without δ.
inline Form closed_form(const HulsbergenData& d) {
    const std::size_t k = d.k();
    std::vector<Form> w;
    for (const auto& z : d.points()) w.push_back(incidence_form(z));
    Form total(4);
    for (std::size_t i = 0; i < k; ++i) {
        if (d.coeffs()[i] == 0) continue;
        Form term = Form::constant(4, d.coeffs()[i]);
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) term = term * w[j];
        total += term;
    }
    return primitive_normalize(total);
}

/// True iff every partial derivative of the equation vanishes at H.
inline bool is_singular_at(const JumpingSurface& s, const Plane& h) {
    if (!s.contains(h)) throw DomainError("is_singular_at: plane is not a point of S(E)");
    for (const auto& g : gradient(s.equation))
        if (g.eval(h.y) != 0) return false;
    return true;
}

struct TriplePlane {
    std::array<std::size_t, 3> triple;  // 1-based point indices
    Plane plane;
    bool singular;
};

/// The C(k,3) planes spanned by triples of Z, in lexicographic triple order,
/// each tested for singularity of S(E).
inline std::vector<TriplePlane> triple_plane_singularities(const HulsbergenData& d) {
    const std::size_t k = d.k();
    if (k < 3) throw DegenerateError("triple_plane_singularities: requires k >= 3");
    const JumpingSurface s = jumping_polynomial(d);
    const auto& z = d.points();
    std::vector<TriplePlane> out;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            for (std::size_t c = b + 1; c < k; ++c) {
                Plane h = plane_through(z[a], z[b], z[c]);
                const bool singular = is_singular_at(s, h);
                out.push_back({{a + 1, b + 1, c + 1}, std::move(h), singular});
            }
    return out;
}

struct DualPoint {
    RatVector point;
    bool on_quadric;
};

/// For k = 2, S(E) is the plane {H : ⟨H, p⟩ = 0} with p = c₂·segre(z₁) + c₁·segre(z₂),
/// a point on the secant line of Z. p ∈ Q exactly when some cᵢ = 0.
inline DualPoint dual_point(const HulsbergenData& d) {
    if (d.k() != 2) throw DomainError("dual_point: requires k = 2");
    const RatVector s1 = segre(d.points()[0]);
    const RatVector s2 = segre(d.points()[1]);
    RatVector p(4);
    for (std::size_t i = 0; i < 4; ++i) p[i] = d.coeffs()[1] * s1[i] + d.coeffs()[0] * s2[i];
    const bool on_q = quadric_value(p) == 0;
    return {std::move(p), on_q};
}

struct ConeData {
    RatMatrix gram;  // yᵀ·gram·y = equation
    std::size_t rank;
    std::optional<Plane> vertex;  // kernel generator when rank = 3
};

/// Gram matrix and rank of a quadratic jumping surface, with the vertex when
/// the rank is 3. Does not judge degeneracy.
inline ConeData cone_gram(const JumpingSurface& s) {
    if (s.degree != 2) throw DomainError("cone_gram: surface is not a quadric");
    ConeData c{quadratic_gram(s.equation), 0, std::nullopt};
    c.rank = rank(c.gram);
    if (c.rank == 3) c.vertex = Plane(primitive_vector(nullspace(c.gram).front()));
    return c;
}

/// For E ∈ M(3): S(E) is a quadric cone whose vertex is the plane spanned by Z.
/// A pair of points on a common ruling makes E strictly semi-stable, and such
/// data is rejected before the cone is examined.
inline ConeData cone_data(const HulsbergenData& d) {
    if (d.k() != 3) throw DomainError("cone_data: requires k = 3");
    const ValidationReport report = validate(d);
    if (report.has(ValidationFlag::Kind::collinear_pair))
        throw DegenerateError("cone_data: two points of Z lie on a line of Q, E is strictly semi-stable",
                              report.strings());
    ConeData c = cone_gram(jumping_polynomial(d));
    if (c.rank != 3)
        throw DegenerateError("cone_data: S(E) has rank " + std::to_string(c.rank) + ", not a cone with a vertex point",
                              report.strings());
    const Plane span = plane_through(d.points()[0], d.points()[1], d.points()[2]);
    if (!(*c.vertex == span)) throw InvariantError("cone_data: vertex differs from the plane through Z");
    return c;
}

}  // namespace jumpcon
