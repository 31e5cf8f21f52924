#pragma once

// Rank-2 bundles E on Q given as extensions 0 → O_Q → E(1,1) → I_Z(1,1) → 0,
// encoded by the points of Z and the extension coefficients (c₁,…,c_k).
//
// The restriction map of E to the conic C_H is realized by the symmetric
// (k−1)×(k−1) matrix of linear forms
//
//     δ(y)_{ab} = Σᵢ cᵢ·wᵢ(y)·v_{a,i}·v_{b,i},   wᵢ(y) = ⟨y, segre(zᵢ)⟩,
//
// where {v_a} is a basis of c^⊥ = {a ∈ ℚᵏ : Σ cᵢaᵢ = 0}. Its corank at a plane H
// is h⁰(E|_{C_H}).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jumpcon/errors.hpp"
#include "jumpcon/form.hpp"
#include "jumpcon/matrix.hpp"
#include "jumpcon/quadric.hpp"
#include "jumpcon/rational.hpp"

namespace jumpcon {

class HulsbergenData {
public:
    HulsbergenData(std::vector<QuadricPoint> points, RatVector coeffs)
        : points_(std::move(points)), coeffs_(std::move(coeffs)) {
        if (points_.empty()) throw InputError("HulsbergenData: at least one point is required");
        if (points_.size() != coeffs_.size())
            throw InputError("HulsbergenData: " + std::to_string(points_.size()) + " points but " +
                             std::to_string(coeffs_.size()) + " coefficients");
        for (std::size_t i = 0; i < points_.size(); ++i)
            for (std::size_t j = i + 1; j < points_.size(); ++j)
                if (points_[i] == points_[j])
                    throw InputError("HulsbergenData: points " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1) + " coincide");
        if (is_zero(coeffs_)) throw InputError("HulsbergenData: extension coefficients are all zero");
    }

    /// c₂(E)
    std::size_t k() const noexcept { return points_.size(); }
    const std::vector<QuadricPoint>& points() const noexcept { return points_; }
    const RatVector& coeffs() const noexcept { return coeffs_; }

    bool locally_free() const {
        for (const auto& c : coeffs_)
            if (c == 0) return false;
        return true;
    }

private:
    std::vector<QuadricPoint> points_;
    RatVector coeffs_;
};

struct ValidationFlag {
    enum class Kind { collinear_pair, triple_coplanar_with, not_locally_free, all_on_plane };
    Kind kind;
    /// 1-based point indices. For triple_coplanar_with: the triple, then the extra point.
    std::vector<std::size_t> indices;

    std::string to_string() const {
        auto join = [](auto first, auto last) {
            std::string s;
            for (auto it = first; it != last; ++it) s += (s.empty() ? "" : ",") + std::to_string(*it);
            return s;
        };
        switch (kind) {
            case Kind::collinear_pair:
                return "collinear_pair(" + join(indices.begin(), indices.end()) + ")";
            case Kind::triple_coplanar_with:
                return "triple_coplanar_with(" + join(indices.begin(), indices.begin() + 3) + ";" +
                       std::to_string(indices[3]) + ")";
            case Kind::not_locally_free:
                return "not_locally_free(" + join(indices.begin(), indices.end()) + ")";
            case Kind::all_on_plane:
                return "all_on_plane";
        }
        return {};
    }

    friend bool operator==(const ValidationFlag&, const ValidationFlag&) = default;
};

struct ValidationReport {
    std::vector<ValidationFlag> flags;

    bool clean() const noexcept { return flags.empty(); }

    bool has(ValidationFlag::Kind kind) const {
        for (const auto& f : flags)
            if (f.kind == kind) return true;
        return false;
    }

    std::vector<std::string> strings() const {
        std::vector<std::string> out;
        for (const auto& f : flags) out.push_back(f.to_string());
        return out;
    }
};

/// Reports every departure from general position; never rejects.
inline ValidationReport validate(const HulsbergenData& d) {
    using Kind = ValidationFlag::Kind;
    ValidationReport report;
    const auto& z = d.points();
    const std::size_t k = d.k();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (same_ruling(z[i], z[j])) report.flags.push_back({Kind::collinear_pair, {i + 1, j + 1}});

    std::vector<RatVector> sigma;
    for (const auto& p : z) sigma.push_back(segre(p));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            for (std::size_t c = b + 1; c < k; ++c) {
                const auto ns = nullspace(RatMatrix::from_rows({sigma[a], sigma[b], sigma[c]}));
                if (ns.size() != 1) continue;  // a collinear triple; already flagged by its pairs
                for (std::size_t m = c + 1; m < k; ++m)
                    if (dot(ns[0], sigma[m]) == 0)
                        report.flags.push_back({Kind::triple_coplanar_with, {a + 1, b + 1, c + 1, m + 1}});
            }

    for (std::size_t i = 0; i < k; ++i)
        if (d.coeffs()[i] == 0) report.flags.push_back({Kind::not_locally_free, {i + 1}});

    if (k >= 4 && rank(RatMatrix::from_rows(sigma)) <= 3) report.flags.push_back({Kind::all_on_plane, {}});
    return report;
}

/// Basis of c^⊥ = {a : Σ cᵢaᵢ = 0}, one vector per index j other than the first
/// nonzero coefficient f, in ascending j. For cⱼ = 0 the vector is eⱼ; otherwise
/// it is cⱼ·e_p − c_p·eⱼ with p the last index before j carrying a nonzero
/// coefficient. Each vector's last nonzero entry sits at j, so the set is triangular.
inline std::vector<RatVector> kernel_basis(const RatVector& c) {
    if (is_zero(c)) throw InputError("kernel_basis: coefficients are all zero");
    const std::size_t k = c.size();
    std::size_t first = 0;
    while (c[first] == 0) ++first;
    std::vector<RatVector> basis;
    std::size_t prev = first;
    for (std::size_t j = 0; j < k; ++j) {
        if (j == first) continue;
        RatVector v(k);
        if (c[j] == 0) {
            v[j] = 1;
        } else {
            v[prev] = c[j];
            v[j] = -c[prev];
            prev = j;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// wᵢ(y) = ⟨y, segre(zᵢ)⟩: the plane-incidence form of a point of Q.
inline Form incidence_form(const QuadricPoint& z) { return Form::linear(segre(z)); }

/// δ built over an explicit basis of c^⊥ (any basis gives a congruent matrix).
inline LinearFormMatrix delta_symbolic(const HulsbergenData& d, const std::vector<RatVector>& basis) {
    const std::size_t k = d.k();
    const std::size_t n = basis.size();
    for (const auto& v : basis) {
        if (v.size() != k) throw DimensionError("delta_symbolic: basis vector has wrong length");
        if (dot(v, d.coeffs()) != 0) throw DomainError("delta_symbolic: basis vector is not orthogonal to c");
    }
    std::vector<Form> weighted;
    for (std::size_t i = 0; i < k; ++i) weighted.push_back(d.coeffs()[i] * incidence_form(d.points()[i]));

    LinearFormMatrix m(n, 4);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Form entry(4);
            for (std::size_t i = 0; i < k; ++i) {
                const Rational s = basis[a][i] * basis[b][i];
                if (s != 0) entry += s * weighted[i];
            }
            m.set(a, b, entry);
            if (a != b) m.set(b, a, entry);
        }
    return m;
}

inline LinearFormMatrix delta_symbolic(const HulsbergenData& d) { return delta_symbolic(d, kernel_basis(d.coeffs())); }

/// h⁰(E|_{C_H}) as the corank of δ evaluated at H. Pass δ itself when scanning many planes for one bundle.
inline std::size_t corank_at(const LinearFormMatrix& delta, const Plane& h) {
    const RatMatrix m = delta.eval(h.y);
    return m.rows() - rank(m);
}

inline std::size_t corank_at(const HulsbergenData& d, const Plane& h) { return corank_at(delta_symbolic(d), h); }

inline bool is_jumping(const HulsbergenData& d, const Plane& h) { return corank_at(d, h) > 0; }

/// Grothendieck splitting type (a₁, a₂), a₁ ≥ a₂, of E restricted to a smooth
/// conic section: (h⁰ − 1, −h⁰ − 1) when h⁰ > 0, (−1, −1) otherwise.
inline std::pair<int, int> splitting_type(const LinearFormMatrix& delta, const Plane& h) {
    if (is_tangent_plane(h)) throw DomainError("splitting_type: H is tangent to Q, the section is a line pair");
    const int h0 = static_cast<int>(corank_at(delta, h));
    if (h0 == 0) return {-1, -1};
    return {h0 - 1, -h0 - 1};
}

inline std::pair<int, int> splitting_type(const HulsbergenData& d, const Plane& h) {
    return splitting_type(delta_symbolic(d), h);
}

}  // namespace jumpcon
