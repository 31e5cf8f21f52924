#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "jumpcon/hulsbergen.hpp"
#include "jumpcon/quadric.hpp"
#include "jumpcon/random.hpp"
#include "jumpcon/rational.hpp"

namespace fixtures {

using jumpcon::HulsbergenData;
using jumpcon::QuadricPoint;
using jumpcon::RatVector;
using jumpcon::Rational;

inline QuadricPoint pt(Rational u0, Rational u1, Rational v0, Rational v1) { return {{u0, u1}, {v0, v1}}; }

/// Segre vectors (1,0,0,0), (0,0,0,1), (1,1,1,1); all three on the plane x₁ = x₂.
inline std::vector<QuadricPoint> t1_points() { return {pt(1, 0, 1, 0), pt(0, 1, 0, 1), pt(1, 1, 1, 1)}; }

inline HulsbergenData t1() { return {t1_points(), {1, 1, 1}}; }

/// The k = 2 regression instance: first two T1 points, c = (2,3).
inline HulsbergenData k2_instance(Rational c1 = 2, Rational c2 = 3) {
    return {{pt(1, 0, 1, 0), pt(0, 1, 0, 1)}, {c1, c2}};
}

inline jumpcon::Plane plane(Rational a, Rational b, Rational c, Rational d) { return jumpcon::Plane({a, b, c, d}); }

/// A plane through the Segre images of the chosen points of d, completed by
/// random points of P³ until the span has rank 3. Returns nullopt if the
/// chosen points alone already span more than a plane.
inline std::optional<jumpcon::Plane> plane_through_points(const HulsbergenData& d, const std::vector<std::size_t>& idx,
                                                          jumpcon::SmallRationals& gen) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<RatVector> rows;
        for (auto i : idx) rows.push_back(jumpcon::segre(d.points()[i]));
        while (rows.size() < 3) rows.push_back(gen.vector4());
        const auto ns = jumpcon::nullspace(jumpcon::RatMatrix::from_rows(rows));
        if (ns.size() == 1) return jumpcon::Plane(jumpcon::primitive_vector(ns[0]));
        if (idx.size() >= 3) return std::nullopt;
    }
    return std::nullopt;
}

/// Number of points of Z on the plane.
inline std::size_t incidences(const HulsbergenData& d, const jumpcon::Plane& h) {
    std::size_t n = 0;
    for (const auto& z : d.points()) n += jumpcon::plane_eval(h, z) == 0 ? 1 : 0;
    return n;
}

}  // namespace fixtures
