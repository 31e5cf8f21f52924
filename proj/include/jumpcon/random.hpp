#pragma once

// Deterministic pseudorandom instances with small-height rational coordinates.
// Only raw engine output is used (no std distributions), so the stream is the
// same on every standard library.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "jumpcon/errors.hpp"
#include "jumpcon/hulsbergen.hpp"
#include "jumpcon/quadric.hpp"
#include "jumpcon/rational.hpp"

namespace jumpcon {

class SmallRationals {
public:
    explicit SmallRationals(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    long integer(long lo, long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    /// p/q with |p| ≤ height, 1 ≤ q ≤ max_den.
    Rational rational(long height, long max_den) {
        const long num = integer(-height, height);
        const long den = integer(1, max_den);
        Rational r{Integer(num), Integer(den)};
        r.canonicalize();
        return r;
    }

    Rational nonzero(long height, long max_den) {
        for (;;) {
            Rational r = rational(height, max_den);
            if (r != 0) return r;
        }
    }

    /// [1 : r] most of the time, [0 : 1] occasionally.
    RatVector projective_line_point() {
        if (integer(0, 9) == 0) return {0, 1};
        return {1, rational(4, 3)};
    }

    QuadricPoint quadric_point() { return {projective_line_point(), projective_line_point()}; }

    /// A random vector in ℚ⁴ with small integer entries, nonzero.
    RatVector vector4(long height = 6) {
        for (;;) {
            RatVector v{integer(-height, height), integer(-height, height), integer(-height, height),
                        integer(-height, height)};
            if (!is_zero(v)) return v;
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Distinct points, nonzero coefficients. With avoid_rulings the draw is
/// repeated until validate() reports no flags at all.
inline HulsbergenData random_instance(std::size_t k, std::uint64_t seed, bool avoid_rulings) {
    if (k < 1) throw InputError("random_instance: k must be at least 1");
    SmallRationals gen(seed);
    for (;;) {
        std::vector<QuadricPoint> points;
        while (points.size() < k) {
            QuadricPoint p = gen.quadric_point();
            bool fresh = true;
            for (const auto& q : points) fresh = fresh && !(q == p);
            if (fresh) points.push_back(std::move(p));
        }
        RatVector coeffs;
        for (std::size_t i = 0; i < k; ++i) coeffs.push_back(gen.nonzero(5, 2));
        HulsbergenData d(std::move(points), std::move(coeffs));
        if (!avoid_rulings || validate(d).clean()) return d;
    }
}

}  // namespace jumpcon
