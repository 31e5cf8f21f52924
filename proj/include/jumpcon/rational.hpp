#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jumpcon/errors.hpp"

namespace jumpcon {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;
using RatVector = std::vector<Rational>;

/// "p/q", or "p" when q = 1. ASCII minus sign.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

/// Accepts "p", "p/q", with an optional leading '+', '-' or U+2212.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    const std::string unicode_minus = "\xE2\x88\x92";
    bool negative = false;
    if (s.rfind(unicode_minus, 0) == 0) {
        negative = true;
        s.erase(0, unicode_minus.size());
    } else if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    const auto bad = [&] { return InputError("malformed rational \"" + std::string(text) + "\""); };
    if (s.empty()) throw bad();
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    const auto all_digits = [](const std::string& part) {
        if (part.empty()) return false;
        for (char c : part)
            if (c < '0' || c > '9') return false;
        return true;
    };
    if (!all_digits(num) || !all_digits(den)) throw bad();
    Integer n(num, 10);
    Integer d(den, 10);
    if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    Rational r(n, d);
    r.canonicalize();
    if (negative) r = -r;
    return r;
}

inline bool is_zero(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// True iff a = λ·b for some nonzero λ; two zero vectors count as proportional.
inline bool projectively_equal(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) return false;
    if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

/// Scales a nonzero vector to coprime integers with positive first nonzero entry.
inline RatVector primitive_vector(const RatVector& v) {
    if (is_zero(v)) return v;
    Integer den = 1, num = 0;
    for (const auto& x : v) {
        if (x == 0) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.get_num_mpz_t());
    }
    Rational scale(den, num);
    scale.canonicalize();
    for (const auto& x : v)
        if (x != 0) {
            if (x < 0) scale = -scale;
            break;
        }
    RatVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x * scale);
    return out;
}

inline RatVector cross(const RatVector& a, const RatVector& b) {
    if (a.size() != 3 || b.size() != 3) throw DimensionError("cross: 3-vectors required");
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

}  // namespace jumpcon
