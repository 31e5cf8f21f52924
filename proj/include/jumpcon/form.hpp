#pragma once

// Sparse homogeneous polynomials over ℚ and symmetric matrices of linear forms.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jumpcon/errors.hpp"
#include "jumpcon/matrix.hpp"
#include "jumpcon/rational.hpp"

namespace jumpcon {

using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0U); }

/// Strict "a comes before b" in degree-lexicographic descending order.
struct DeglexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
    }
};

class Form {
public:
    using Terms = std::map<Exponent, Rational, DeglexDescending>;

    explicit Form(std::size_t nvars = 4) : nvars_(nvars) {}

    static Form constant(std::size_t nvars, const Rational& c) {
        Form f(nvars);
        f.add_term(Exponent(nvars, 0), c);
        return f;
    }

    static Form variable(std::size_t nvars, std::size_t i) {
        if (i >= nvars) throw DimensionError("Form::variable: index out of range");
        Exponent e(nvars, 0);
        e[i] = 1;
        Form f(nvars);
        f.add_term(e, 1);
        return f;
    }

    /// Σ coeffs[i]·yᵢ
    static Form linear(const RatVector& coeffs) {
        Form f(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            Exponent e(coeffs.size(), 0);
            e[i] = 1;
            f.add_term(e, coeffs[i]);
        }
        return f;
    }

    /// Adds c·y^e. Rejects terms of a different degree than those already stored.
    void add_term(const Exponent& e, const Rational& c) {
        if (e.size() != nvars_) throw ArityError("Form: exponent length does not match variable count");
        if (c == 0) return;
        if (!terms_.empty() && total_degree(e) != total_degree(terms_.begin()->first))
            throw DomainError("Form: term breaks homogeneity");
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::size_t nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    unsigned degree() const {
        if (is_zero()) throw DomainError("Form::degree: the zero form has no degree");
        return total_degree(terms_.begin()->first);
    }

    Rational coeff(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Leading term in deglex order. Requires a nonzero form.
    const Terms::value_type& leading() const {
        if (is_zero()) throw DomainError("Form::leading: zero form");
        return *terms_.begin();
    }

    Rational eval(const RatVector& point) const {
        if (point.size() != nvars_) throw DimensionError("Form::eval: point length does not match variable count");
        Rational total = 0;
        const bool integral = std::all_of(point.begin(), point.end(), [](const Rational& x) { return x.get_den() == 1; });
        if (integral) {
            Integer mono;
            for (const auto& [e, c] : terms_) {
                mono = 1;
                for (std::size_t i = 0; i < nvars_; ++i)
                    for (unsigned p = 0; p < e[i]; ++p) mono *= point[i].get_num();
                total += c * Rational(mono);
            }
            return total;
        }
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < nvars_ && t != 0; ++i)
                for (unsigned p = 0; p < e[i]; ++p) t *= point[i];
            total += t;
        }
        return total;
    }

    Form partial(std::size_t var) const {
        if (var >= nvars_) throw DimensionError("Form::partial: variable index out of range");
        Form d(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponent de = e;
            --de[var];
            d.add_term(de, c * static_cast<unsigned long>(e[var]));
        }
        return d;
    }

    Form& operator+=(const Form& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Form& operator-=(const Form& o) {
        check_arity(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Form& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(Form a) { return a *= Rational(-1); }
    friend Form operator*(Form a, const Rational& s) { return a *= s; }
    friend Form operator*(const Rational& s, Form a) { return a *= s; }

    friend Form operator*(const Form& a, const Form& b) {
        a.check_arity(b);
        Form out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e(a.nvars_);
                for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend bool operator==(const Form& a, const Form& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    /// Human-readable rendering such as "y0^2 + 3*y0*y3 - y1".
    std::string to_string(const std::string& var = "y") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational mag = abs(c);
            if (first)
                os << (c < 0 ? "-" : "");
            else
                os << (c < 0 ? " - " : " + ");
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var + std::to_string(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                os << jumpcon::to_string(mag);
            else if (mag == 1)
                os << mono;
            else
                os << jumpcon::to_string(mag) << "*" << mono;
        }
        return os.str();
    }

private:
    void check_arity(const Form& o) const {
        if (o.nvars_ != nvars_) throw ArityError("Form: operands have different variable counts");
    }

    std::size_t nvars_;
    Terms terms_;
};

inline std::vector<Form> gradient(const Form& f) {
    std::vector<Form> g;
    g.reserve(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.partial(i));
    return g;
}

inline RatVector eval_all(const std::vector<Form>& forms, const RatVector& point) {
    RatVector out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(f.eval(point));
    return out;
}

/// Exact test for f = λ·g with λ ≠ 0. Two zero forms are proportional.
inline bool proportional(const Form& f, const Form& g) {
    if (f.nvars() != g.nvars()) return false;
    if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
    if (f.size() != g.size()) return false;
    const Rational& fl = f.leading().second;
    const Rational& gl = g.leading().second;
    auto it = g.terms().begin();
    for (const auto& [e, c] : f.terms()) {
        if (it->first != e) return false;
        if (c * gl != it->second * fl) return false;
        ++it;
    }
    return true;
}

/// Scales f to coprime integer coefficients with a positive leading coefficient.
inline Form primitive_normalize(const Form& f) {
    if (f.is_zero()) throw DomainError("primitive_normalize: zero form");
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : f.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (f.leading().second < 0) scale = -scale;
    return f * scale;
}

/// For a quadratic form f, the symmetric matrix G with yᵀ·G·y = f(y).
inline RatMatrix quadratic_gram(const Form& f) {
    const std::size_t n = f.nvars();
    RatMatrix g(n, n);
    if (f.is_zero()) return g;
    if (f.degree() != 2) throw DomainError("quadratic_gram: form is not quadratic");
    for (const auto& [e, c] : f.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            for (unsigned p = 0; p < e[i]; ++p) idx.push_back(i);
        if (idx[0] == idx[1]) {
            g(idx[0], idx[0]) = c;
        } else {
            g(idx[0], idx[1]) = c / 2;
            g(idx[1], idx[0]) = c / 2;
        }
    }
    return g;
}

/// The quadratic form yᵀ·G·y of a symmetric matrix.
inline Form quadratic_form(const RatMatrix& g) {
    if (!g.is_symmetric()) throw InvariantError("quadratic_form: matrix is not symmetric");
    const std::size_t n = g.rows();
    Form f(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Exponent e(n, 0);
            ++e[i];
            ++e[j];
            f.add_term(e, i == j ? g(i, j) : Rational(2 * g(i, j)));
        }
    return f;
}

/// Square matrix whose entries are linear forms (or zero) in a common set of variables.
class LinearFormMatrix {
public:
    LinearFormMatrix(std::size_t n, std::size_t nvars) : n_(n), nvars_(nvars), entries_(n * n, Form(nvars)) {}

    std::size_t size() const noexcept { return n_; }
    std::size_t nvars() const noexcept { return nvars_; }

    const Form& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    void set(std::size_t i, std::size_t j, Form f) {
        if (f.nvars() != nvars_) throw ArityError("LinearFormMatrix: entry has wrong variable count");
        if (!f.is_zero() && f.degree() != 1) throw DomainError("LinearFormMatrix: entries must be linear");
        entries_[i * n_ + j] = std::move(f);
    }

    bool is_symmetric() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    RatMatrix eval(const RatVector& point) const {
        RatMatrix m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).eval(point);
        return m;
    }

private:
    std::size_t n_;
    std::size_t nvars_;
    std::vector<Form> entries_;
};

/// Symbolic determinant by Laplace expansion along successive rows, memoizing
/// the minors on each column subset. The 0×0 determinant is the constant 1.
inline Form sym_det(const LinearFormMatrix& m) {
    if (!m.is_symmetric()) throw InvariantError("sym_det: matrix of forms is not symmetric");
    const std::size_t n = m.size();
    if (n > 16) throw DimensionError("sym_det: size exceeds 16");
    const std::size_t nvars = m.nvars();
    // minors[S] = det of rows 0..|S|-1 restricted to the columns in S
    std::vector<Form> minors(std::size_t{1} << n, Form(nvars));
    minors[0] = Form::constant(nvars, 1);
    for (std::size_t r = 1; r <= n; ++r) {
        for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != r) continue;
            Form acc(nvars);
            std::size_t pos = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(mask & (1U << j))) continue;
                const Form& entry = m(r - 1, j);
                const Form& sub = minors[mask & ~(1U << j)];
                if (!entry.is_zero() && !sub.is_zero()) {
                    Form term = entry * sub;
                    if ((r - 1 + pos) % 2 == 0)
                        acc += term;
                    else
                        acc -= term;
                }
                ++pos;
            }
            minors[mask] = std::move(acc);
        }
    }
    return minors[(std::size_t{1} << n) - 1];
}

}  // namespace jumpcon
