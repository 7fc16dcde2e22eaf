#ifndef SNF_POLY3_HPP
#define SNF_POLY3_HPP

#include <array>
#include <map>
#include <string>

#include "snf/rational.hpp"

namespace snf {

/// Exponent triple (i, j, k) for x^i y^j z^k.
using Exp3 = std::array<int, 3>;

/// Graded lexicographic order with x > y > z; used for canonical printing and
/// for fixing the sign of a denominator's leading coefficient.
struct GrlexLess {
    bool operator()(const Exp3& a, const Exp3& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da < db;
        return a < b;  // within a degree, plain lex on (i, j, k)
    }
};

/// Sparse trivariate polynomial over Rational. No zero coefficients stored.
class Poly3 {
public:
    using Terms = std::map<Exp3, Rational>;

    Poly3() = default;
    explicit Poly3(const Rational& c) {
        if (!c.is_zero()) terms_[{0, 0, 0}] = c;
    }

    static Poly3 monomial(int i, int j, int k, const Rational& c = Rational(1)) {
        if (i < 0 || j < 0 || k < 0) throw domain_error("Poly3: negative exponent");
        Poly3 p;
        if (!c.is_zero()) p.terms_[{i, j, k}] = c;
        return p;
    }
    static Poly3 variable(int axis) {
        Exp3 e{0, 0, 0};
        e[axis] = 1;
        Poly3 p;
        p.terms_[e] = Rational(1);
        return p;
    }
    // y^2 + z^2, the radial invariant
    static Poly3 rho2() {
        return monomial(0, 2, 0) + monomial(0, 0, 2);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const {
        int d = -1;
        for (auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
        return d;
    }

    void add_term(const Exp3& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly3 operator-() const {
        Poly3 r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    Poly3& operator+=(const Poly3& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly3& operator-=(const Poly3& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
    friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
    friend Poly3 operator*(const Poly3& a, const Poly3& b) {
        Poly3 r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    friend Poly3 operator*(const Rational& c, const Poly3& p) {
        Poly3 r;
        if (c.is_zero()) return r;
        for (auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }
    friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly3& a, const Poly3& b) { return !(a == b); }

    Poly3 pow(int n) const {
        if (n < 0) throw domain_error("Poly3: negative power");
        Poly3 r(Rational(1));
        for (int i = 0; i < n; ++i) r = r * (*this);
        return r;
    }

    /// Exact partial derivative along axis 0, 1, 2 = x, y, z.
    Poly3 diff(int axis) const {
        Poly3 r;
        for (auto& [e, c] : terms_) {
            if (e[axis] == 0) continue;
            Exp3 f = e;
            f[axis] -= 1;
            r.add_term(f, Rational(e[axis]) * c);
        }
        return r;
    }

    /// Leading coefficient in grlex order (zero polynomial -> 0).
    Rational leading_coeff() const {
        Rational lc(0);
        Exp3 best{-1, -1, -1};
        GrlexLess less;
        for (auto& [e, c] : terms_) {
            if (best[0] < 0 || less(best, e)) {
                best = e;
                lc = c;
            }
        }
        return lc;
    }

    std::string str() const;

private:
    Terms terms_;
};

/// Quotient of two Poly3 with nonzero denominator. Not reduced to lowest terms
/// after each operation; equality is by cross-multiplication. normalized() fixes
/// a canonical content/sign for display and serialization.
class RatFunc3 {
public:
    RatFunc3() : num_(), den_(Rational(1)) {}
    RatFunc3(Poly3 num) : num_(std::move(num)), den_(Rational(1)) {}
    RatFunc3(Poly3 num, Poly3 den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw domain_error("RatFunc3: zero denominator");
        if (num_.is_zero()) den_ = Poly3(Rational(1));
    }

    const Poly3& num() const { return num_; }
    const Poly3& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    Poly3 as_polynomial() const;

    RatFunc3 operator-() const { return RatFunc3(-num_, den_); }
    friend RatFunc3 operator+(const RatFunc3& a, const RatFunc3& b) {
        if (a.den_ == b.den_) return RatFunc3(a.num_ + b.num_, a.den_);
        return RatFunc3(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc3 operator-(const RatFunc3& a, const RatFunc3& b) { return a + (-b); }
    friend RatFunc3 operator*(const RatFunc3& a, const RatFunc3& b) {
        return RatFunc3(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc3 operator*(const Rational& c, const RatFunc3& f) {
        return RatFunc3(c * f.num_, f.den_);
    }
    friend RatFunc3 operator/(const RatFunc3& a, const RatFunc3& b) {
        if (b.num_.is_zero()) throw domain_error("RatFunc3: division by zero");
        return RatFunc3(a.num_ * b.den_, a.den_ * b.num_);
    }
    /// Equality by cross-multiplication; exact on the common domain.
    friend bool operator==(const RatFunc3& a, const RatFunc3& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFunc3& a, const RatFunc3& b) { return !(a == b); }

    /// Quotient-rule derivative (n'd - nd')/d^2.
    RatFunc3 diff(int axis) const {
        return RatFunc3(num_.diff(axis) * den_ - num_ * den_.diff(axis), den_ * den_);
    }

    /// Cheap canonical pass for display: divides out the common monomial factor
    /// and rational content, and makes the denominator's grlex-leading
    /// coefficient positive. Full multivariate gcd is out of scope.
    RatFunc3 normalized() const;
    RatFunc3 reduce() const { return normalized(); }

    std::string str() const { return num_.str() + (den_ == Poly3(Rational(1)) ? "" : " / (" + den_.str() + ")"); }

private:
    Poly3 num_;
    Poly3 den_;
};

/// Vector field on R^3 with rational-function components along e_x, e_y, e_z.
struct VField3 {
    RatFunc3 x, y, z;

    VField3() = default;
    VField3(RatFunc3 fx, RatFunc3 fy, RatFunc3 fz)
        : x(std::move(fx)), y(std::move(fy)), z(std::move(fz)) {}

    bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
    bool is_polynomial() const { return x.is_polynomial() && y.is_polynomial() && z.is_polynomial(); }

    friend VField3 operator+(const VField3& a, const VField3& b) {
        return {a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend VField3 operator-(const VField3& a, const VField3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend VField3 operator*(const Rational& c, const VField3& v) {
        return {c * v.x, c * v.y, c * v.z};
    }
    friend bool operator==(const VField3& a, const VField3& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const VField3& a, const VField3& b) { return !(a == b); }
};

// --- scalar calculus ---
VField3 gradient(const RatFunc3& f);
VField3 gradient(const Poly3& f);

// --- vector calculus; all identities hold exactly ---
RatFunc3 divergence(const VField3& v);
VField3 curl(const VField3& v);
VField3 cross(const VField3& u, const VField3& v);
RatFunc3 dot(const VField3& u, const VField3& v);
/// Directional derivative v . grad(f).
RatFunc3 dirderiv(const VField3& v, const RatFunc3& f);
RatFunc3 dirderiv(const VField3& v, const Poly3& f);

/// Lie bracket [u, v]_i = sum_j u_j d_j v_i - v_j d_j u_i. The sign convention
/// makes brackets of expanded basis fields match the indexed structure constants.
VField3 lie_bracket(const VField3& u, const VField3& v);

}  // namespace snf

#endif
