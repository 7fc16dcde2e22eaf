#ifndef SNF_RATIONAL_HPP
#define SNF_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace snf {

using Integer = boost::multiprecision::cpp_int;

// Thrown for mathematical domain violations (division by zero, invalid basis
// indices, inputs outside a theorem's scope). CLI maps it to exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Arbitrary-precision rational, always in canonical form:
/// denominator > 0 and gcd(|num|, den) == 1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}            // NOLINT: implicit from int is intended
    Rational(long long n) : num_(n), den_(1) {}      // NOLINT
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) { canonicalize(); }

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        canonicalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw domain_error("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        canonicalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    /// Serialized form used in all JSON documents: "p" or "p/q".
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Parses "p", "p/q", or a plain integer with optional sign.
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        Integer num, den(1);
        try {
            if (slash == std::string::npos) {
                num = Integer(s);
            } else {
                num = Integer(s.substr(0, slash));
                den = Integer(s.substr(slash + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
        return Rational(num, den);
    }

    double to_double() const {
        return static_cast<double>(boost::multiprecision::cpp_rational(num_) /
                                   boost::multiprecision::cpp_rational(den_));
    }

private:
    void canonicalize() {
        if (den_ == 0) throw domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = boost::multiprecision::gcd(num_ < 0 ? Integer(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Integer num_;
    Integer den_;
};

inline Rational rat(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

/// Pochhammer k-symbol (a)^k_b = prod_{j=0}^{k-1} (a + j b); empty product for k = 0.
inline Rational pochhammer(const Rational& a, int k, const Rational& b) {
    if (k < 0) throw domain_error("pochhammer: negative iteration count");
    Rational p(1);
    Rational term = a;
    for (int j = 0; j < k; ++j) {
        p *= term;
        term += b;
    }
    return p;
}

/// Exact integer n-th root if it exists.
inline bool integer_nth_root(const Integer& v, int n, Integer& root) {
    if (v < 0) return false;
    if (v == 0) {
        root = 0;
        return true;
    }
    Integer lo = 0, hi = v + 1;
    while (lo + 1 < hi) {
        Integer mid = (lo + hi) / 2;
        Integer p = 1;
        bool over = false;
        for (int i = 0; i < n; ++i) {
            p *= mid;
            if (p > v) {
                over = true;
                break;
            }
        }
        if (over)
            hi = mid;
        else
            lo = mid;
    }
    Integer p = 1;
    for (int i = 0; i < n; ++i) p *= lo;
    if (p == v) {
        root = lo;
        return true;
    }
    return false;
}

/// Exact rational n-th root if both numerator and denominator are perfect powers.
inline bool rational_nth_root(const Rational& v, int n, Rational& root) {
    if (v.sign() < 0) return false;
    Integer rn, rd;
    if (!integer_nth_root(v.num(), n, rn) || !integer_nth_root(v.den(), n, rd)) return false;
    root = Rational(rn, rd);
    return true;
}

}  // namespace snf

#endif
