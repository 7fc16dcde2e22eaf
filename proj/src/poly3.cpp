#include "snf/poly3.hpp"

#include <algorithm>
#include <vector>

namespace snf {

std::string Poly3::str() const {
    if (terms_.empty()) return "0";
    // print in descending grlex order
    std::vector<std::pair<Exp3, Rational>> ts(terms_.begin(), terms_.end());
    GrlexLess less;
    std::sort(ts.begin(), ts.end(),
              [&](const auto& a, const auto& b) { return less(b.first, a.first); });
    std::string out;
    bool first = true;
    const char* vars[3] = {"x", "y", "z"};
    for (auto& [e, c] : ts) {
        Rational a = c.abs();
        out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool constant = e[0] == 0 && e[1] == 0 && e[2] == 0;
        bool unit = a.is_one();
        if (!unit || constant) out += a.str();
        bool any = !unit || constant;
        for (int v = 0; v < 3; ++v) {
            if (e[v] == 0) continue;
            if (any) out += "*";
            out += vars[v];
            if (e[v] > 1) out += "^" + std::to_string(e[v]);
            any = true;
        }
    }
    return out;
}

bool RatFunc3::is_polynomial() const {
    if (num_.is_zero()) return true;
    RatFunc3 n = normalized();
    return n.den().terms().size() == 1 && n.den().terms().begin()->first == Exp3{0, 0, 0};
}

Poly3 RatFunc3::as_polynomial() const {
    if (num_.is_zero()) return Poly3();
    RatFunc3 n = normalized();
    if (n.den().terms().size() != 1 || n.den().terms().begin()->first != Exp3{0, 0, 0})
        throw domain_error("RatFunc3: not a polynomial");
    Rational inv = Rational(1) / n.den().terms().begin()->second;
    return inv * n.num();
}

RatFunc3 RatFunc3::normalized() const {
    if (num_.is_zero()) return RatFunc3(Poly3(), Poly3(Rational(1)));
    // common monomial factor of numerator and denominator
    Exp3 mono{INT32_MAX, INT32_MAX, INT32_MAX};
    auto fold = [&](const Poly3& p) {
        for (auto& [e, c] : p.terms())
            for (int v = 0; v < 3; ++v) mono[v] = std::min(mono[v], e[v]);
    };
    fold(num_);
    fold(den_);
    auto strip = [&](const Poly3& p) {
        Poly3 r;
        for (auto& [e, c] : p.terms()) r.add_term({e[0] - mono[0], e[1] - mono[1], e[2] - mono[2]}, c);
        return r;
    };
    Poly3 n = strip(num_), d = strip(den_);
    // scale so that den has integer primitive coefficients with positive grlex lead
    Integer den_lcm = 1, num_lcm = 1;
    for (auto& [e, c] : d.terms()) den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
    for (auto& [e, c] : n.terms()) num_lcm = boost::multiprecision::lcm(num_lcm, c.den());
    Rational scale{boost::multiprecision::lcm(den_lcm, num_lcm), Integer(1)};
    n = scale * n;
    d = scale * d;
    Integer content = 0;
    for (auto& [e, c] : d.terms()) content = boost::multiprecision::gcd(content, c.num());
    for (auto& [e, c] : n.terms()) content = boost::multiprecision::gcd(content, c.num());
    if (content > 1) {
        Rational inv{Integer(1), content};
        n = inv * n;
        d = inv * d;
    }
    if (d.leading_coeff().sign() < 0) {
        n = -n;
        d = -d;
    }
    return RatFunc3(std::move(n), std::move(d));
}

VField3 gradient(const RatFunc3& f) { return {f.diff(0), f.diff(1), f.diff(2)}; }
VField3 gradient(const Poly3& f) {
    return {RatFunc3(f.diff(0)), RatFunc3(f.diff(1)), RatFunc3(f.diff(2))};
}

RatFunc3 divergence(const VField3& v) { return v.x.diff(0) + v.y.diff(1) + v.z.diff(2); }

VField3 curl(const VField3& v) {
    return {v.z.diff(1) - v.y.diff(2), v.x.diff(2) - v.z.diff(0), v.y.diff(0) - v.x.diff(1)};
}

VField3 cross(const VField3& u, const VField3& v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

RatFunc3 dot(const VField3& u, const VField3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

RatFunc3 dirderiv(const VField3& v, const RatFunc3& f) {
    return v.x * f.diff(0) + v.y * f.diff(1) + v.z * f.diff(2);
}
RatFunc3 dirderiv(const VField3& v, const Poly3& f) { return dirderiv(v, RatFunc3(f)); }

VField3 lie_bracket(const VField3& u, const VField3& v) {
    auto comp = [&](const RatFunc3& ui) {
        return u.x * ui.diff(0) + u.y * ui.diff(1) + u.z * ui.diff(2);
    };
    auto comp_v = [&](const RatFunc3& vi) {
        return v.x * vi.diff(0) + v.y * vi.diff(1) + v.z * vi.diff(2);
    };
    return {comp(v.x) - comp_v(u.x), comp(v.y) - comp_v(u.y), comp(v.z) - comp_v(u.z)};
}

}  // namespace snf
