#include "snf/liealg.hpp"

#include <algorithm>

namespace snf {

std::string family_name(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::T: return "T";
        case Family::H: return "H";
        case Family::TZ2: return "TZ2";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "F") return Family::F;
    if (s == "T" || s == "Theta") return Family::T;
    if (s == "H") return Family::H;
    if (s == "TZ2" || s == "ThetaZ2") return Family::TZ2;
    throw std::invalid_argument("unknown family '" + s + "' (expected F, T, H, TZ2)");
}

void BasisIndex::require_valid() const {
    if (!valid())
        throw domain_error("invalid basis index " + str());
}

std::string BasisIndex::str() const {
    return family_name(family) + "^" + std::to_string(l) + "_" + std::to_string(k);
}

void LieElement::add(const BasisIndex& idx, const Rational& c) {
    if (c.is_zero()) return;
    idx.require_valid();
    if (!terms_.empty()) {
        AlgebraKind have = algebra_of(terms_.begin()->first.family);
        if (algebra_of(idx.family) != have)
            throw domain_error("LieElement: cannot mix general and Z2 families");
    }
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<AlgebraKind> LieElement::algebra() const {
    if (terms_.empty()) return std::nullopt;
    return algebra_of(terms_.begin()->first.family);
}

std::string LieElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [i, c] : terms_) {
        out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        first = false;
        Rational a = c.abs();
        if (!a.is_one()) out += a.str() + "*";
        out += i.str();
    }
    return out;
}

namespace {

// Underlying (l, k) in the general algebra: Z2 families embed via l -> 2l.
std::pair<int, int> general_lk(const BasisIndex& idx) {
    switch (idx.family) {
        case Family::F:
        case Family::T: return {idx.l, idx.k};
        case Family::H:
        case Family::TZ2: return {2 * idx.l, idx.k};
    }
    return {0, 0};
}

bool is_f_like(Family f) { return f == Family::F || f == Family::H; }

}  // namespace

VField3 expand_cartesian(const BasisIndex& idx) {
    idx.require_valid();
    auto [l, k] = general_lk(idx);
    Poly3 r2 = Poly3::rho2();
    if (is_f_like(idx.family)) {
        // x^l R^{k-l} ((k-l+1) x, -(l+1)/2 y, -(l+1)/2 z); at l = -1 the x-component
        // carries x^{l+1} = 1 and the y/z components vanish, so no negative power
        // is ever formed.
        Poly3 rk = r2.pow(k - l);
        Rational cx(k - l + 1);
        Rational cyz = rat(-(l + 1), 2);
        Poly3 px, py, pz;
        px = cx * (Poly3::monomial(l + 1, 0, 0) * rk);
        if (!cyz.is_zero()) {
            py = cyz * (Poly3::monomial(l, 1, 0) * rk);
            pz = cyz * (Poly3::monomial(l, 0, 1) * rk);
        }
        return {RatFunc3(px), RatFunc3(py), RatFunc3(pz)};
    }
    // x^l R^{k-l} (z d_y - y d_z)
    Poly3 pre = Poly3::monomial(l, 0, 0) * r2.pow(k - l);
    return {RatFunc3(Poly3()), RatFunc3(pre * Poly3::variable(2)), RatFunc3(-(pre * Poly3::variable(1)))};
}

VField3 expand_cartesian(const LieElement& e) {
    VField3 out;
    for (auto& [i, c] : e.terms()) out = out + c * expand_cartesian(i);
    return out;
}

CylForm expand_cylindrical(const BasisIndex& idx) {
    idx.require_valid();
    auto [l, k] = general_lk(idx);
    CylForm cf;
    if (is_f_like(idx.family)) {
        cf.dx.push_back({Rational(k - l + 1), l + 1, 2 * (k - l)});
        Rational cr = rat(-(l + 1), 2);
        if (!cr.is_zero()) cf.drho.push_back({cr, l, 2 * (k - l) + 1});
    } else {
        cf.dtheta.push_back({Rational(1), l, 2 * (k - l)});
    }
    return cf;
}

std::string CylForm::str() const {
    std::string out;
    auto emit = [&](const std::vector<Term>& slot, const std::string& dsym) {
        for (auto& t : slot) {
            if (t.coeff.is_zero()) continue;
            Rational a = t.coeff.abs();
            out += out.empty() ? (t.coeff.sign() < 0 ? "-" : "") : (t.coeff.sign() < 0 ? " - " : " + ");
            std::string piece;
            if (!a.is_one()) piece += a.den() == 1 ? a.str() : "(" + a.str() + ")";
            if (t.xpow > 0) piece += "x" + (t.xpow > 1 ? "^" + std::to_string(t.xpow) : "");
            if (t.rhopow > 0) piece += "ρ" + (t.rhopow > 1 ? "^" + std::to_string(t.rhopow) : "");
            if (piece.empty()) piece = "1";
            out += piece + "∂" + dsym;
        }
    };
    emit(dx, "x");
    emit(drho, "ρ");
    emit(dtheta, "θ");
    return out.empty() ? "0" : out;
}

VField3 CylForm::to_cartesian() const {
    // rho^{2b} -> (y^2+z^2)^b;  f rho^{2b+1} d_rho -> f (y^2+z^2)^b (y d_y + z d_z);
    // f d_theta -> f (z d_y - y d_z).  Odd rho powers outside d_rho would not be
    // polynomial; the basis forms never produce them.
    Poly3 px, py, pz;
    Poly3 r2 = Poly3::rho2();
    for (auto& t : dx) {
        if (t.rhopow % 2 != 0) throw domain_error("CylForm: odd rho power in d_x slot");
        px += t.coeff * (Poly3::monomial(t.xpow, 0, 0) * r2.pow(t.rhopow / 2));
    }
    for (auto& t : drho) {
        if (t.rhopow % 2 != 1) throw domain_error("CylForm: even rho power in d_rho slot");
        Poly3 pre = t.coeff * (Poly3::monomial(t.xpow, 0, 0) * r2.pow((t.rhopow - 1) / 2));
        py += pre * Poly3::variable(1);
        pz += pre * Poly3::variable(2);
    }
    for (auto& t : dtheta) {
        if (t.rhopow % 2 != 0) throw domain_error("CylForm: odd rho power in d_theta slot");
        Poly3 pre = t.coeff * (Poly3::monomial(t.xpow, 0, 0) * r2.pow(t.rhopow / 2));
        py += pre * Poly3::variable(2);
        pz -= pre * Poly3::variable(1);
    }
    return {RatFunc3(px), RatFunc3(py), RatFunc3(pz)};
}

LieElement bracket_basis(const BasisIndex& a, const BasisIndex& b) {
    a.require_valid();
    b.require_valid();
    if (algebra_of(a.family) != algebra_of(b.family))
        throw domain_error("bracket: mixed-algebra input");
    LieElement out;
    bool fa = is_f_like(a.family), fb = is_f_like(b.family);
    if (!fa && !fb) return out;  // [Theta, Theta] = 0

    auto [l, k] = general_lk(a);
    auto [m, n] = general_lk(b);
    AlgebraKind alg = algebra_of(a.family);
    Family Ffam = alg == AlgebraKind::General ? Family::F : Family::H;
    Family Tfam = alg == AlgebraKind::General ? Family::T : Family::TZ2;

    if (fa && fb) {
        // [F^l_k, F^m_n] = ((m+1)(k+2) - (l+1)(n+2)) F^{l+m}_{k+n}
        Rational c(Integer((m + 1) * (k + 2) - (l + 1) * (n + 2)));
        if (!c.is_zero()) {
            BasisIndex tgt{Ffam, alg == AlgebraKind::General ? l + m : (l + m) / 2, k + n};
            if (alg == AlgebraKind::Z2 && (l + m) % 2 != 0)
                throw domain_error("bracket: odd embedded index");  // cannot happen
            tgt.require_valid();
            out.add(tgt, c);
        }
        return out;
    }
    // one F-like, one Theta-like: [F^l_k, T^m_n] = (m(k+2) - n(l+1)) T^{l+m}_{k+n}
    int sign = 1;
    if (!fa) {  // [T, F] = -[F, T]
        std::swap(l, m);
        std::swap(k, n);
        sign = -1;
    }
    Rational c(Integer(sign * (m * (k + 2) - n * (l + 1))));
    if (!c.is_zero()) {
        BasisIndex tgt{Tfam, alg == AlgebraKind::General ? l + m : (l + m) / 2, k + n};
        tgt.require_valid();
        out.add(tgt, c);
    }
    return out;
}

LieElement bracket(const LieElement& e1, const LieElement& e2) {
    auto a1 = e1.algebra(), a2 = e2.algebra();
    if (a1 && a2 && *a1 != *a2) throw domain_error("bracket: mixed-algebra input");
    LieElement out;
    for (auto& [i1, c1] : e1.terms())
        for (auto& [i2, c2] : e2.terms()) out += (c1 * c2) * bracket_basis(i1, i2);
    return out;
}

std::vector<Poly3> first_integral(const BasisIndex& idx) {
    idx.require_valid();
    auto [l, k] = general_lk(idx);
    if (is_f_like(idx.family)) {
        return {Poly3::monomial(l + 1, 0, 0) * Poly3::rho2().pow(k - l + 1)};
    }
    return {Poly3::variable(0), Poly3::rho2()};
}

int grading(const BasisIndex& idx, GradingScheme scheme, int r) {
    idx.require_valid();
    if (algebra_of(idx.family) != AlgebraKind::Z2)
        throw domain_error("grading: defined for Z2 families only");
    int l = idx.l, k = idx.k;
    if (scheme == GradingScheme::SecondLevel) return idx.family == Family::H ? k : k + 1;
    if (r < 1) throw domain_error("grading: r must be >= 1");
    return idx.family == Family::H ? r * (k - 2 * l) + l : r * (k - 2 * l) + r + l + 1;
}

int general_grading(const BasisIndex& idx) {
    idx.require_valid();
    if (algebra_of(idx.family) != AlgebraKind::General)
        throw domain_error("general_grading: defined for F/T families only");
    return idx.k;
}

}  // namespace snf
