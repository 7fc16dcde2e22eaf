#ifndef SNF_LIEALG_HPP
#define SNF_LIEALG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snf/poly3.hpp"

namespace snf {

/// Basis families. F/T span the full solenoidal-conservative algebra; H/TZ2 are
/// the Z2-equivariant subfamilies, with H^l_k = F^{2l}_k and TZ2^l_k = T^{2l}_k.
enum class Family { F, T, H, TZ2 };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

/// Whether an index lives in the full algebra (F/T) or the Z2 one (H/TZ2).
enum class AlgebraKind { General, Z2 };
inline AlgebraKind algebra_of(Family f) {
    return (f == Family::F || f == Family::T) ? AlgebraKind::General : AlgebraKind::Z2;
}

struct BasisIndex {
    Family family;
    int l;
    int k;

    bool valid() const {
        switch (family) {
            case Family::F: return -1 <= l && l <= k && 0 <= k;
            case Family::T: return 0 <= l && l <= k;
            case Family::H: return 0 <= 2 * l && 2 * l <= k && 1 <= k;
            case Family::TZ2: return 0 <= 2 * l && 2 * l <= k;
        }
        return false;
    }
    void require_valid() const;

    friend bool operator==(const BasisIndex& a, const BasisIndex& b) {
        return a.family == b.family && a.l == b.l && a.k == b.k;
    }
    friend bool operator<(const BasisIndex& a, const BasisIndex& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.l != b.l) return a.l < b.l;
        return a.k < b.k;
    }

    std::string str() const;
};

/// The rotation generator (theta-dot = 1 term) in each algebra.
inline BasisIndex rotation(AlgebraKind kind) {
    return {kind == AlgebraKind::General ? Family::T : Family::TZ2, 0, 0};
}

/// Finite rational combination of basis indices from a single algebra.
class LieElement {
public:
    using Terms = std::map<BasisIndex, Rational>;

    LieElement() = default;
    LieElement(const BasisIndex& idx, const Rational& c) { add(idx, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(const BasisIndex& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const BasisIndex& idx, const Rational& c);

    LieElement operator-() const {
        LieElement r;
        for (auto& [i, c] : terms_) r.terms_[i] = -c;
        return r;
    }
    LieElement& operator+=(const LieElement& o) {
        for (auto& [i, c] : o.terms_) add(i, c);
        return *this;
    }
    LieElement& operator-=(const LieElement& o) {
        for (auto& [i, c] : o.terms_) add(i, -c);
        return *this;
    }
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Rational& c, const LieElement& e) {
        LieElement r;
        if (c.is_zero()) return r;
        for (auto& [i, ec] : e.terms_) r.terms_[i] = c * ec;
        return r;
    }
    friend bool operator==(const LieElement& a, const LieElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }

    /// The algebra all terms belong to; throws on mixed families.
    std::optional<AlgebraKind> algebra() const;

    std::string str() const;

private:
    Terms terms_;
};

/// Cylindrical display record: polynomial coefficients (in x and rho) for the
/// d_x, d_rho, d_theta slots.
struct CylForm {
    struct Term {
        Rational coeff;
        int xpow;
        int rhopow;
    };
    std::vector<Term> dx, drho, dtheta;

    std::string str() const;
    /// Substitutes rho^2 = y^2 + z^2 (and the angular slot via z d_y - y d_z)
    /// to produce the Cartesian field; used for the round-trip identity check.
    VField3 to_cartesian() const;
};

/// Expands a basis index to its Cartesian polynomial vector field.
VField3 expand_cartesian(const BasisIndex& idx);
VField3 expand_cartesian(const LieElement& e);

CylForm expand_cylindrical(const BasisIndex& idx);

/// Structure-constant bracket on the indexed algebra, pinned so that
/// expand(bracket(e1, e2)) == lie_bracket(expand(e1), expand(e2)).
LieElement bracket(const LieElement& e1, const LieElement& e2);
LieElement bracket_basis(const BasisIndex& a, const BasisIndex& b);

/// First integrals: families F/H yield the single generator
/// x^{l+1}(y^2+z^2)^{k-l+1}; families T/TZ2 yield the pair {x, y^2+z^2}.
std::vector<Poly3> first_integral(const BasisIndex& idx);

enum class GradingScheme { SecondLevel, RAdapted };

/// Grading functions for the Z2 families. SecondLevel: d(H^m_n) = n,
/// d(T^m_n) = n + 1. RAdapted: d(H^m_n) = r(n-2m) + m,
/// d(T^m_n) = r(n-2m) + r + m + 1.
int grading(const BasisIndex& idx, GradingScheme scheme, int r = 1);

/// Degree grading for the general families (d(F^l_k) = d(T^l_k) = k).
int general_grading(const BasisIndex& idx);

}  // namespace snf

#endif
