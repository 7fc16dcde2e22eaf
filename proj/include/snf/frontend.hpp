#ifndef SNF_FRONTEND_HPP
#define SNF_FRONTEND_HPP

#include <array>
#include <map>
#include <optional>

#include "snf/normalform.hpp"

namespace snf {

/// Cubic Hopf-pitchfork system
///   x-dot = sum a_{ijk} x^i y^j z^k
///   y-dot = z + sum b_{ijk} x^i y^j z^k
///   z-dot = -y + sum c_{ijk} x^i y^j z^k,  i + j + k = 3.
struct CubicSystem {
    std::map<Exp3, Rational> a, b, c;

    void validate() const;
    VField3 cubic_field() const;

    Rational ca(const Exp3& e) const { return get(a, e); }
    Rational cb(const Exp3& e) const { return get(b, e); }
    Rational cc(const Exp3& e) const { return get(c, e); }

private:
    static Rational get(const std::map<Exp3, Rational>& m, const Exp3& e) {
        auto it = m.find(e);
        return it == m.end() ? Rational(0) : it->second;
    }
};

/// Result of the exact cubic homological solve against the rotation.
struct CubicNF {
    // resonant coefficients on H^0_1, H^1_2, Theta^0_1, Theta^1_2
    Rational a0, a1, b0, b1;
    // complementary (non-solenoidal/non-conservative) resonant directions:
    // e1 on rho^3 d_rho and e2 on x^2 rho d_rho
    Rational e1, e2;
    VField3 resonant;   // full resonant part (kernel projection)
    VField3 generator;  // cubic generator removing the image part
    LieElement resonant_element() const;
};

/// Exact semisimple splitting of the cubic space under ad(rotation): resonant
/// part = kernel projection along the image; removable part solved for exactly.
CubicNF classical_nf_cubic(const CubicSystem& sys);

struct MembershipResult {
    bool verdict = false;
    Rational residual1;  // a102 + a120 + b012 + 3 b030 + 3 c003 + c021
    Rational residual2;  // 3 a300 + b210 + c201
};
/// Coefficient conditions equivalent to the vanishing of both complementary
/// resonant directions (verdict true iff the classical normal form lies in the
/// solenoidal-conservative Z2 family).
MembershipResult membership_relations(const CubicSystem& sys);

struct ExtractionResult {
    Rational a0, b0, a1, b1;
    bool membership = false;  // when false the values describe only the projection
};
/// Closed-form coefficient extraction, exact; equals the homological projection
/// on relation-satisfying systems.
ExtractionResult extract_coefficients(const CubicSystem& sys);

enum class ChuaMode { Exact, Float };

struct ChuaParams {
    Rational alpha, gamma, a;
    ChuaMode mode = ChuaMode::Exact;

    void validate() const;  // throws a specific error per violated constraint
    Rational c() const { return -(gamma + Rational(1)) / alpha; }
    Rational beta() const {
        return -gamma * (alpha + gamma + Rational(1)) / (gamma + Rational(1));
    }
    Rational omega0sq() const;
    std::pair<Rational, Rational> mu() const;  // rational for rational inputs
};

struct ChuaReport {
    ChuaMode mode = ChuaMode::Exact;
    Rational alpha, gamma, a;
    Rational c, beta, omega0sq;
    std::pair<Rational, Rational> mu;
    // exact mode
    std::optional<Rational> omega0;
    std::optional<CubicSystem> cubic;
    std::optional<MembershipResult> membership;
    std::optional<ExtractionResult> coeffs;
    std::optional<LieElement> normal_form;  // rotation + extracted coefficients
    std::optional<int> r, s;
    // grouping scalars of the assembled normal form: coefficients factor through
    // (gH, gT) with a0 = gH 3(gamma+1)/(2 gamma), a1 = gH 2 alpha gamma/((gamma+1)(alpha+gamma+1)),
    // b0 = gT (gamma+1)^2/(4 gamma^2), b1 = gT alpha/(alpha+gamma+1)
    std::optional<std::pair<Rational, Rational>> groupings;
    // float mode
    double omega0_f = 0.0;
    std::array<double, 2> residuals_f{0.0, 0.0};
    std::array<double, 4> coeffs_f{0.0, 0.0, 0.0, 0.0};
    bool membership_f = false;
};

/// End-to-end practical pipeline: derived constants, linearizing transformation
/// (verified to produce the exact rotation Jordan form), transformed cubic
/// system, membership, extraction, and the assembled normal form. Float mode
/// covers irrational omega0 with a documented 1e-9 residual tolerance.
ChuaReport chua_pipeline(const ChuaParams& params);

/// Comparison tolerance for float-mode membership residuals.
inline constexpr double kChuaFloatTol = 1e-9;

}  // namespace snf

#endif
