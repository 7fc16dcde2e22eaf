#include "snf/frontend.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace snf {

namespace {

std::vector<Exp3> cubic_monomials() {
    std::vector<Exp3> out;
    for (int i = 3; i >= 0; --i)
        for (int j = 3 - i; j >= 0; --j) out.push_back({i, j, 3 - i - j});
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Exp3>& kMon3() {
    static const std::vector<Exp3> m = cubic_monomials();
    return m;
}

// fixed basis of the 30-dimensional cubic vector-field space
struct CubicBasis {
    // index = comp * 10 + monomial position
    static int dim() { return 30; }
    static VField3 field(int idx) {
        int comp = idx / 10;
        Exp3 e = kMon3()[idx % 10];
        Poly3 mono = Poly3::monomial(e[0], e[1], e[2]);
        VField3 v;
        if (comp == 0) v.x = RatFunc3(mono);
        if (comp == 1) v.y = RatFunc3(mono);
        if (comp == 2) v.z = RatFunc3(mono);
        return v;
    }
};

std::vector<Rational> coords_of(const VField3& v) {
    std::vector<Rational> out(30, Rational(0));
    const RatFunc3* comps[3] = {&v.x, &v.y, &v.z};
    for (int c = 0; c < 3; ++c) {
        Poly3 p = comps[c]->as_polynomial();
        for (auto& [e, coef] : p.terms()) {
            if (e[0] + e[1] + e[2] != 3) throw domain_error("cubic solve: non-cubic component");
            auto it = std::lower_bound(kMon3().begin(), kMon3().end(), e);
            out[c * 10 + static_cast<int>(it - kMon3().begin())] = coef;
        }
    }
    return out;
}

VField3 rotation_field() {
    return {RatFunc3(Poly3()), RatFunc3(Poly3::variable(2)), RatFunc3(-Poly3::variable(1))};
}

// the six rotation-equivariant cubic directions
VField3 eq_H01() { return expand_cartesian(BasisIndex{Family::H, 0, 1}); }
VField3 eq_H12() { return expand_cartesian(BasisIndex{Family::H, 1, 2}); }
VField3 eq_T01() { return expand_cartesian(BasisIndex{Family::TZ2, 0, 1}); }
VField3 eq_T12() { return expand_cartesian(BasisIndex{Family::TZ2, 1, 2}); }
VField3 eq_N1() {
    Poly3 r2 = Poly3::rho2();
    return {RatFunc3(Poly3()), RatFunc3(r2 * Poly3::variable(1)), RatFunc3(r2 * Poly3::variable(2))};
}
VField3 eq_N2() {
    Poly3 x2 = Poly3::monomial(2, 0, 0);
    return {RatFunc3(Poly3()), RatFunc3(x2 * Poly3::variable(1)), RatFunc3(x2 * Poly3::variable(2))};
}

// Solves M y = rhs exactly (M given as column vectors). Returns false when
// inconsistent. Free variables are set to zero.
bool solve_columns(std::vector<std::vector<Rational>> cols, std::vector<Rational> rhs,
                   std::vector<Rational>& y) {
    size_t n = cols.size(), m = rhs.size();
    y.assign(n, Rational(0));
    std::vector<int> where(m, -1);
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t sel = row;
        while (sel < m && cols[col][sel].is_zero()) ++sel;
        if (sel == m) continue;
        for (auto& c2 : cols) std::swap(c2[sel], c2[row]);
        std::swap(rhs[sel], rhs[row]);
        Rational inv = Rational(1) / cols[col][row];
        for (auto& c2 : cols) c2[row] *= inv;
        rhs[row] *= inv;
        for (size_t r2 = 0; r2 < m; ++r2) {
            if (r2 == row || cols[col][r2].is_zero()) continue;
            Rational f = cols[col][r2];
            for (auto& c2 : cols) c2[r2] -= f * c2[row];
            rhs[r2] -= f * rhs[row];
        }
        where[row] = static_cast<int>(col);
        ++row;
    }
    for (size_t r2 = row; r2 < m; ++r2)
        if (!rhs[r2].is_zero()) return false;
    for (size_t r2 = 0; r2 < row; ++r2) y[where[r2]] = rhs[r2];
    return true;
}

}  // namespace

void CubicSystem::validate() const {
    for (auto* m : {&a, &b, &c})
        for (auto& [e, coef] : *m)
            if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != 3)
                throw domain_error("CubicSystem: exponents must be a cubic monomial");
}

VField3 CubicSystem::cubic_field() const {
    Poly3 px, py, pz;
    for (auto& [e, coef] : a) px += coef * Poly3::monomial(e[0], e[1], e[2]);
    for (auto& [e, coef] : b) py += coef * Poly3::monomial(e[0], e[1], e[2]);
    for (auto& [e, coef] : c) pz += coef * Poly3::monomial(e[0], e[1], e[2]);
    return {RatFunc3(px), RatFunc3(py), RatFunc3(pz)};
}

LieElement CubicNF::resonant_element() const {
    LieElement e;
    e.add({Family::H, 0, 1}, a0);
    e.add({Family::H, 1, 2}, a1);
    e.add({Family::TZ2, 0, 1}, b0);
    e.add({Family::TZ2, 1, 2}, b1);
    return e;
}

CubicNF classical_nf_cubic(const CubicSystem& sys) {
    sys.validate();
    VField3 rot = rotation_field();

    // ad matrix columns: [basis_j, rot]
    std::vector<std::vector<Rational>> ad_cols(30);
    for (int j = 0; j < 30; ++j)
        ad_cols[j] = coords_of(lie_bracket(CubicBasis::field(j), rot));

    // independent image columns (pivot columns of the ad matrix)
    std::vector<std::vector<Rational>> work = ad_cols;
    std::vector<int> piv;
    {
        size_t row = 0;
        std::vector<std::vector<Rational>> cols = ad_cols;
        for (size_t col = 0; col < cols.size() && row < 30; ++col) {
            size_t sel = row;
            while (sel < 30 && cols[col][sel].is_zero()) ++sel;
            if (sel == 30) continue;
            for (auto& c2 : cols) std::swap(c2[sel], c2[row]);
            Rational inv = Rational(1) / cols[col][row];
            for (auto& c2 : cols) c2[row] *= inv;
            for (size_t r2 = 0; r2 < 30; ++r2) {
                if (r2 == row || cols[col][r2].is_zero()) continue;
                Rational f = cols[col][r2];
                for (auto& c2 : cols) c2[r2] -= f * c2[row];
            }
            piv.push_back(static_cast<int>(col));
            ++row;
        }
    }
    if (piv.size() != 24) throw std::logic_error("classical_nf_cubic: unexpected image rank");

    // decomposition basis: six equivariant directions + image columns
    std::vector<VField3> eq = {eq_H01(), eq_H12(), eq_T01(), eq_T12(), eq_N1(), eq_N2()};
    std::vector<std::vector<Rational>> cols;
    for (auto& v : eq) cols.push_back(coords_of(v));
    for (int p : piv) cols.push_back(ad_cols[p]);

    std::vector<Rational> y;
    if (!solve_columns(cols, coords_of(sys.cubic_field()), y))
        throw std::logic_error("classical_nf_cubic: decomposition failed");

    CubicNF out;
    out.a0 = y[0];
    out.a1 = y[1];
    out.b0 = y[2];
    out.b1 = y[3];
    out.e1 = y[4];
    out.e2 = y[5];
    out.resonant = out.a0 * eq[0] + out.a1 * eq[1] + out.b0 * eq[2] + out.b1 * eq[3] +
                   out.e1 * eq[4] + out.e2 * eq[5];

    // generator: [Y, rot] must cancel the image part, i.e. equal resonant - v
    std::vector<Rational> yg;
    if (!solve_columns(ad_cols, coords_of(out.resonant - sys.cubic_field()), yg))
        throw std::logic_error("classical_nf_cubic: homological solve failed");
    VField3 gen;
    for (int j = 0; j < 30; ++j)
        if (!yg[j].is_zero()) gen = gen + yg[j] * CubicBasis::field(j);
    out.generator = gen;
    return out;
}

MembershipResult membership_relations(const CubicSystem& sys) {
    sys.validate();
    MembershipResult r;
    r.residual1 = sys.ca({1, 0, 2}) + sys.ca({1, 2, 0}) + sys.cb({0, 1, 2}) +
                  Rational(3) * sys.cb({0, 3, 0}) + Rational(3) * sys.cc({0, 0, 3}) +
                  sys.cc({0, 2, 1});
    r.residual2 = Rational(3) * sys.ca({3, 0, 0}) + sys.cb({2, 1, 0}) + sys.cc({2, 0, 1});
    r.verdict = r.residual1.is_zero() && r.residual2.is_zero();
    return r;
}

ExtractionResult extract_coefficients(const CubicSystem& sys) {
    sys.validate();
    ExtractionResult e;
    e.a0 = rat(-1, 4) * (sys.cc({0, 2, 1}) + Rational(3) * sys.cc({0, 0, 3}) +
                         Rational(3) * sys.cb({0, 3, 0}) + sys.cb({0, 1, 2}));
    e.b0 = rat(1, 8) * (Rational(-3) * sys.cc({0, 3, 0}) - sys.cc({0, 1, 2}) + sys.cb({0, 2, 1}) +
                        Rational(3) * sys.cb({0, 0, 3}));
    e.a1 = sys.ca({3, 0, 0});
    e.b1 = rat(1, 2) * (sys.cb({2, 0, 1}) - sys.cc({2, 1, 0}));
    e.membership = membership_relations(sys).verdict;
    return e;
}

// ---------------------------------------------------------------------------
// Chua pipeline
// ---------------------------------------------------------------------------

void ChuaParams::validate() const {
    if (alpha.is_zero()) throw domain_error("chua: constraint violated: alpha != 0");
    if (gamma.is_zero()) throw domain_error("chua: constraint violated: gamma != 0");
    if (a.is_zero()) throw domain_error("chua: constraint violated: a != 0");
    Rational gp1 = gamma + Rational(1);
    if (gp1.is_zero()) throw domain_error("chua: constraint violated: gamma != -1");
    if (alpha == Rational(2) * gp1 * gp1)
        throw domain_error("chua: constraint violated: alpha != 2(gamma+1)^2");
    if (Rational(2) * alpha == gp1 * gp1)
        throw domain_error("chua: constraint violated: 2 alpha != (gamma+1)^2");
    if (alpha == -gamma - Rational(1))
        throw domain_error("chua: constraint violated: alpha != -gamma-1");
    if (omega0sq().sign() <= 0)
        throw domain_error("chua: constraint violated: omega0^2 must be positive");
}

Rational ChuaParams::omega0sq() const {
    Rational gp1 = gamma + Rational(1);
    return -(gp1 * gp1 * gp1 + alpha * (Rational(2) * gamma + Rational(1))) / gp1;
}

std::pair<Rational, Rational> ChuaParams::mu() const {
    Rational gp1 = gamma + Rational(1);
    Rational D = (Rational(2) * alpha - gp1 * gp1) * (alpha - Rational(2) * gp1 * gp1);
    Rational mu1 = Rational(3) * alpha * alpha * a * (Rational(2) * alpha + gp1 * gp1) / D;
    Rational mu2 = Rational(3) * alpha * alpha * a * gp1 * (Rational(3) * alpha - gp1 * gp1) / D;
    return {mu1, mu2};
}

namespace {

// Minimal dense cubic-polynomial arithmetic over a scalar S, used to push the
// oscillator through the linearizing substitution in either exact or floating
// arithmetic.
template <typename S>
struct TriPoly {
    std::map<Exp3, S> t;

    static TriPoly var(int axis) {
        TriPoly p;
        Exp3 e{0, 0, 0};
        e[axis] = 1;
        p.t[e] = S(1);
        return p;
    }
    void add(const Exp3& e, const S& c) {
        auto it = t.find(e);
        if (it == t.end())
            t.emplace(e, c);
        else
            it->second = it->second + c;
    }
    friend TriPoly operator+(const TriPoly& a, const TriPoly& b) {
        TriPoly r = a;
        for (auto& [e, c] : b.t) r.add(e, c);
        return r;
    }
    friend TriPoly operator*(const S& s, const TriPoly& p) {
        TriPoly r;
        for (auto& [e, c] : p.t) r.t[e] = s * c;
        return r;
    }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b) {
        TriPoly r;
        for (auto& [ea, ca] : a.t)
            for (auto& [eb, cb] : b.t)
                r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
};

template <typename S>
struct Mat3 {
    S v[3][3];
    Mat3 inverse(const S& det) const {
        Mat3 adj;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
                adj.v[j][i] = v[r0][c0] * v[r1][c1] - v[r0][c1] * v[r1][c0];
            }
        Mat3 inv;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) inv.v[i][j] = adj.v[i][j] / det;
        return inv;
    }
    S det() const {
        return v[0][0] * (v[1][1] * v[2][2] - v[1][2] * v[2][1]) -
               v[0][1] * (v[1][0] * v[2][2] - v[1][2] * v[2][0]) +
               v[0][2] * (v[1][0] * v[2][1] - v[1][1] * v[2][0]);
    }
};

// Transformed cubic coefficients for generic scalar S. Returns per-component
// coefficient maps of the new system; verifies the linear part is the exact
// rotation Jordan block (within tol for floating S).
template <typename S>
std::array<std::map<Exp3, S>, 3> transform_chua(const S& alpha, const S& gamma, const S& a,
                                                const S& w0, const S& mu1, const S& mu2,
                                                double tol, bool* jordan_ok) {
    S one(1);
    S gp1 = gamma + one;
    S c = S(0) - gp1 / alpha;
    S beta = S(0) - gamma * (alpha + gp1) / gp1;
    S P = gp1 / ((alpha + gp1) * gamma);
    S Q = gp1 / (alpha + gp1);

    // linearizing transformation (old = M * new); overall scale omega0
    Mat3<S> M;
    M.v[0][0] = w0;
    M.v[0][1] = S(0);
    M.v[0][2] = S(0) - w0;
    M.v[1][0] = w0 * Q;
    M.v[1][1] = w0 * Q * w0 / gamma;
    M.v[1][2] = S(0) - w0 * Q;
    M.v[2][0] = S(0) - w0 * P * gamma * alpha / gp1;
    M.v[2][1] = w0 * P * w0 * gp1;
    M.v[2][2] = S(0) - w0 * P * (alpha + gp1 * gp1);
    Mat3<S> Minv = M.inverse(M.det());

    // old variables as linear polynomials in the new ones
    TriPoly<S> old[3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Exp3 e{0, 0, 0};
            e[j] = 1;
            old[i].add(e, M.v[i][j]);
        }

    // oscillator components in the old variables
    TriPoly<S> F[3];
    F[0] = (S(0) - gamma) * old[0] + (S(0) - beta) * old[1];
    F[1] = old[2] + (S(0) - one) * old[1] + old[0] + mu1 * (old[2] * old[2] * old[1]);
    F[2] = alpha * ((S(0) - c) * old[2] + old[1] + (S(0) - a) * (old[2] * old[2] * old[2])) +
           mu2 * (old[2] * old[2] * old[1]);

    std::array<std::map<Exp3, S>, 3> out;
    S j_expect[3][3] = {{S(0), S(0), S(0)}, {S(0), S(0), one}, {S(0), S(0) - one, S(0)}};
    *jordan_ok = true;
    for (int i = 0; i < 3; ++i) {
        TriPoly<S> comp;
        for (int j = 0; j < 3; ++j) comp = comp + (Minv.v[i][j] / w0) * F[j];
        for (auto& [e, coef] : comp.t) {
            int deg = e[0] + e[1] + e[2];
            if (deg == 1) {
                int axis = e[0] == 1 ? 0 : (e[1] == 1 ? 1 : 2);
                S diff = coef - j_expect[i][axis];
                if constexpr (std::is_same_v<S, Rational>) {
                    if (!diff.is_zero()) *jordan_ok = false;
                } else {
                    if (std::abs(diff) > tol) *jordan_ok = false;
                }
            } else if (deg == 3) {
                if constexpr (std::is_same_v<S, Rational>) {
                    if (!coef.is_zero()) out[i][e] = coef;
                } else {
                    if (std::abs(coef) > 0) out[i][e] = coef;
                }
            } else {
                // no quadratic or higher-order terms can appear
                if constexpr (std::is_same_v<S, Rational>) {
                    if (!coef.is_zero()) *jordan_ok = false;
                } else {
                    if (std::abs(coef) > tol) *jordan_ok = false;
                }
            }
        }
    }
    return out;
}

template <typename S>
S get_coef(const std::map<Exp3, S>& m, const Exp3& e) {
    auto it = m.find(e);
    return it == m.end() ? S(0) : it->second;
}

}  // namespace

ChuaReport chua_pipeline(const ChuaParams& params) {
    params.validate();
    ChuaReport rep;
    rep.mode = params.mode;
    rep.alpha = params.alpha;
    rep.gamma = params.gamma;
    rep.a = params.a;
    rep.c = params.c();
    rep.beta = params.beta();
    rep.omega0sq = params.omega0sq();
    rep.mu = params.mu();

    if (params.mode == ChuaMode::Exact) {
        Rational w0;
        if (!rational_nth_root(rep.omega0sq, 2, w0))
            throw domain_error(
                "chua: exact mode requires omega0^2 to be a perfect rational square; "
                "use float mode for these parameters");
        rep.omega0 = w0;
        bool jordan_ok = false;
        auto maps = transform_chua<Rational>(params.alpha, params.gamma, params.a, w0,
                                             rep.mu.first, rep.mu.second, 0.0, &jordan_ok);
        if (!jordan_ok)
            throw std::logic_error("chua: transformed linear part is not the rotation Jordan form");
        CubicSystem sys;
        sys.a = maps[0];
        sys.b = maps[1];
        sys.c = maps[2];
        rep.cubic = sys;
        rep.membership = membership_relations(sys);
        ExtractionResult ex = extract_coefficients(sys);
        rep.coeffs = ex;
        // cross-validate the closed forms against the homological solve
        CubicNF nf = classical_nf_cubic(sys);
        if (rep.membership->verdict) {
            if (!(nf.a0 == ex.a0 && nf.a1 == ex.a1 && nf.b0 == ex.b0 && nf.b1 == ex.b1 &&
                  nf.e1.is_zero() && nf.e2.is_zero()))
                throw std::logic_error("chua: extraction disagrees with the homological solve");
        }
        LieElement w;
        w.add({Family::TZ2, 0, 0}, Rational(1));
        w.add({Family::H, 0, 1}, ex.a0);
        w.add({Family::H, 1, 2}, ex.a1);
        w.add({Family::TZ2, 0, 1}, ex.b0);
        w.add({Family::TZ2, 1, 2}, ex.b1);
        rep.normal_form = w;
        rep.r = ex.a1.is_zero() ? std::optional<int>() : std::optional<int>(1);
        rep.s = ex.b1.is_zero() ? std::optional<int>() : std::optional<int>(1);
        // grouping scalars of the assembled normal form
        Rational gp1 = params.gamma + Rational(1);
        Rational gH = ex.a0 * (Rational(2) * params.gamma) / (Rational(3) * gp1);
        Rational gT = ex.b1 * (params.alpha + gp1) / params.alpha;
        rep.groupings = std::make_pair(gH, gT);
    } else {
        double al = params.alpha.to_double(), ga = params.gamma.to_double(),
               av = params.a.to_double();
        double w0 = std::sqrt(rep.omega0sq.to_double());
        rep.omega0_f = w0;
        bool jordan_ok = false;
        auto maps = transform_chua<double>(al, ga, av, w0, rep.mu.first.to_double(),
                                           rep.mu.second.to_double(), kChuaFloatTol, &jordan_ok);
        if (!jordan_ok)
            throw std::logic_error("chua: transformed linear part is not the rotation Jordan form");
        auto A = [&](Exp3 e) { return get_coef(maps[0], e); };
        auto B = [&](Exp3 e) { return get_coef(maps[1], e); };
        auto C = [&](Exp3 e) { return get_coef(maps[2], e); };
        rep.residuals_f[0] = A({1, 0, 2}) + A({1, 2, 0}) + B({0, 1, 2}) + 3 * B({0, 3, 0}) +
                             3 * C({0, 0, 3}) + C({0, 2, 1});
        rep.residuals_f[1] = 3 * A({3, 0, 0}) + B({2, 1, 0}) + C({2, 0, 1});
        rep.membership_f = std::abs(rep.residuals_f[0]) < kChuaFloatTol &&
                           std::abs(rep.residuals_f[1]) < kChuaFloatTol;
        rep.coeffs_f[0] = -0.25 * (C({0, 2, 1}) + 3 * C({0, 0, 3}) + 3 * B({0, 3, 0}) + B({0, 1, 2}));
        rep.coeffs_f[1] = A({3, 0, 0});
        rep.coeffs_f[2] =
            0.125 * (-3 * C({0, 3, 0}) - C({0, 1, 2}) + B({0, 2, 1}) + 3 * B({0, 0, 3}));
        rep.coeffs_f[3] = 0.5 * (B({2, 0, 1}) - C({2, 1, 0}));
    }
    return rep;
}

}  // namespace snf
