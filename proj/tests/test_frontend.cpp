#include <doctest.h>

#include <cmath>
#include <random>

#include "snf/frontend.hpp"

using namespace snf;

namespace {

std::mt19937& rng() {
    static std::mt19937 r(987654);
    return r;
}

Rational rnd() {
    std::uniform_int_distribution<int> dnum(-8, 8), dden(1, 6);
    return rat(dnum(rng()), dden(rng()));
}

std::vector<Exp3> mon3() {
    std::vector<Exp3> out;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j + i <= 3; ++j) out.push_back({i, j, 3 - i - j});
    return out;
}

CubicSystem random_system() {
    CubicSystem sys;
    for (auto& e : mon3()) {
        sys.a[e] = rnd();
        sys.b[e] = rnd();
        sys.c[e] = rnd();
    }
    return sys;
}

// adjust two coefficients so both membership relations hold exactly
CubicSystem make_member(CubicSystem sys) {
    sys.a[{1, 0, 2}] = -(sys.ca({1, 2, 0}) + sys.cb({0, 1, 2}) + Rational(3) * sys.cb({0, 3, 0}) +
                         Rational(3) * sys.cc({0, 0, 3}) + sys.cc({0, 2, 1}));
    sys.c[{2, 0, 1}] = -(Rational(3) * sys.ca({3, 0, 0}) + sys.cb({2, 1, 0}));
    return sys;
}

}  // namespace

TEST_CASE("classical cubic normal form basics") {
    CubicSystem zero;
    CubicNF nf = classical_nf_cubic(zero);
    CHECK(nf.a0.is_zero());
    CHECK(nf.a1.is_zero());
    CHECK(nf.b0.is_zero());
    CHECK(nf.b1.is_zero());
    CHECK(nf.e1.is_zero());
    CHECK(nf.e2.is_zero());
    CHECK(nf.resonant.is_zero());

    // x-dot = x^3 alone: resonant part contains H^1_2 with coefficient 1
    CubicSystem cube;
    cube.a[{3, 0, 0}] = Rational(1);
    nf = classical_nf_cubic(cube);
    CHECK(nf.a1 == Rational(1));
    CHECK(nf.a0.is_zero());
    CHECK(nf.e2 == rat(3, 2));  // x^3 d_x = H^1_2 + 3/2 x^2 rho d_rho
    CHECK_FALSE(membership_relations(cube).verdict);
}

TEST_CASE("round trip: removing the generator leaves the resonant part") {
    for (int trial = 0; trial < 4; ++trial) {
        CubicSystem sys = random_system();
        CubicNF nf = classical_nf_cubic(sys);
        VField3 rot{RatFunc3(Poly3()), RatFunc3(Poly3::variable(2)),
                    RatFunc3(-Poly3::variable(1))};
        // first-order action of the cubic generator on the rotation
        VField3 transformed = sys.cubic_field() + lie_bracket(nf.generator, rot);
        CHECK(transformed == nf.resonant);
    }
}

TEST_CASE("membership relations and residuals") {
    CubicSystem zero;
    MembershipResult m = membership_relations(zero);
    CHECK(m.verdict);
    CHECK(m.residual1.is_zero());
    CHECK(m.residual2.is_zero());

    CubicSystem one;
    one.a[{1, 0, 2}] = Rational(1);
    m = membership_relations(one);
    CHECK_FALSE(m.verdict);
    CHECK(m.residual1 == Rational(1));
    CHECK(m.residual2.is_zero());
}

TEST_CASE("membership verdict is equivalent to vanishing complement") {
    for (int trial = 0; trial < 20; ++trial) {
        CubicSystem sys = make_member(random_system());
        CHECK(membership_relations(sys).verdict);
        CubicNF nf = classical_nf_cubic(sys);
        CHECK(nf.e1.is_zero());
        CHECK(nf.e2.is_zero());
        // violating systems have nonzero complement
        CubicSystem bad = sys;
        bad.a[{1, 0, 2}] = bad.ca({1, 0, 2}) + Rational(1);
        MembershipResult mb = membership_relations(bad);
        CHECK_FALSE(mb.verdict);
        CHECK(mb.residual1 == Rational(1));
        CubicNF nb = classical_nf_cubic(bad);
        bool complement_vanishes = nb.e1.is_zero() && nb.e2.is_zero();
        CHECK_FALSE(complement_vanishes);
    }
}

TEST_CASE("extraction equals the projection on relation-satisfying systems") {
    // c_{0,2,1} = -4 with a_{1,0,2} = 4 restoring the first relation: a0 = 1
    CubicSystem s1;
    s1.c[{0, 2, 1}] = Rational(-4);
    s1.a[{1, 0, 2}] = Rational(4);
    CHECK(membership_relations(s1).verdict);
    ExtractionResult e1 = extract_coefficients(s1);
    CHECK(e1.a0 == Rational(1));
    CubicNF n1 = classical_nf_cubic(s1);
    CHECK(n1.a0 == e1.a0);

    CubicSystem zero;
    ExtractionResult ez = extract_coefficients(zero);
    CHECK(ez.a0.is_zero());
    CHECK(ez.b0.is_zero());
    CHECK(ez.a1.is_zero());
    CHECK(ez.b1.is_zero());

    for (int trial = 0; trial < 20; ++trial) {
        CubicSystem sys = make_member(random_system());
        ExtractionResult ex = extract_coefficients(sys);
        CHECK(ex.membership);
        CubicNF nf = classical_nf_cubic(sys);
        CHECK(ex.a0 == nf.a0);
        CHECK(ex.a1 == nf.a1);
        CHECK(ex.b0 == nf.b0);
        CHECK(ex.b1 == nf.b1);
    }
}

TEST_CASE("chua parameter validation") {
    ChuaParams p{rat(-16, 3), Rational(1), Rational(1)};
    p.validate();  // the designated instance is admissible
    CHECK_THROWS_WITH_AS(chua_pipeline({Rational(0), Rational(1), Rational(1)}),
                         "chua: constraint violated: alpha != 0", domain_error);
    CHECK_THROWS_AS(chua_pipeline({Rational(1), Rational(0), Rational(1)}), domain_error);
    CHECK_THROWS_AS(chua_pipeline({Rational(1), Rational(1), Rational(0)}), domain_error);
    CHECK_THROWS_AS(chua_pipeline({Rational(8), Rational(1), Rational(1)}), domain_error);  // 2(g+1)^2
    CHECK_THROWS_AS(chua_pipeline({Rational(2), Rational(1), Rational(1)}), domain_error);  // (g+1)^2/2
    CHECK_THROWS_AS(chua_pipeline({Rational(-2), Rational(1), Rational(1)}), domain_error); // -g-1
    // positive omega0^2 required
    CHECK_THROWS_AS(chua_pipeline({Rational(10), Rational(3), Rational(1)}), domain_error);
    // exact mode with irrational omega0 suggests float mode
    ChuaParams pf{Rational(-7), Rational(1), Rational(1)};
    CHECK_THROWS_AS(chua_pipeline(pf), domain_error);
    pf.mode = ChuaMode::Float;
    ChuaReport rf = chua_pipeline(pf);
    CHECK(rf.membership_f);
    CHECK(std::abs(rf.residuals_f[0]) < kChuaFloatTol);
    CHECK(std::abs(rf.residuals_f[1]) < kChuaFloatTol);
}

TEST_CASE("chua exact designated instance") {
    ChuaParams p{rat(-16, 3), Rational(1), Rational(1)};
    ChuaReport rep = chua_pipeline(p);
    CHECK(rep.c == rat(3, 8));
    CHECK(rep.beta == rat(5, 3));
    CHECK(rep.omega0sq == Rational(4));
    CHECK(rep.omega0 == Rational(2));
    CHECK(rep.mu.first == rat(-32, 11));
    CHECK(rep.mu.second == rat(-192, 11));
    CHECK(rep.membership->verdict);
    CHECK(rep.membership->residual1.is_zero());
    CHECK(rep.membership->residual2.is_zero());
    CHECK(rep.coeffs->a0 == rat(1024, 165));
    CHECK(rep.coeffs->a1 == rat(8192, 2475));
    CHECK(rep.coeffs->b0 == rat(-128, 55));
    CHECK(rep.coeffs->b1 == rat(-1024, 275));
    CHECK(rep.r == 1);
    CHECK(rep.s == 1);

    // bit-for-bit reproducibility
    ChuaReport rep2 = chua_pipeline(p);
    CHECK(rep2.coeffs->a0 == rep.coeffs->a0);
    CHECK(rep2.cubic->a == rep.cubic->a);
    CHECK(rep2.cubic->b == rep.cubic->b);
    CHECK(rep2.cubic->c == rep.cubic->c);
}

TEST_CASE("chua second exact instance and grouping identities") {
    ChuaParams p{rat(-54, 5), Rational(2), Rational(1)};
    ChuaReport rep = chua_pipeline(p);
    CHECK(rep.omega0 == Rational(3));
    CHECK(rep.membership->verdict);
    CHECK(rep.coeffs->a0 == rat(39366, 5525));
    CHECK(rep.coeffs->a1 == rat(419904, 71825));
    CHECK(rep.coeffs->b0 == rat(-19683, 70720));
    CHECK(rep.coeffs->b1 == rat(-19683, 28730));
    // grouping identities: a1 = gH * 2 alpha gamma / ((gamma+1)(alpha+gamma+1)),
    // b0 = gT (gamma+1)^2 / (4 gamma^2)
    Rational gp1 = rep.gamma + Rational(1);
    Rational gH = rep.groupings->first, gT = rep.groupings->second;
    CHECK(rep.coeffs->a0 == gH * Rational(3) * gp1 / (Rational(2) * rep.gamma));
    CHECK(rep.coeffs->a1 == gH * Rational(2) * rep.alpha * rep.gamma / (gp1 * (rep.alpha + gp1)));
    CHECK(rep.coeffs->b0 == gT * gp1 * gp1 / (Rational(4) * rep.gamma * rep.gamma));
    CHECK(rep.coeffs->b1 == gT * rep.alpha / (rep.alpha + gp1));
}

TEST_CASE("float mode agrees with exact mode on a rational-omega instance") {
    ChuaParams p{rat(-16, 3), Rational(1), Rational(1)};
    ChuaParams pf = p;
    pf.mode = ChuaMode::Float;
    ChuaReport re = chua_pipeline(p);
    ChuaReport rf = chua_pipeline(pf);
    CHECK(std::abs(rf.coeffs_f[0] - re.coeffs->a0.to_double()) < 1e-9);
    CHECK(std::abs(rf.coeffs_f[1] - re.coeffs->a1.to_double()) < 1e-9);
    CHECK(std::abs(rf.coeffs_f[2] - re.coeffs->b0.to_double()) < 1e-9);
    CHECK(std::abs(rf.coeffs_f[3] - re.coeffs->b1.to_double()) < 1e-9);
}
