#include <doctest.h>

#include <random>

#include "snf/normalform.hpp"

using namespace snf;

namespace {

LieElement h(int l, int k, Rational c = Rational(1)) {
    return LieElement({Family::H, l, k}, c);
}
LieElement t(int l, int k, Rational c = Rational(1)) {
    return LieElement({Family::TZ2, l, k}, c);
}

LieElement seed_winf() {
    // r = 1, s = 1, a_2 = 1/3, b_1 = 2, b_3 = -1
    LieElement w = t(0, 0) + h(0, 1) + h(1, 2) + h(2, 4, rat(1, 3)) + t(1, 2, Rational(2)) +
                   t(3, 6, Rational(-1));
    return w;
}

LieElement random_generator(std::mt19937& rng, int gmin, int gmax, int r) {
    std::uniform_int_distribution<int> dnum(-6, 6), dden(1, 5);
    LieElement g;
    for (int l = 0; l <= 12; ++l)
        for (int k = std::max(2 * l, 1); k <= 24; ++k) {
            for (Family fam : {Family::H, Family::TZ2}) {
                BasisIndex idx{fam, l, k};
                if (!idx.valid()) continue;
                if (idx == BasisIndex{Family::TZ2, 0, 0}) continue;
                int gr = grading(idx, GradingScheme::RAdapted, r);
                if (gr < gmin || gr > gmax) continue;
                if (dnum(rng) > 2) continue;
                g.add(idx, rat(dnum(rng), dden(rng)));
            }
        }
    return g;
}

}  // namespace

TEST_CASE("apply_transformation basics") {
    LieElement field = t(0, 0) + h(0, 1);
    CHECK(apply_transformation(field, LieElement{}, 8) == field);

    // field = H^0_1, gen = c H^m_n: first order adds -c(6m-n+1) H^m_{n+1}
    LieElement f2 = h(0, 1);
    LieElement gen = h(1, 4, rat(1, 7));
    LieElement out = apply_transformation(f2, gen, 12);
    CHECK(out.coeff({Family::H, 1, 5}) == rat(1, 7) * Rational(-(6 - 4 + 1)));

    // round trip: gen then -gen composes to the identity
    std::mt19937 rng(123);
    for (int trial = 0; trial < 5; ++trial) {
        LieElement w = seed_winf() + h(0, 3, rat(1, 2)) + t(0, 2, rat(-2, 3));
        LieElement g = random_generator(rng, 1, 4, 1);
        LieElement fwd = apply_transformation(w, g, 10, GradingScheme::RAdapted, 1);
        LieElement back = apply_transformation(fwd, -g, 10, GradingScheme::RAdapted, 1);
        CHECK(back == apply_transformation(w, LieElement{}, 10, GradingScheme::RAdapted, 1));
    }

    // general-family grade-0 generators are rejected
    CHECK_THROWS_AS(apply_transformation(LieElement({Family::F, 0, 1}, Rational(1)),
                                         LieElement({Family::F, 0, 0}, Rational(1)), 4),
                    domain_error);
}

TEST_CASE("second level: already in style") {
    LieElement w = t(0, 0) + h(0, 1) + h(1, 2, rat(2, 5)) + t(1, 2, rat(7, 3));
    NFInput in{w, 9};
    NFReport rep = second_level_nf(in);
    CHECK(rep.output == w);
    CHECK(rep.generators.empty());
    CHECK(rep.obstructions.empty());
    CHECK(rep.r == 1);
    CHECK(rep.s == 1);
}

TEST_CASE("second level removes a removable term") {
    Rational c = rat(5, 4);
    LieElement w = t(0, 0) + h(0, 1) + h(0, 3, c);
    NFReport rep = second_level_nf(NFInput{w, 8});
    CHECK(rep.output.coeff({Family::H, 0, 3}).is_zero());
    // one generator, proportional to H^0_2 with coefficient c / (6*0-3+2) = -c
    REQUIRE(rep.generators.size() >= 1);
    CHECK(rep.generators[0].gen.coeff({Family::H, 0, 2}) == -c);
    // conjugacy soundness
    CHECK(replay(NFInput{w, 8}, rep) == rep.output);
}

TEST_CASE("second level obstruction at H^1_8") {
    LieElement w = t(0, 0) + h(0, 1) + h(1, 8, rat(3, 2));
    NFReport rep = second_level_nf(NFInput{w, 9});
    CHECK(rep.output.coeff({Family::H, 1, 8}) == rat(3, 2));
    REQUIRE(rep.obstructions.size() == 1);
    CHECK(rep.obstructions[0].idx == BasisIndex{Family::H, 1, 8});
    CHECK(rep.obstructions[0].stage == "second_level");
}

TEST_CASE("second level requires the leading term") {
    LieElement w = t(0, 0) + h(1, 2);
    CHECK_THROWS_WITH_AS(second_level_nf(NFInput{w, 6}),
                         "second_level_nf: leading term absent - outside Theorem scope",
                         domain_error);
    LieElement norot = h(0, 1);
    CHECK_THROWS_AS(second_level_nf(NFInput{norot, 6}), domain_error);
}

TEST_CASE("detect_and_rescale") {
    // a^(2)_1 = 1 already: identity rescale
    NFReport rep = second_level_nf(NFInput{t(0, 0) + h(0, 1) + h(1, 2), 6});
    NFReport rs = detect_and_rescale(rep);
    CHECK(rs.rescale->exact);
    CHECK(rs.rescale->root == Rational(1));
    CHECK(rs.output == rep.output);

    // a^(2)_1 = 16, r = 1: factor (1/16)^{1/2} = 1/4, coefficient becomes 1,
    // and an l = 2 term scales by (1/16)^2
    LieElement w = t(0, 0) + h(0, 1) + h(1, 2, Rational(16)) + h(2, 4, Rational(3));
    rs = detect_and_rescale(second_level_nf(NFInput{w, 9}));
    CHECK(rs.r == 1);
    CHECK(rs.rescale->exact);
    CHECK(rs.rescale->base == rat(1, 16));
    CHECK(rs.rescale->two_r == 2);
    CHECK(rs.output.coeff({Family::H, 1, 2}) == Rational(1));
    CHECK(rs.output.coeff({Family::H, 2, 4}) == Rational(3) * rat(1, 256));

    // negative coefficient: |.|-rescale preserves the sign
    rs = detect_and_rescale(second_level_nf(NFInput{t(0, 0) + h(0, 1) + h(1, 2, Rational(-1)), 6}));
    CHECK(rs.output.coeff({Family::H, 1, 2}) == Rational(-1));
    CHECK(rs.rescale->sign == -1);

    // r = 1 roots are always rational: coefficient 2 rescales exactly to 1
    rs = detect_and_rescale(second_level_nf(NFInput{t(0, 0) + h(0, 1) + h(1, 2, Rational(2)), 6}));
    CHECK(rs.rescale->exact);
    CHECK(rs.rescale->root == rat(1, 2));
    CHECK(rs.output.coeff({Family::H, 1, 2}) == Rational(1));

    // r = 2 with a non-square ratio: carried symbolically in the scaled frame
    rs = detect_and_rescale(second_level_nf(NFInput{t(0, 0) + h(0, 1) + h(2, 4, Rational(2)), 9}));
    CHECK(rs.r == 2);
    CHECK_FALSE(rs.rescale->exact);
    CHECK(rs.rescale->base == rat(1, 2));
    CHECK(rs.rescale->two_r == 4);
    CHECK(rs.output.coeff({Family::H, 2, 4}) == Rational(2));

    // r = 2 with a perfect-square ratio applies exactly: root = (1/16)^(1/2)
    rs = detect_and_rescale(second_level_nf(NFInput{t(0, 0) + h(0, 1) + h(2, 4, Rational(16)), 9}));
    CHECK(rs.rescale->exact);
    CHECK(rs.rescale->root == rat(1, 4));
    CHECK(rs.output.coeff({Family::H, 2, 4}) == Rational(1));

    // r undefined
    NFReport flat = second_level_nf(NFInput{t(0, 0) + h(0, 1) + t(1, 2), 6});
    CHECK_THROWS_AS(detect_and_rescale(flat), domain_error);
}

TEST_CASE("lemma generators: boundary examples and error cases") {
    // (m=0, n=2, r=1, H): denominator Pochhammer hits zero
    CHECK_THROWS_WITH_AS(lemma_generators(0, 2, 1, Family::H),
                         "lemma_generators: transformation undefined for these indices",
                         domain_error);

    // (m=1, n=3, r=1, H): single term (1/5) H^1_2 under the pinned bracket
    // convention, residual 0; the identity is re-verified on construction
    LemmaTransformation lt = lemma_generators(1, 3, 1, Family::H);
    CHECK(lt.gen == h(1, 2, rat(1, 5)));
    CHECK(lt.residual_coeff.is_zero());
    LieElement hr = h(0, 1) + h(1, 2);
    CHECK((bracket(lt.gen, hr) + h(1, 3)).is_zero());

    // minimal n = 2m+1 cases emit a single generator term (identity self-checked)
    for (int m = 1; m <= 3; ++m) {
        LemmaTransformation one = lemma_generators(m, 2 * m + 1, 1, Family::H);
        CHECK(one.gen.terms().size() == 1);
    }

    // every defined case in the acceptance grid self-verifies; spot-check values here
    LemmaTransformation t02 = lemma_generators(0, 2, 1, Family::TZ2);
    CHECK(t02.gen.coeff({Family::TZ2, 0, 1}) == Rational(-1));
    CHECK(t02.gen.coeff({Family::TZ2, 1, 2}) == rat(-3, 4));
    CHECK(t02.residual_coeff == rat(3, 2));
    CHECK(t02.residual_idx == BasisIndex{Family::TZ2, 2, 4});
}

TEST_CASE("unique normal form: round-trip conjugacy recovers the seed") {
    LieElement seed = seed_winf();
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 3; ++trial) {
        LieElement g = trial == 0 ? random_generator(rng, 2, 2, 1)
                                  : random_generator(rng, 2, 5, 1);
        LieElement conj = apply_transformation(seed, g, 12, GradingScheme::RAdapted, 1);
        NFReport rep = unique_nf(NFInput{conj, 12});
        CHECK(rep.r == 1);
        CHECK(rep.s == 1);
        CHECK(rep.output == seed);
        // forced congruence slots stay exactly zero
        for (int i : {2, 7, 12}) CHECK(rep.output.coeff({Family::TZ2, i, 2 * i}).is_zero());
        CHECK(replay(NFInput{conj, 12}, rep) == rep.output);
    }
}

TEST_CASE("unique normal form: already normal input is unchanged") {
    LieElement seed = seed_winf();
    NFReport rep = unique_nf(NFInput{seed, 12});
    CHECK(rep.output == seed);
    for (auto& st : rep.generators) CHECK(st.gen.is_zero());
}

TEST_CASE("congruence slots are reported as invariants when present") {
    // plant a forced-slot coefficient; the kernel probe measures a zero net
    // response, so the slot must be reported, not forced
    LieElement w = seed_winf() + t(2, 4, rat(7, 5));
    NFReport rep = unique_nf(NFInput{w, 12});
    CHECK(rep.output.coeff({Family::TZ2, 2, 4}) == rat(7, 5));
    bool noted = false;
    for (auto& ob : rep.obstructions)
        if (ob.stage == "congruence" && ob.idx == BasisIndex{Family::TZ2, 2, 4}) noted = true;
    CHECK(noted);
    // the rest of the output is still the seed
    LieElement expect = seed_winf() + t(2, 4, rat(7, 5));
    CHECK(rep.output == expect);
}

TEST_CASE("first integral of the normal form") {
    // r = 1, no higher a_i: s = x rho^4 + rho^2 x^3
    NFReport rep = unique_nf(NFInput{t(0, 0) + h(0, 1) + h(1, 2), 8});
    BivarPoly s = nf_first_integral(rep);
    BivarPoly expect = BivarPoly::monomial(1, 4) + BivarPoly::monomial(3, 2);
    CHECK(s == expect);

    // general series of the family: random coefficients annihilate
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> dnum(-4, 4), dden(1, 3);
    LieElement v;
    v.add({Family::TZ2, 0, 0}, Rational(1));
    for (int k = 1; k <= 4; ++k)
        for (int l = 0; 2 * l <= k; ++l) v.add({Family::H, l, k}, rat(dnum(rng), dden(rng)));
    // dirderiv of the (x, rho)-part vanishes: verified inside nf_first_integral
    NFReport fake;
    fake.output = v;
    BivarPoly sv = nf_first_integral(fake);
    CHECK_FALSE(sv.is_zero());
}

TEST_CASE("unique_nf propagates missing r") {
    LieElement w = t(0, 0) + h(0, 1) + t(1, 2, Rational(3));
    CHECK_THROWS_AS(unique_nf(NFInput{w, 8}), domain_error);
}

TEST_CASE("unique_nf with r = 2 and a symbolic rescale frame") {
    // leading H^2_4 with a non-square ratio: coefficients stay in the scaled
    // frame (stored value of an index with x-degree 2l means stored * base^{l/2})
    LieElement w = t(0, 0) + h(0, 1) + h(2, 4, Rational(3)) + h(0, 4, rat(1, 2)) +
                   t(2, 4, rat(5, 7));
    NFInput in{w, 10};
    NFReport rep = unique_nf(in);
    CHECK(rep.r == 2);
    CHECK(rep.s == 2);
    REQUIRE(rep.rescale.has_value());
    CHECK_FALSE(rep.rescale->exact);
    CHECK(rep.rescale->base == rat(1, 3));
    CHECK(rep.rescale->two_r == 4);
    // the scaled-frame leading coefficient is reported unchanged
    CHECK(rep.output.coeff({Family::H, 2, 4}) == Rational(3));
    // removable off-style content was eliminated; replay matches the output
    CHECK(rep.output.coeff({Family::H, 0, 4}).is_zero());
    CHECK(replay(in, rep) == rep.output);
}

TEST_CASE("unique_nf style soundness on a dense input") {
    // every output term is style or recorded in obstructions; no silent residue
    LieElement w = t(0, 0) + h(0, 1);
    for (int k = 1; k <= 8; ++k)
        for (int l = 0; 2 * l <= k; ++l) {
            w.add({Family::H, l, k}, Rational(1) / rat(3 + l + k));
            if (!(l == 0 && k == 1))
                w.add({Family::TZ2, l, k}, Rational(1) / rat(5 + l + k));
        }
    NFInput in{w, 8};
    NFReport rep = unique_nf(in);
    for (auto& [idx, c] : rep.output.terms()) {
        if (in_unique_style(idx)) continue;
        bool listed = false;
        for (auto& ob : rep.obstructions)
            if (ob.idx == idx) listed = true;
        CHECK(listed);
    }
    CHECK(replay(in, rep) == rep.output);
    // determinism: identical reports on a second run
    NFReport rep2 = unique_nf(in);
    CHECK(rep2.output == rep.output);
    CHECK(rep2.generators.size() == rep.generators.size());
}
