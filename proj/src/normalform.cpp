#include "snf/normalform.hpp"

#include <algorithm>

namespace snf {

namespace {

const BasisIndex kRotation{Family::TZ2, 0, 0};
const BasisIndex kH01{Family::H, 0, 1};
const BasisIndex kTheta01{Family::TZ2, 0, 1};

int grade_of(const BasisIndex& idx, GradingScheme scheme, int r) {
    return grading(idx, scheme, r);
}

int min_grade(const LieElement& e, GradingScheme scheme, int r) {
    int g = INT32_MAX;
    for (auto& [i, c] : e.terms()) {
        if (algebra_of(i.family) == AlgebraKind::General)
            g = std::min(g, general_grading(i));
        else
            g = std::min(g, grade_of(i, scheme, r));
    }
    return g;
}

LieElement truncated(const LieElement& e, GradingScheme scheme, int r, int degree) {
    LieElement out;
    for (auto& [i, c] : e.terms())
        if (grade_of(i, scheme, r) <= degree) out.add(i, c);
    return out;
}

std::vector<BasisIndex> basis_at_grade(int g, GradingScheme scheme, int r) {
    std::vector<BasisIndex> out;
    if (scheme == GradingScheme::SecondLevel) {
        for (int l = 0; 2 * l <= g; ++l) {
            BasisIndex h{Family::H, l, g};
            if (h.valid()) out.push_back(h);
        }
        for (int l = 0; 2 * l <= g - 1; ++l) {
            BasisIndex t{Family::TZ2, l, g - 1};
            if (t.valid()) out.push_back(t);
        }
    } else {
        for (int l = 0; l <= g; ++l) {
            int rem = g - l;
            if (rem >= 0 && rem % r == 0) {
                BasisIndex h{Family::H, l, rem / r + 2 * l};
                if (h.valid()) out.push_back(h);
            }
            rem = g - r - l - 1;
            if (rem >= 0 && rem % r == 0) {
                BasisIndex t{Family::TZ2, l, rem / r + 2 * l};
                if (t.valid()) out.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool in_unique_style(const BasisIndex& idx) {
    if (idx == kRotation || idx == kTheta01 || idx == kH01) return true;
    return idx.k == 2 * idx.l;
}

void NFInput::validate() const {
    if (series.algebra() && *series.algebra() != AlgebraKind::Z2)
        throw domain_error("NFInput: series must live in the Z2 algebra");
    if (series.coeff(kRotation) != Rational(1))
        throw domain_error("NFInput: rotation coefficient must be 1");
    if (degree < 1) throw domain_error("NFInput: degree must be positive");
}

Rational NFInput::leading_coeff() const { return series.coeff(kH01); }

LieElement apply_transformation(const LieElement& field, const LieElement& gen, int degree,
                                GradingScheme scheme, int r) {
    if (gen.is_zero()) return truncated(field, scheme, r, degree);
    bool z2 = !gen.algebra() || *gen.algebra() == AlgebraKind::Z2;
    if (!z2) {
        // general-family transformation: degree grading, near-identity means k >= 1
        for (auto& [i, c] : gen.terms())
            if (general_grading(i) < 1)
                throw domain_error("apply_transformation: generator has grade-0 terms");
        LieElement out = field, term = field;
        Rational fact(1);
        for (int j = 1; j <= degree + 1; ++j) {
            LieElement full = bracket(gen, term);
            LieElement nt;
            for (auto& [i, c] : full.terms())
                if (general_grading(i) <= degree) nt.add(i, c);
            term = nt;
            if (term.is_zero()) break;
            fact *= Rational(j);
            out += (Rational(1) / fact) * term;
        }
        LieElement res;
        for (auto& [i, c] : out.terms())
            if (general_grading(i) <= degree) res.add(i, c);
        return res;
    }
    if (min_grade(gen, scheme, r) < 1)
        throw domain_error("apply_transformation: generator is not near-identity");
    LieElement out = truncated(field, scheme, r, degree);
    LieElement term = out;
    Rational fact(1);
    for (int j = 1; j <= 6 * degree + 8; ++j) {
        term = truncated(bracket(gen, term), scheme, r, degree);
        if (term.is_zero()) break;
        fact *= Rational(j);
        out += (Rational(1) / fact) * term;
    }
    return truncated(out, scheme, r, degree);
}

namespace {

// One exact linear solve at grade g: find a generator supported at grade
// (g - lead_grade) whose bracket against the leading part removes every
// removable non-style term at grade g. Deterministic: sources in index order,
// free variables zero. Returns the generator (empty when nothing to do).
LieElement solve_slice(const LieElement& w, int g, int lead_grade, GradingScheme scheme, int r) {
    std::vector<BasisIndex> sources;
    for (auto& s : basis_at_grade(g - lead_grade, scheme, r))
        if (!(s == kRotation)) sources.push_back(s);
    std::vector<BasisIndex> targets;
    for (auto& t : basis_at_grade(g, scheme, r))
        if (!in_unique_style(t)) targets.push_back(t);
    if (targets.empty() || sources.empty()) return {};

    std::vector<Rational> rhs(targets.size(), Rational(0));
    bool any = false;
    for (size_t i = 0; i < targets.size(); ++i) {
        rhs[i] = -w.coeff(targets[i]);
        if (!rhs[i].is_zero()) any = true;
    }
    if (!any) return {};

    LieElement lead;
    for (auto& [i, c] : w.terms())
        if (grade_of(i, scheme, r) == lead_grade) lead.add(i, c);

    size_t m = targets.size(), n = sources.size();
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n, Rational(0)));
    for (size_t j = 0; j < n; ++j) {
        LieElement img = bracket(LieElement(sources[j], Rational(1)), lead);
        for (size_t i = 0; i < m; ++i) A[i][j] = img.coeff(targets[i]);
    }
    // Gauss-Jordan, pivoting down the column order
    std::vector<int> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t sel = row;
        while (sel < m && A[sel][col].is_zero()) ++sel;
        if (sel == m) continue;
        std::swap(A[sel], A[row]);
        std::swap(rhs[sel], rhs[row]);
        Rational inv = Rational(1) / A[row][col];
        for (size_t c2 = 0; c2 < n; ++c2) A[row][c2] *= inv;
        rhs[row] *= inv;
        for (size_t r2 = 0; r2 < m; ++r2) {
            if (r2 == row || A[r2][col].is_zero()) continue;
            Rational f = A[r2][col];
            for (size_t c2 = 0; c2 < n; ++c2) A[r2][c2] -= f * A[row][c2];
            rhs[r2] -= f * rhs[row];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    // rows beyond `row` with nonzero rhs are inconsistent: those targets stay
    LieElement gen;
    for (size_t i = 0; i < pivot_col.size(); ++i) gen.add(sources[pivot_col[i]], rhs[i]);
    return gen;
}

// Ascending sweep removing everything first-order-removable against the leading
// part. Appends generator steps; obstruction collection is done by the caller.
LieElement sweep(LieElement w, int lead_grade, int degree, GradingScheme scheme, int r,
                 std::vector<GeneratorStep>* steps) {
    for (int g = lead_grade + 1; g <= degree; ++g) {
        LieElement gen = solve_slice(w, g, lead_grade, scheme, r);
        if (gen.is_zero()) continue;
        w = apply_transformation(w, gen, degree, scheme, r);
        if (steps) steps->push_back({scheme, r, g, gen});
    }
    return w;
}

void collect_obstructions(const LieElement& w, GradingScheme scheme, int r, int degree,
                          const std::string& stage, std::vector<Obstruction>* out) {
    for (auto& [i, c] : w.terms()) {
        if (in_unique_style(i)) continue;
        int g = grade_of(i, scheme, r);
        if (g <= degree) out->push_back({stage, g, i, c, "outside style, not removable at this level"});
    }
}

std::optional<int> detect_r(const LieElement& w) {
    for (auto& [i, c] : w.terms())
        if (i.family == Family::H && i.l >= 1 && i.k == 2 * i.l) return i.l;
    return std::nullopt;
}

std::optional<int> detect_s(const LieElement& w) {
    for (auto& [i, c] : w.terms())
        if (i.family == Family::TZ2 && i.l >= 1 && i.k == 2 * i.l) return i.l;
    return std::nullopt;
}

}  // namespace

NFReport second_level_nf(const NFInput& input) {
    input.validate();
    if (input.leading_coeff().is_zero())
        throw domain_error("second_level_nf: leading term absent - outside Theorem scope");
    NFReport rep;
    rep.degree = input.degree;
    rep.final_scheme = GradingScheme::SecondLevel;
    rep.second_stage_degree = input.degree;
    LieElement w = truncated(input.series, GradingScheme::SecondLevel, 1, input.degree);
    w = sweep(std::move(w), 1, input.degree, GradingScheme::SecondLevel, 1, &rep.generators);
    collect_obstructions(w, GradingScheme::SecondLevel, 1, input.degree, "second_level",
                         &rep.obstructions);
    rep.output = std::move(w);
    rep.r = detect_r(rep.output);
    rep.s = detect_s(rep.output);
    return rep;
}

NFReport detect_and_rescale(const NFReport& report) {
    NFReport rep = report;
    rep.r = detect_r(rep.output);
    rep.s = detect_s(rep.output);
    if (!rep.r) throw domain_error("detect_and_rescale: r undefined: all a^(2)_i vanish");
    int r = *rep.r;
    Rational ar = rep.output.coeff({Family::H, r, 2 * r});
    RescaleInfo info;
    info.base = Rational(1) / ar.abs();
    info.two_r = 2 * r;
    info.sign = ar.sign();
    Rational root;
    if (rational_nth_root(info.base, r, root)) {
        info.exact = true;
        info.root = root;  // = base^{1/r}; index with x-degree 2l scales by root^l
        LieElement scaled;
        for (auto& [i, c] : rep.output.terms()) {
            Rational f(1);
            for (int j = 0; j < i.l; ++j) f *= root;
            scaled.add(i, c * f);
        }
        rep.output = std::move(scaled);
    } else {
        info.exact = false;
    }
    rep.rescale = info;
    return rep;
}

LemmaTransformation lemma_generators(int m, int n, int r, Family family) {
    if (family != Family::H && family != Family::TZ2)
        throw domain_error("lemma_generators: Z2 families only");
    if (r < 1) throw domain_error("lemma_generators: r must be >= 1");
    if (n <= 2 * m || m < 0) throw domain_error("lemma_generators: requires n > 2m >= 0");
    BasisIndex{family, m, n}.require_valid();

    const Rational step(4 * r + 1);
    const bool hfam = family == Family::H;
    if (hfam && n == 1)
        throw domain_error("lemma_generators: transformation undefined for these indices");
    const Rational num_base = hfam ? rat(4LL * m * r - 2LL * n * r + 4 * m - n + 1)
                                   : rat(4LL * m * r - 2LL * n * r + 4 * m - n + 2 * r + 1);
    const Rational den_base = hfam ? rat(6 * m - n + 2) : rat(6 * m - n + 1);

    // all denominator factors needed by the largest Pochhammer must be nonzero
    for (int i = 0; i <= n - 2 * m - 1; ++i)
        if ((den_base + Rational(i) * step).is_zero())
            throw domain_error("lemma_generators: transformation undefined for these indices");

    LemmaTransformation out;
    for (int j = 0; j <= n - 2 * m - 1; ++j) {
        Rational c = Rational(j % 2 == 0 ? 1 : -1) * pochhammer(num_base, j, step) /
                     pochhammer(den_base, j + 1, step);
        if (!c.is_zero()) out.gen.add({family, j * r + m, 2 * j * r - j + n - 1}, c);
    }
    int dd = n * r + m - 2 * m * r;
    out.residual_idx = {family, dd, 2 * dd};
    if (hfam) {
        out.residual_coeff = Rational(n % 2 == 0 ? 1 : -1) * pochhammer(num_base, n - 2 * m, step) /
                             pochhammer(den_base, n - 2 * m, step);
    } else {
        out.residual_coeff = Rational(n % 2 == 0 ? 1 : -1) *
                             pochhammer(num_base, n - 2 * m - 1, step) /
                             (Rational(2) * pochhammer(den_base, n - 2 * m - 1, step));
    }

    // verify [gen, H_r] + basis = residual exactly before emitting
    LieElement Hr(kH01, Rational(1));
    Hr.add({Family::H, r, 2 * r}, Rational(1));
    LieElement lhs = bracket(out.gen, Hr) + LieElement({family, m, n}, Rational(1));
    LieElement rhs;
    rhs.add(out.residual_idx, out.residual_coeff);
    if (lhs != rhs) throw std::logic_error("lemma_generators: identity check failed");
    return out;
}

namespace {

// Congruence-slot probe: net response of the forced diagonal Theta slot to the
// kernel-direction generator H^k_{6k+1}, measured exactly after a full re-sweep.
struct ProbeResult {
    Rational response;  // net change of the slot per unit generator
    bool linear = false;
};

LieElement apply_and_sweep(const LieElement& w, const LieElement& gen, int degree, int r) {
    LieElement out = apply_transformation(w, gen, degree, GradingScheme::RAdapted, r);
    return sweep(std::move(out), r, degree, GradingScheme::RAdapted, r, nullptr);
}

ProbeResult congruence_probe(const LieElement& w, int k, const BasisIndex& slot, int degree, int r) {
    LieElement y0(BasisIndex{Family::H, k, 6 * k + 1}, Rational(1));
    Rational before = w.coeff(slot);
    Rational d1 = apply_and_sweep(w, y0, degree, r).coeff(slot) - before;
    Rational d2 =
        apply_and_sweep(w, Rational(2) * y0, degree, r).coeff(slot) - before;
    ProbeResult pr;
    pr.response = d1;
    pr.linear = (d2 == Rational(2) * d1);
    return pr;
}

}  // namespace

NFReport unique_nf(const NFInput& input) {
    input.validate();
    if (input.leading_coeff().is_zero())
        throw domain_error("unique_nf: leading term absent - outside Theorem scope");
    const int N = input.degree;
    const int N2 = 2 * N + 1;

    // stage 1: second level at a bound wide enough to cover every r-adapted slot
    NFInput wide{input.series, N2};
    NFReport rep = second_level_nf(wide);
    rep.second_stage_degree = N2;

    // stage 2: rescale
    rep = detect_and_rescale(rep);
    int r = *rep.r;

    // stage 3: r-adapted elimination
    LieElement w = truncated(rep.output, GradingScheme::RAdapted, r, N);
    w = sweep(std::move(w), r, N, GradingScheme::RAdapted, r, &rep.generators);

    // stage 4: congruence slots i = (4r+1)k + r + s, attempted via kernel probes
    if (rep.s && *rep.s % (4 * r + 1) != 0) {
        int s = *rep.s;
        std::vector<BasisIndex> slots;
        for (int k = 0;; ++k) {
            int mp = (4 * r + 1) * k + r + s;
            BasisIndex slot{Family::TZ2, mp, 2 * mp};
            if (grading(slot, GradingScheme::RAdapted, r) > N) break;
            slots.push_back(slot);
            Rational b = w.coeff(slot);
            if (b.is_zero()) continue;
            ProbeResult pr = congruence_probe(w, k, slot, N, r);
            if (pr.linear && !pr.response.is_zero()) {
                Rational u = -b / pr.response;
                LieElement y0(BasisIndex{Family::H, k, 6 * k + 1}, u);
                w = apply_transformation(w, y0, N, GradingScheme::RAdapted, r);
                std::vector<GeneratorStep> cleanup;
                w = sweep(std::move(w), r, N, GradingScheme::RAdapted, r, &cleanup);
                rep.generators.push_back(
                    {GradingScheme::RAdapted, r, grading(slot, GradingScheme::RAdapted, r), y0});
                for (auto& st : cleanup) rep.generators.push_back(st);
            } else {
                rep.obstructions.push_back(
                    {"congruence", grading(slot, GradingScheme::RAdapted, r), slot, b,
                     pr.linear ? "kernel move has exactly zero net response; coefficient is an "
                                 "invariant of the transformation family"
                               : "kernel move response is nonlinear"});
            }
        }
        // re-verify every forced slot; a removal may only leave slots that are
        // already reported, never a silent nonzero one
        for (auto& slot : slots) {
            if (w.coeff(slot).is_zero()) continue;
            bool listed = false;
            for (auto& ob : rep.obstructions)
                if (ob.idx == slot) listed = true;
            if (!listed)
                rep.obstructions.push_back({"congruence",
                                            grading(slot, GradingScheme::RAdapted, r), slot,
                                            w.coeff(slot), "slot not cleared by the kernel move"});
        }
    }

    collect_obstructions(w, GradingScheme::RAdapted, r, N, "r_adapted", &rep.obstructions);
    rep.output = std::move(w);
    rep.degree = N;
    rep.final_scheme = GradingScheme::RAdapted;
    return rep;
}

BivarPoly nf_first_integral(const NFReport& report) {
    // s(x, rho) = sum over H-terms of c x^{2l+1} rho^{2(k-2l+1)}
    BivarPoly s;
    for (auto& [i, c] : report.output.terms()) {
        if (i.family == Family::H) s.add_term({2 * i.l + 1, 2 * (i.k - 2 * i.l + 1)}, c);
    }
    // exact verification through the oracle: the full field annihilates s
    Poly3 s_cart;
    Poly3 r2 = Poly3::rho2();
    for (auto& [e, c] : s.terms()) {
        if (e.second % 2 != 0) throw std::logic_error("nf_first_integral: odd rho power");
        s_cart += c * (Poly3::monomial(e.first, 0, 0) * r2.pow(e.second / 2));
    }
    if (!dirderiv(expand_cartesian(report.output), s_cart).is_zero())
        throw std::logic_error("nf_first_integral: conservation check failed");
    return s;
}

LieElement replay(const NFInput& input, const NFReport& report) {
    LieElement w = truncated(input.series, GradingScheme::SecondLevel, 1, report.second_stage_degree);
    size_t i = 0;
    // second-level steps
    for (; i < report.generators.size(); ++i) {
        auto& st = report.generators[i];
        if (st.scheme != GradingScheme::SecondLevel) break;
        w = apply_transformation(w, st.gen, report.second_stage_degree, GradingScheme::SecondLevel, 1);
    }
    if (report.rescale && report.rescale->exact) {
        LieElement scaled;
        for (auto& [idx, c] : w.terms()) {
            Rational f(1);
            for (int j = 0; j < idx.l; ++j) f *= report.rescale->root;
            scaled.add(idx, c * f);
        }
        w = std::move(scaled);
    }
    if (report.final_scheme == GradingScheme::RAdapted && report.r) {
        int r = *report.r;
        w = truncated(w, GradingScheme::RAdapted, r, report.degree);
        for (; i < report.generators.size(); ++i) {
            auto& st = report.generators[i];
            w = apply_transformation(w, st.gen, report.degree, GradingScheme::RAdapted, r);
        }
    }
    return w;
}

std::vector<PotentialSet> nf_representations(const NFReport& report) {
    for (auto& [i, c] : report.output.terms()) {
        bool obstructed = false;
        for (auto& ob : report.obstructions)
            if (ob.idx == i) obstructed = true;
        if (!in_unique_style(i) && !obstructed)
            throw domain_error("nf_representations: output not in normal-form style");
    }
    return nf_representations(report.output);
}

}  // namespace snf
