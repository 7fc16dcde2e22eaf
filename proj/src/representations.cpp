#include "snf/representations.hpp"

namespace snf {

std::string BivarPoly::str(const std::string& second_var) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto& [e, c] = *it;
        Rational a = c.abs();
        out += first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        first = false;
        bool constant = e.first == 0 && e.second == 0;
        std::string piece;
        if (!a.is_one() || constant) piece += a.str();
        if (e.first > 0) piece += (piece.empty() ? "" : "*") + std::string("x") + (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second > 0) piece += (piece.empty() ? "" : "*") + second_var + (e.second > 1 ? "^" + std::to_string(e.second) : "");
        out += piece;
    }
    return out;
}

BivarPoly poisson_bracket(const BivarPoly& f, const BivarPoly& g) {
    return f.diff_r() * g.diff_x() - g.diff_r() * f.diff_x();
}

namespace {

std::pair<int, int> general_lk(const BasisIndex& idx) {
    if (idx.family == Family::H || idx.family == Family::TZ2) return {2 * idx.l, idx.k};
    return {idx.l, idx.k};
}
bool is_f_like(Family f) { return f == Family::F || f == Family::H; }

}  // namespace

BivarPoly poisson_generator(const BasisIndex& idx) {
    idx.require_valid();
    if (!is_f_like(idx.family)) throw domain_error("poisson_generator: F/H families only");
    auto [l, k] = general_lk(idx);
    return BivarPoly::monomial(l + 1, k - l + 1);
}

HamiltonianForm hamiltonian_form(const LieElement& e) {
    HamiltonianForm hf;
    for (auto& [idx, c] : e.terms()) {
        auto [l, k] = general_lk(idx);
        if (is_f_like(idx.family)) {
            hf.H.add_term({l + 1, k - l + 1}, c);
        } else {
            hf.G.add_term({l, k - l}, c);  // rotation lands in the constant term
        }
    }
    return hf;
}

VField3 hamiltonian_field(const HamiltonianForm& hf) {
    // x-dot = dH/dr; r-dot = -dH/dx with r = y^2+z^2, so
    // y-dot = (r-dot / 2r) y + G z and z-dot = (r-dot / 2r) z - G y.
    Poly3 xdot = hf.H.diff_r().substitute_r_rho2();
    Poly3 rdot = (-hf.H.diff_x()).substitute_r_rho2();
    Poly3 g = hf.G.substitute_r_rho2();
    Poly3 two_r = Rational(2) * Poly3::rho2();
    RatFunc3 radial(rdot, two_r);
    RatFunc3 ydot = radial * RatFunc3(Poly3::variable(1)) + RatFunc3(g * Poly3::variable(2));
    RatFunc3 zdot = radial * RatFunc3(Poly3::variable(2)) - RatFunc3(g * Poly3::variable(1));
    return {RatFunc3(xdot), ydot, zdot};
}

VField3 PotentialSet::recombine() const {
    switch (kind) {
        case PotentialKind::Euler: {
            VField3 out;
            for (auto& p : euler_pairs) out = out + cross(gradient(p.alpha), p.beta_grad);
            return out;
        }
        case PotentialKind::VectorPotential: return curl(vector_potential);
        case PotentialKind::Clebsch: {
            VField3 out;
            for (auto& t : clebsch_triples) {
                VField3 g2 = gradient(t.f2);
                out = out + VField3{t.f1 * g2.x, t.f1 * g2.y, t.f1 * g2.z} + gradient(t.f3);
            }
            return out;
        }
        case PotentialKind::Hamiltonian:
            return hamiltonian_field(*hamiltonian);
    }
    return {};
}

namespace {

void verify_recombination(const PotentialSet& ps, const VField3& expected, const char* what) {
    if (ps.recombine() != expected)
        throw domain_error(std::string(what) + ": recombination identity failed");
}

// gradient of (1/2) arctan(z/y): (0, -z, y) / (2(y^2+z^2)); the potential itself
// is never materialized.
VField3 half_arctan_gradient() {
    Poly3 two_r2 = Rational(2) * Poly3::rho2();
    return {RatFunc3(Poly3()), RatFunc3(-Poly3::variable(2), two_r2),
            RatFunc3(Poly3::variable(1), two_r2)};
}

}  // namespace

PotentialSet euler_form(const BasisIndex& idx) {
    idx.require_valid();
    auto [l, k] = general_lk(idx);
    PotentialSet ps;
    ps.kind = PotentialKind::Euler;
    if (is_f_like(idx.family)) {
        // alpha = x^{l+1}(y^2+z^2)^{k-l+1} (first integral), beta = (1/2)arctan(z/y)
        PotentialSet::EulerPair p;
        p.alpha = Poly3::monomial(l + 1, 0, 0) * Poly3::rho2().pow(k - l + 1);
        p.beta_grad = half_arctan_gradient();
        ps.euler_pairs.push_back(std::move(p));
    } else {
        // alpha = x^{l+1}, beta = -(y^2+z^2)^{k-l+1} / (2(l+1)(k-l+1))
        PotentialSet::EulerPair p;
        p.alpha = Poly3::monomial(l + 1, 0, 0);
        Rational c = Rational(-1) / rat(2LL * (l + 1) * (k - l + 1));
        p.beta = c * Poly3::rho2().pow(k - l + 1);
        p.beta_grad = gradient(*p.beta);
        ps.euler_pairs.push_back(std::move(p));
    }
    verify_recombination(ps, expand_cartesian(idx), "euler_form");
    return ps;
}

PotentialSet vector_potential(const BasisIndex& idx, PotentialVariant variant) {
    idx.require_valid();
    auto [l, k] = general_lk(idx);
    PotentialSet ps;
    ps.kind = PotentialKind::VectorPotential;
    ps.variant = variant;
    Poly3 r2 = Poly3::rho2();
    if (variant == PotentialVariant::ClosedForm) {
        if (is_f_like(idx.family)) {
            // A = (1/2) x^{l+1}(y^2+z^2)^{k-l} (-z e_y + y e_z)
            Poly3 pre = rat(1, 2) * (Poly3::monomial(l + 1, 0, 0) * r2.pow(k - l));
            ps.vector_potential = {RatFunc3(Poly3()), RatFunc3(-(pre * Poly3::variable(2))),
                                   RatFunc3(pre * Poly3::variable(1))};
        } else {
            // A = x^l (y^2+z^2)^{k-l+1} / (2(k-l+1)) e_x
            Rational c = Rational(1) / rat(2LL * (k - l + 1));
            Poly3 ax = c * (Poly3::monomial(l, 0, 0) * r2.pow(k - l + 1));
            ps.vector_potential = {RatFunc3(ax), RatFunc3(Poly3()), RatFunc3(Poly3())};
        }
    } else {
        ps.zero_integration_constants = true;
        if (is_f_like(idx.family)) {
            // A_x = -(l+1)/2 x^l y S, A_y = -(k-l+1) x^{l+1} S with
            // S = sum_j C(k-l, j) y^{2j} z^{2(k-l-j)+1} / (2(k-l-j)+1)
            Poly3 S;
            Integer binom = 1;
            for (int j = 0; j <= k - l; ++j) {
                if (j > 0) binom = binom * Integer(k - l - j + 1) / Integer(j);
                Rational cj = Rational(binom) / rat(2LL * (k - l - j) + 1);
                S += cj * Poly3::monomial(0, 2 * j, 2 * (k - l - j) + 1);
            }
            Poly3 ax, ay = rat(-(k - l + 1)) * (Poly3::monomial(l + 1, 0, 0) * S);
            if (l + 1 != 0)
                ax = rat(-(l + 1), 2) * (Poly3::monomial(l, 1, 0) * S);
            ps.vector_potential = {RatFunc3(ax), RatFunc3(ay), RatFunc3(Poly3())};
        } else {
            // B = x^l/(2(k-l+1)) ((y^2+z^2)^{k-l+1} - y^{2(k-l+1)}) e_x
            //     - x^{l+1} y^{2(k-l)+1} / (l+1) e_y
            Rational cx = Rational(1) / rat(2LL * (k - l + 1));
            Poly3 bx = cx * (Poly3::monomial(l, 0, 0) *
                             (r2.pow(k - l + 1) - Poly3::monomial(0, 2 * (k - l + 1), 0)));
            Rational cy = Rational(-1) / rat(l + 1);
            Poly3 by = cy * Poly3::monomial(l + 1, 2 * (k - l) + 1, 0);
            ps.vector_potential = {RatFunc3(bx), RatFunc3(by), RatFunc3(Poly3())};
        }
    }
    verify_recombination(ps, expand_cartesian(idx), "vector_potential");
    return ps;
}

PotentialSet clebsch(const BasisIndex& idx) {
    idx.require_valid();
    auto [l, k] = general_lk(idx);
    PotentialSet ps;
    ps.kind = PotentialKind::Clebsch;
    Poly3 r2 = Poly3::rho2();
    PotentialSet::ClebschTriple t;
    if (is_f_like(idx.family)) {
        if (l != 0) {
            // f1 = x^l (rational for l = -1), f2, f3 per the l != 0 branch
            t.f1 = l >= 0 ? RatFunc3(Poly3::monomial(l, 0, 0))
                          : RatFunc3(Poly3(Rational(1)), Poly3::monomial(-l, 0, 0));
            Rational c1 = rat(-(l + 1)) / rat(4LL * (k - l + 1));
            Rational c2 = rat(-(k - l + 1)) / rat(l);
            t.f2 = RatFunc3(c1 * r2.pow(k - l + 1) + c2 * (Poly3::monomial(2, 0, 0) * r2.pow(k - l)));
            Rational c3 = rat(k - l + 1) / rat(l);
            t.f3 = RatFunc3(c3 * (Poly3::monomial(l + 2, 0, 0) * r2.pow(k - l)));
        } else {
            // l = 0 branch: f1 = -x, f2 = (k+1) x (y^2+z^2)^k,
            // f3 = (k+1) x^2 (y^2+z^2)^k - (y^2+z^2)^{k+1} / (4(k+1))
            t.f1 = RatFunc3(-Poly3::variable(0));
            t.f2 = RatFunc3(rat(k + 1) * (Poly3::variable(0) * r2.pow(k)));
            t.f3 = RatFunc3(rat(k + 1) * (Poly3::monomial(2, 0, 0) * r2.pow(k)) -
                            (Rational(1) / rat(4LL * (k + 1))) * r2.pow(k + 1));
        }
    } else {
        // g1 = z/y, g2 = y^2 x^l (y^2+z^2)^{k-l}, g3 = -yz x^l (y^2+z^2)^{k-l}
        t.f1 = RatFunc3(Poly3::variable(2), Poly3::variable(1));
        Poly3 pre = Poly3::monomial(l, 0, 0) * r2.pow(k - l);
        t.f2 = RatFunc3(Poly3::monomial(0, 2, 0) * pre);
        t.f3 = RatFunc3(-(Poly3::monomial(0, 1, 1) * pre));
    }
    ps.clebsch_triples.push_back(std::move(t));
    verify_recombination(ps, expand_cartesian(idx), "clebsch");
    return ps;
}

NonPotentialCertificate nonpotential_certificate(const LieElement& e) {
    if (e.is_zero()) throw domain_error("nonpotential_certificate: zero element");
    NonPotentialCertificate cert;
    cert.curl_field = curl(expand_cartesian(e));
    cert.non_potential = !cert.curl_field.is_zero();
    cert.verdict = cert.non_potential ? "non-potential"
                                      : "excluded case: not Hopf-zero (x d_x - 1/2 rho d_rho direction)";
    return cert;
}

std::vector<PotentialSet> nf_representations(const LieElement& output) {
    if (output.is_zero()) throw domain_error("nf_representations: zero element");
    VField3 expected = expand_cartesian(output);

    PotentialSet ham;
    ham.kind = PotentialKind::Hamiltonian;
    ham.hamiltonian = hamiltonian_form(output);
    if (hamiltonian_field(*ham.hamiltonian) != expected)
        throw domain_error("nf_representations: Hamiltonian identity failed");

    PotentialSet euler;
    euler.kind = PotentialKind::Euler;
    PotentialSet vecpot;
    vecpot.kind = PotentialKind::VectorPotential;
    PotentialSet cleb;
    cleb.kind = PotentialKind::Clebsch;
    for (auto& [idx, c] : output.terms()) {
        PotentialSet pe = euler_form(idx);
        for (auto& p : pe.euler_pairs) {
            // scale the first potential; the cross product is linear in it
            p.alpha = c * p.alpha;
            euler.euler_pairs.push_back(p);
        }
        PotentialSet pv = vector_potential(idx, PotentialVariant::ClosedForm);
        vecpot.vector_potential = vecpot.vector_potential + c * pv.vector_potential;
        PotentialSet pc = clebsch(idx);
        for (auto& tr : pc.clebsch_triples) {
            // scaling a Monge pair: c (f1 grad f2 + grad f3) = f1 grad(c f2) + grad(c f3)
            tr.f2 = c * tr.f2;
            tr.f3 = c * tr.f3;
            cleb.clebsch_triples.push_back(tr);
        }
    }
    if (euler.recombine() != expected) throw domain_error("nf_representations: Euler identity failed");
    if (vecpot.recombine() != expected)
        throw domain_error("nf_representations: vector-potential identity failed");
    if (cleb.recombine() != expected) throw domain_error("nf_representations: Clebsch identity failed");
    return {ham, euler, vecpot, cleb};
}

}  // namespace snf
