#ifndef SNF_REPRESENTATIONS_HPP
#define SNF_REPRESENTATIONS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snf/liealg.hpp"

namespace snf {

/// Sparse bivariate polynomial in (x, r); houses Poisson-algebra elements
/// f^l_k = x^{l+1} r^{k-l+1} and the Hamiltonian/angular data H(x,r), G(x,r).
class BivarPoly {
public:
    using Key = std::pair<int, int>;  // (x-exponent, r-exponent)
    using Terms = std::map<Key, Rational>;

    BivarPoly() = default;
    static BivarPoly monomial(int i, int j, const Rational& c = Rational(1)) {
        if (i < 0 || j < 0) throw domain_error("BivarPoly: negative exponent");
        BivarPoly p;
        if (!c.is_zero()) p.terms_[{i, j}] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end())
            terms_.emplace(e, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BivarPoly operator-() const {
        BivarPoly r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    BivarPoly& operator+=(const BivarPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a += -b; }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return r;
    }
    friend BivarPoly operator*(const Rational& c, const BivarPoly& p) {
        BivarPoly r;
        if (c.is_zero()) return r;
        for (auto& [e, pc] : p.terms_) r.terms_[e] = c * pc;
        return r;
    }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

    BivarPoly diff_x() const {
        BivarPoly r;
        for (auto& [e, c] : terms_)
            if (e.first > 0) r.add_term({e.first - 1, e.second}, Rational(e.first) * c);
        return r;
    }
    BivarPoly diff_r() const {
        BivarPoly r;
        for (auto& [e, c] : terms_)
            if (e.second > 0) r.add_term({e.first, e.second - 1}, Rational(e.second) * c);
        return r;
    }

    /// Substitution r -> y^2 + z^2 into three-variable space.
    Poly3 substitute_r_rho2() const {
        Poly3 out;
        Poly3 r2 = Poly3::rho2();
        for (auto& [e, c] : terms_) out += c * (Poly3::monomial(e.first, 0, 0) * r2.pow(e.second));
        return out;
    }

    std::string str(const std::string& second_var = "r") const;

private:
    Terms terms_;
};

/// {f, g} = d_r f d_x g - d_r g d_x f.
BivarPoly poisson_bracket(const BivarPoly& f, const BivarPoly& g);

/// Hamiltonian presentation of an element: x-dot = dH/dr, r-dot = -dH/dx,
/// theta-dot = G, with H from the F/H terms and G from the Theta terms
/// (the rotation coefficient becomes G's constant).
struct HamiltonianForm {
    BivarPoly H;
    BivarPoly G;
};
HamiltonianForm hamiltonian_form(const LieElement& e);

/// The Cartesian field generated by (H, G); exact reconstruction used to verify
/// hamiltonian_form against expand_cartesian.
VField3 hamiltonian_field(const HamiltonianForm& hf);

/// The Poisson-side image of a basis index: f^l_k = x^{l+1} r^{k-l+1}
/// (Z2 families through the embedding l -> 2l). Defined for F/H only.
BivarPoly poisson_generator(const BasisIndex& idx);

enum class PotentialKind { Hamiltonian, Euler, VectorPotential, Clebsch };
enum class PotentialVariant { ClosedForm, Constructive };

/// A verified potential representation. Parts are named scalars/fields; the
/// kind fixes the recombination identity, which is re-checked on construction:
///   Euler:            sum_i cross(grad(alpha_i), beta_grad_i)
///   VectorPotential:  curl(A)
///   Clebsch:          sum_i (f1_i grad(f2_i) + grad(f3_i))
///   Hamiltonian:      field generated by (H, G)
struct PotentialSet {
    struct EulerPair {
        Poly3 alpha;                   // polynomial potential (a first integral)
        VField3 beta_grad;             // exact gradient of the second potential
        std::optional<Poly3> beta;     // present when the second potential is polynomial
    };
    struct ClebschTriple {
        RatFunc3 f1;
        RatFunc3 f2;
        RatFunc3 f3;
    };

    PotentialKind kind;
    PotentialVariant variant = PotentialVariant::ClosedForm;
    std::vector<EulerPair> euler_pairs;
    VField3 vector_potential;
    std::vector<ClebschTriple> clebsch_triples;
    std::optional<HamiltonianForm> hamiltonian;
    // Integration constants of the constructive potential are set to zero.
    bool zero_integration_constants = false;

    /// Evaluates the recombination identity.
    VField3 recombine() const;
};

/// Euler form v = grad(alpha) x beta_grad. For F/H the angular potential exists
/// only through its rational gradient; for T/TZ2 both potentials are polynomial.
PotentialSet euler_form(const BasisIndex& idx);

/// Vector potentials with curl(A) = expanded field, closed-form or constructive.
PotentialSet vector_potential(const BasisIndex& idx, PotentialVariant variant);

/// Clebsch (Monge) representation v = f1 grad(f2) + grad(f3).
PotentialSet clebsch(const BasisIndex& idx);

struct NonPotentialCertificate {
    VField3 curl_field;
    bool non_potential;     // curl != 0
    std::string verdict;    // "non-potential" or the excluded-case description
};
/// Certifies the non-potential property: nonzero curl for every nonzero element
/// except the excluded direction x d_x - 1/2 rho d_rho, which is not Hopf-zero.
NonPotentialCertificate nonpotential_certificate(const LieElement& e);

/// Per-term constructors must reproduce the expanded field; each constructor
/// verifies before returning. Returns the four assembled representations of a
/// normal-form element (Hamiltonian, Euler, vector potential, Clebsch).
std::vector<PotentialSet> nf_representations(const LieElement& output);

}  // namespace snf

#endif
