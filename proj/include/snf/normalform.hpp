#ifndef SNF_NORMALFORM_HPP
#define SNF_NORMALFORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "snf/liealg.hpp"
#include "snf/representations.hpp"

namespace snf {

/// Input to the graded normal-form engine: a Z2 series carrying the rotation
/// with coefficient 1 and a nonzero H^0_1 coefficient, truncated at `degree`
/// in the second-level grading.
struct NFInput {
    LieElement series;
    int degree = 8;

    void validate() const;
    Rational leading_coeff() const;  // coefficient of H^0_1
};

/// x -> (base)^{1/(2r)} x rescaling record. When the r-th root of `base` is
/// rational the scaling has been applied to the coefficients (exact == true);
/// otherwise coefficients are reported in the scaled frame, where the stored
/// value of an index with x-degree 2l means stored * base^{l/r}.
struct RescaleInfo {
    Rational base;       // |target/current| ratio for the H^r_{2r} coefficient
    int two_r = 2;       // root order 2r
    int sign = 1;        // sign of the (unremovable by |.|-rescale) coefficient
    bool exact = false;  // whether base^{1/r} is rational and was applied
    Rational root;       // base^{1/r} when exact
};

struct GeneratorStep {
    GradingScheme scheme;
    int r = 1;     // only meaningful for RAdapted
    int grade = 0; // grade of the removal target this step served
    LieElement gen;
};

struct Obstruction {
    std::string stage;  // "second_level", "r_adapted", "congruence"
    int grade = 0;
    BasisIndex idx{Family::H, 0, 1};
    Rational coeff;
    std::string note;
};

struct NFReport {
    LieElement output;
    std::optional<int> r;
    std::optional<int> s;
    std::vector<GeneratorStep> generators;
    std::vector<Obstruction> obstructions;
    std::optional<RescaleInfo> rescale;
    int degree = 0;               // truncation bound of the final stage
    GradingScheme final_scheme = GradingScheme::SecondLevel;
    int second_stage_degree = 0;  // second-level bound used internally by unique_nf
};

/// Truncated exponential of the adjoint: field + [gen, field] + 1/2 [gen,[gen,field]] + ...
/// cut at the given grading bound. gen must be near-identity (positive minimum grade).
LieElement apply_transformation(const LieElement& field, const LieElement& gen, int degree,
                                GradingScheme scheme = GradingScheme::SecondLevel, int r = 1);

/// Grade-by-grade first-order elimination against the rotation + a^0_1 H^0_1
/// leading part under the second-level grading. Output terms outside
/// span{Theta^0_1, H^m_{2m}, Theta^m_{2m}} are kept and recorded as obstructions.
NFReport second_level_nf(const NFInput& input);

/// Detects r and s on a second-level report and normalizes |a_r| to 1 by the
/// x-rescale, preserving the sign. Exact when base^{1/r} is rational; otherwise
/// recorded symbolically (see RescaleInfo).
NFReport detect_and_rescale(const NFReport& report);

/// Transformation generator for one basis element against H_r = H^0_1 + H^r_{2r}:
/// [gen, H_r] + basis(m, n) = residual_coeff * basis(residual index), with the
/// residual landing on the diagonal. The emitted identity is re-verified by the
/// bracket engine. Throws when a denominator factor vanishes.
struct LemmaTransformation {
    LieElement gen;
    Rational residual_coeff;
    BasisIndex residual_idx{Family::H, 0, 1};
};
LemmaTransformation lemma_generators(int m, int n, int r, Family family);

/// Full infinite-level engine: second level, rescale, r-adapted elimination, and
/// congruence-slot probes. Slots the transformation family cannot reach are
/// reported as obstructions, never forced.
NFReport unique_nf(const NFInput& input);

/// First integral s(x, rho) of the normal-form output: contributions
/// c * x^{2l+1} rho^{2(k-2l+1)} from each H-term. The returned polynomial is in
/// (x, rho); the identity dirderiv(expand(output), s) = 0 is verified exactly.
BivarPoly nf_first_integral(const NFReport& report);

/// True if the index belongs to the infinite-level style
/// {rotation, H^0_1, Theta^0_1, diagonal H^m_{2m} and Theta^m_{2m}}.
bool in_unique_style(const BasisIndex& idx);

/// Replays a report's generator steps (and rescale) on the input; used to check
/// the conjugacy-soundness invariant.
LieElement replay(const NFInput& input, const NFReport& report);

/// Four verified representations of the report's output.
std::vector<PotentialSet> nf_representations(const NFReport& report);

}  // namespace snf

#endif
