#pragma once

// Lower central series of H, G2 and Gamma_k: finite stages, the omega stage,
// stages omega + j, and the witness that the colimit never terminates.

#include "tnil/groups.hpp"
#include "tnil/localization.hpp"
#include "tnil/quadratic.hpp"
#include "tnil/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tnil {

/// Subgroups of the shape taken by every gamma_alpha in these models:
///   { t^c x^n b^{j} : t^c in <t^{2^e}>, n in module, j in b_part Z }.
/// center_exponent is e, or nullopt for the trivial center part. In Gamma_k an
/// exponent >= k is normalized to nullopt. b_part is 0 (trivial) or 1 (all of Z).
///
/// When the module part is nonzero the center part is all of <t> (e = 0), so
/// every lift of a module element lies in the subgroup.
struct SubgroupData {
    std::optional<unsigned> center_exponent;
    Lattice module;
    int b_part = 0;

    bool is_trivial() const { return !center_exponent && module.is_zero() && b_part == 0; }
    /// |center part| in Gamma_k (2^{k-e}); nullopt for infinite (G2).
    std::optional<Integer> center_order(const Model& model) const;
    friend bool operator==(const SubgroupData&, const SubgroupData&) = default;

    std::string to_string() const;
};

SubgroupData whole_group(const Model& model);

/// [S, G] for a subgroup S of the representable shape.
///
/// Module part: S.module (U - I), plus N (U - I) when S contains b.
/// Center part generated by
///   [t^{2^e}, b] = t^{-2^{e+1}},
///   [x^n, x^m] = t^{wedge(n, m)} for n in S.module, m in N (gcd = content),
///   [a, a^b] = t when S contains a and a^b (its module part is N).
SubgroupData lcs_step(const Model& model, const SubgroupData& s);

/// gamma_1 .. gamma_depth.
std::vector<SubgroupData> lcs_chain(const Model& model, int depth);

/// Module part of gamma_i(H): N (U - I)^{i-1}.
Lattice h_module_stage(int i);

struct ProbeResult {
    ModuleVec v;
    std::optional<int> exit_stage; // least i with v not in gamma_i
};

struct GammaOmegaCertificate {
    Model model;
    SubgroupData gamma_omega;
    int depth_bound = 0;
    bool center_constant = false;   // center part is <t> for 2 <= i <= depth_bound
    std::vector<ProbeResult> probes;
    bool all_probes_exit = false;
    /// |gamma_omega| when finite.
    std::optional<Integer> order;
    bool passed() const { return center_constant && all_probes_exit; }
};

/// Certifies gamma_omega = <t> (trivial for H): constancy of the center chain
/// plus finite exit of every nonzero probe from the module chain.
/// Throws TheoremViolation when a probe never exits within the bound.
GammaOmegaCertificate gamma_omega(const Model& model, int depth_bound, const std::vector<ModuleVec>& probes);

struct TransfiniteStage {
    int j = 0;
    SubgroupData subgroup;
    std::optional<Integer> order;
};

/// gamma_{omega + j} for j = 0..J, stopping after the first trivial stage.
std::vector<TransfiniteStage> transfinite_chain(const Model& model, int J);

/// y with [y, b] = c in C_{2^inf}: the center is inverted by b, so
/// [y, b] = y^{-1} y^b = -2y. Returns -(c halved).
Dyadic commutator_preimage(const Dyadic& c);

struct WitnessSample {
    Dyadic c;
    bool in_gamma_omega = false;        // t^{odd} is an iterated commutator of every depth
    std::vector<Dyadic> preimage_chain; // c, y_1, y_2, ... with [y_{i+1}, b] = y_i
    bool dyadic_verified = false;
    bool model_verified = false;        // every step re-evaluated in the tower
};

struct WitnessReport {
    std::vector<LaurentPoly> edges;
    int J = 0;
    int commutator_depth = 0;
    std::size_t stages_used = 0;        // prefix extended by cycling the edges
    unsigned top_level = 0;
    std::vector<WitnessSample> samples;
    bool center_chain_constant = false;
    bool gamma_omega_contains_samples = false;
    bool preimages_verified = false;
    bool never_shrinks = false;
    bool five_term_consistent = false;
    bool passed() const
    {
        return center_chain_constant && gamma_omega_contains_samples && preimages_verified && never_shrinks &&
               five_term_consistent;
    }
};

/// Evidence that gamma_{omega+j} of the colimit equals gamma_omega != 1 for all
/// j <= J. Throws PreconditionError when no edge has even norm.
WitnessReport witness_not_transfinitely_nilpotent(const std::vector<LaurentPoly>& edges, int J,
                                                  const std::vector<Dyadic>& samples, int commutator_depth = 12);

/// Deterministic sample set: every odd numerator over 2^1 .. 2^max_k, thinned to
/// at most `count` values.
std::vector<Dyadic> dyadic_samples(unsigned max_k, std::size_t count);

} // namespace tnil
