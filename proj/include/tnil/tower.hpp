#pragma once

// Finite prefixes of the directed system
//   Gamma_{k_0} --phi_{s_1}--> Gamma_{k_1} --phi_{s_2}--> ...,  k_{i+1} = k_i + p(s_{i+1}),
// and elements of its colimit. Stage i of the prefix is Gamma_{k_i}; its image
// in H-bar is the telescope stage N / (s_1 ... s_i).

#include "tnil/groups.hpp"
#include "tnil/localization.hpp"
#include "tnil/phi.hpp"

#include <optional>
#include <vector>

namespace tnil {

struct TowerPrefix {
    std::vector<LaurentPoly> edges;     // s_1, s_2, ...
    std::vector<unsigned> levels;       // k_0, k_1, ...; one more entry than edges
    std::vector<NormData> norms;        // per edge
    std::vector<PhiData> phis;          // per edge
    std::vector<LaurentPoly> products;  // s_1 ... s_i per stage; products[0] = 1

    std::size_t stages() const { return levels.size(); }
    bool has_even_edge() const;
};

/// Builds and validates every phi. base_level is k_0 (0 gives Gamma_0 = H).
/// Throws PreconditionError naming the first edge outside S, and rethrows
/// phi_build failures with the offending edge index.
TowerPrefix tower_build(const std::vector<LaurentPoly>& edges, unsigned base_level = 0);

/// Projection of phi_s equals the s-action on H (checked on a, b, t).
bool tower_diagram_commutes(const PhiData& phi);

/// Least stage >= min_stage where f equals m / (s_1 ... s_i) for an integral m.
struct StageRepresentative {
    std::size_t stage = 0;
    ModuleVec numerator;
};
std::optional<StageRepresentative> realize_fraction(const Fraction& f, const TowerPrefix& tower,
                                                    std::size_t min_stage = 0);

/// Image of n (at stage `from`) at a later stage: n * s_{from+1}(U) ... s_to(U).
ModuleVec telescope_push(const ModuleVec& n, std::size_t from, std::size_t to, const TowerPrefix& tower);

/// Element of the colimit, carried by a normal form at some stage.
struct LElem {
    std::size_t stage = 0;
    GammaKElem value;

    /// Central coordinate of the normal form at this stage.
    CenterColim center() const { return {stage, value.c}; }
    /// Module coordinate as an element of N_S.
    Fraction fraction(const TowerPrefix& tower) const;
    Exponent j() const { return value.j; }
};

LElem l_identity(const TowerPrefix& tower);
LElem l_from_stage(std::size_t stage, const GammaKElem& g, const TowerPrefix& tower);

/// The element c * x^m * b^j, where x^m is the zero-central lift of n at the
/// least stage >= c.stage realizing n. Throws InsufficientTower otherwise.
LElem l_make(const CenterColim& c, const Fraction& n, Exponent j, const TowerPrefix& tower);

/// The central element of C_{2^inf} given by a dyadic value, at the least stage
/// whose center contains it. Throws InsufficientTower otherwise.
LElem l_central(const Dyadic& y, const TowerPrefix& tower);

LElem l_push(const LElem& x, std::size_t target_stage, const TowerPrefix& tower);
LElem l_mul(const LElem& x, const LElem& y, const TowerPrefix& tower);
LElem l_inv(const LElem& x, const TowerPrefix& tower);
bool l_eq(const LElem& x, const LElem& y, const TowerPrefix& tower);
/// x^g
LElem l_conj(const LElem& x, const LElem& g, const TowerPrefix& tower);
LElem l_commutator(const LElem& x, const LElem& y, const TowerPrefix& tower);

/// Image in H-bar = N_S x| <b>.
HbarElem l_project(const LElem& x, const TowerPrefix& tower);

/// If x is central (trivial module and b parts), its value in C_{2^inf}.
std::optional<Dyadic> l_center_value(const LElem& x, const TowerPrefix& tower);

} // namespace tnil
