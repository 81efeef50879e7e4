#pragma once

// The maps phi_s : Gamma_k -> Gamma_{k + p(s)},  a -> a^s t^r,  b -> b.

#include "tnil/groups.hpp"
#include "tnil/laurent.hpp"
#include "tnil/quadratic.hpp"

#include <string>
#include <vector>

namespace tnil {

/// The exponent l in (a^s)^{b^2} = a^s ((a^s)^3)^b t^l.
struct LValue {
    Integer exact;      // computed in G2, where t has infinite order
    Integer mod_level;  // exact mod 2^k
};

/// Requires in_S(s). (a^s)^{3b} is read as the cube of a^s conjugated by b,
/// which is how the relator is applied to the image of a.
LValue compute_l(const LaurentPoly& s, unsigned k);

struct RelatorCheck {
    std::string name;
    GammaKElem image;
    bool trivial = false;
};

struct PhiData {
    LaurentPoly s;
    NormData norm;
    unsigned source_k = 0;
    unsigned target_k = 0;
    Integer r = 0;             // in [0, 2^target_k)
    LValue l;                  // at the source level
    Integer l_target = 0;      // l mod 2^target_k
    GammaKElem image_a;        // a^s t^r in Gamma_target
    GammaKElem image_t;        // [image_a, image_a^b]
    std::vector<RelatorCheck> relators;
    /// 3r == -l mod 2^source_k: the congruence the relator actually imposes.
    bool congruence_holds = false;
    /// 3r == +l mod 2^source_k, as the sign is sometimes written.
    bool plus_sign_congruence_holds = false;

    bool all_relators_trivial() const;
};

/// Builds and checks phi_s. r solves the relator equation
///   (a^s t^r)^{b^2} = (a^s t^r) ((a^s t^r)^3)^b
/// exactly in Gamma_{k+p(s)}; the equation is affine in r with slope 3.
/// Throws PreconditionError if s is not in S, TheoremViolation if any relator
/// image is nontrivial.
PhiData phi_build(const LaurentPoly& s, unsigned k);

/// Image of g in Gamma_target. Throws LevelMismatch if g.k != source_k.
GammaKElem phi_apply(const PhiData& phi, const GammaKElem& g);

/// Quotient of Gamma_target by the normal closure of the image.
///
/// Killing b forces a^b = a, hence t = 1, and the first relator collapses to
/// a^3 = 1 (the a-exponent sum of the relator word). What survives is Z/3
/// generated by a, modulo the a-exponent of the image of a.
struct NormalSurjectivity {
    long collapse_order = 0;     // order of <a> after b = 1 (from relator exponent sums)
    Integer image_exponent = 0;  // exponent of a carried by phi(a) after b = 1
    bool surjective = false;
};

NormalSurjectivity normal_surjectivity(const PhiData& phi);
bool normal_surjectivity_check(const PhiData& phi);

} // namespace tnil
