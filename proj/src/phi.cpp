#include "tnil/phi.hpp"

#include "tnil/errors.hpp"

#include <numeric>

namespace tnil {

namespace {

// Central exponent d with lhs = rhs t^d, for the first relator evaluated at A.
Integer relator_defect(const G2Elem& A)
{
    const G2Elem B = G2Elem::b();
    G2Elem lhs = conj(conj(A, B), B);
    G2Elem rhs = mul(A, conj(mul(A, A, A), B));
    G2Elem d = mul(inv(rhs), lhs);
    if (!d.n.is_zero() || d.j != 0)
        throw TheoremViolation("relator defect is not central for A = " + A.to_string());
    return d.c;
}

} // namespace

LValue compute_l(const LaurentPoly& s, unsigned k)
{
    if (!in_S(s))
        throw PreconditionError("compute_l: " + s.to_string() + " is not in S");
    G2Elem A = g2_a_power(s);
    LValue out;
    out.exact = relator_defect(A);
    out.mod_level = mod_pow2(out.exact, k);
    return out;
}

bool PhiData::all_relators_trivial() const
{
    for (const auto& r : relators)
        if (!r.trivial)
            return false;
    return true;
}

PhiData phi_build(const LaurentPoly& s, unsigned k)
{
    if (!in_S(s))
        throw PreconditionError("phi_build: " + s.to_string() + " is not in S");
    PhiData phi;
    phi.s = s;
    phi.norm = norm_data(s);
    phi.source_k = k;
    phi.target_k = k + static_cast<unsigned>(phi.norm.p);
    const unsigned K = phi.target_k;

    G2Elem A = g2_a_power(s);
    phi.l = compute_l(s, k);
    phi.l_target = mod_pow2(phi.l.exact, K);

    // defect(r) = defect(0) + slope * r
    Integer d0 = relator_defect(A);
    Integer d1 = relator_defect(mul(A, G2Elem::t()));
    Integer slope = d1 - d0;
    if (!is_odd(slope))
        throw TheoremViolation("relator equation for r has even slope " + slope.get_str());
    Integer r = K == 0 ? Integer(0) : mod_pow2(-d0 * inverse_mod_pow2(slope, K), K);
    if (mod_pow2(d0 + slope * r, K) != 0)
        throw TheoremViolation("no r solves the relator equation for s = " + s.to_string());
    phi.r = r;

    phi.image_a = GammaKElem(K, mul(A, pow(G2Elem::t(), r, G2Elem::identity())));
    const GammaKElem B = GammaKElem::b(K);
    phi.image_t = commutator(phi.image_a, conj(phi.image_a, B));

    for (auto& rel : gamma_relators(phi.image_a, B, k)) {
        bool trivial = rel.value == GammaKElem::identity(K);
        phi.relators.push_back({rel.name, rel.value, trivial});
    }

    Integer m = pow2(k);
    phi.congruence_holds = k == 0 || mod(3 * r + phi.l.exact, m) == 0;
    phi.plus_sign_congruence_holds = k == 0 || mod(3 * r - phi.l.exact, m) == 0;

    if (!phi.all_relators_trivial())
        throw TheoremViolation("phi_" + s.to_string() + " on Gamma_" + std::to_string(k) +
                               " does not kill every relator");
    if (!phi.congruence_holds)
        throw TheoremViolation("3r != -l mod 2^k for s = " + s.to_string());
    return phi;
}

GammaKElem phi_apply(const PhiData& phi, const GammaKElem& g)
{
    if (g.k != phi.source_k)
        throw LevelMismatch("phi_apply: element of Gamma_" + std::to_string(g.k) + ", map from Gamma_" +
                            std::to_string(phi.source_k));
    const unsigned K = phi.target_k;
    const GammaKElem id = GammaKElem::identity(K);
    const GammaKElem B = GammaKElem::b(K);
    GammaKElem image_ab = conj(phi.image_a, B);
    GammaKElem out = pow(phi.image_t, g.c, id);
    out = mul(out, pow(phi.image_a, g.n.x1, id));
    out = mul(out, pow(image_ab, g.n.x2, id));
    out = mul(out, pow(B, Integer(static_cast<long>(g.j)), id));
    return out;
}

NormalSurjectivity normal_surjectivity(const PhiData& phi)
{
    NormalSurjectivity out;
    long order = 0;
    for (const auto& [sa, sb] : gamma_relator_exponent_sums(phi.target_k))
        order = std::gcd(order, std::labs(sa));
    out.collapse_order = order;
    // After b = 1 every a^{b^i} becomes a and t vanishes.
    out.image_exponent = phi.image_a.n.x1 + phi.image_a.n.x2;
    if (order == 0)
        out.surjective = abs(out.image_exponent) == 1;
    else
        out.surjective = gcd(out.image_exponent, Integer(order)) == 1;
    return out;
}

bool normal_surjectivity_check(const PhiData& phi)
{
    return normal_surjectivity(phi).surjective;
}

} // namespace tnil
