#include "tnil/localization.hpp"

#include "tnil/errors.hpp"
#include "tnil/tower.hpp"

namespace tnil {

Fraction::Fraction(ModuleVec n, LaurentPoly d) : num(std::move(n)), den(std::move(d))
{
    if (!in_S(den))
        throw PreconditionError("fraction denominator " + den.to_string() + " is not in S");
}

std::string Fraction::to_string() const
{
    return num.to_string() + "/(" + den.to_string() + ")";
}

bool frac_eq(const Fraction& f, const Fraction& g)
{
    return f.num * evaluate_at_U(g.den) == g.num * evaluate_at_U(f.den);
}

Fraction frac_add(const Fraction& f, const Fraction& g)
{
    return Fraction(f.num * evaluate_at_U(g.den) + g.num * evaluate_at_U(f.den), f.den * g.den);
}

Fraction frac_neg(const Fraction& f)
{
    return Fraction(-f.num, f.den);
}

Fraction frac_act_b(const Fraction& f)
{
    return Fraction(f.num * action_matrix(), f.den);
}

Fraction frac_act_b(const Fraction& f, Exponent e)
{
    return Fraction(f.num * action_power(e), f.den);
}

Fraction frac_scale(const Fraction& f, const LaurentPoly& s)
{
    return Fraction(f.num * evaluate_at_U(s), f.den);
}

Dyadic::Dyadic(const Integer& num, unsigned long k)
{
    Integer r = mod_pow2(num, k);
    if (r == 0) {
        num_ = 0;
        k_ = 0;
        return;
    }
    unsigned long twos = v2(r);
    mpz_tdiv_q_2exp(num_.get_mpz_t(), r.get_mpz_t(), twos);
    k_ = k - twos;
}

Dyadic operator+(const Dyadic& x, const Dyadic& y)
{
    unsigned long k = std::max(x.k_, y.k_);
    Integer a = x.num_ * pow2(k - x.k_);
    Integer b = y.num_ * pow2(k - y.k_);
    return Dyadic(a + b, k);
}

std::string Dyadic::to_string() const
{
    if (num_ == 0)
        return "0";
    return num_.get_str() + "/" + pow2(k_).get_str();
}

CenterColim center_push(const CenterColim& c, const LaurentPoly& s, const TowerPrefix& tower)
{
    if (c.stage >= tower.edges.size())
        throw PreconditionError("center_push: stage " + std::to_string(c.stage) + " has no outgoing edge");
    if (!(tower.edges[c.stage] == s))
        throw PreconditionError("center_push: " + s.to_string() + " is not the edge leaving stage " +
                                std::to_string(c.stage));
    const auto& nd = tower.norms[c.stage];
    CenterColim out;
    out.stage = c.stage + 1;
    out.residue = mod_pow2(c.residue * nd.norm, tower.levels[out.stage]);
    return out;
}

CenterColim center_push_to(const CenterColim& c, std::size_t target_stage, const TowerPrefix& tower)
{
    if (target_stage < c.stage || target_stage >= tower.levels.size())
        throw PreconditionError("center_push_to: bad target stage");
    CenterColim out = c;
    while (out.stage < target_stage)
        out = center_push(out, tower.edges[out.stage], tower);
    return out;
}

Dyadic center_to_dyadic(const CenterColim& c, const TowerPrefix& tower)
{
    if (c.stage >= tower.levels.size())
        throw PreconditionError("center_to_dyadic: stage out of range");
    unsigned long k = tower.levels[c.stage];
    Integer u = 1;
    for (std::size_t i = 0; i < c.stage; ++i)
        u *= tower.norms[i].v;
    return Dyadic(c.residue * inverse_mod_pow2(u, k), k);
}

bool center_eq(const CenterColim& x, const CenterColim& y, const TowerPrefix& tower)
{
    std::size_t stage = std::max(x.stage, y.stage);
    return center_push_to(x, stage, tower).residue == center_push_to(y, stage, tower).residue;
}

} // namespace tnil
