#include "tnil/tower.hpp"

#include "tnil/errors.hpp"

namespace tnil {

bool TowerPrefix::has_even_edge() const
{
    for (const auto& nd : norms)
        if (nd.p >= 1)
            return true;
    return false;
}

bool tower_diagram_commutes(const PhiData& phi)
{
    const IntMatrix2 sU = evaluate_at_U(phi.s);
    const unsigned k = phi.source_k;
    auto s_action = [&](const HElem& h) { return HElem{h.n * sU, h.j}; };
    for (const auto& g : {GammaKElem::a(k), GammaKElem::b(k), GammaKElem::t(k)}) {
        if (!(gk_project(phi_apply(phi, g)) == s_action(gk_project(g))))
            return false;
    }
    return true;
}

TowerPrefix tower_build(const std::vector<LaurentPoly>& edges, unsigned base_level)
{
    TowerPrefix tower;
    tower.levels.push_back(base_level);
    tower.products.emplace_back(1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& s = edges[i];
        if (!in_S(s))
            throw PreconditionError("tower edge " + std::to_string(i + 1) + " (" + s.to_string() + ") is not in S");
        PhiData phi;
        try {
            phi = phi_build(s, tower.levels.back());
        } catch (const TheoremViolation& e) {
            throw TheoremViolation("tower edge " + std::to_string(i + 1) + ": " + e.what());
        }
        if (!tower_diagram_commutes(phi))
            throw TheoremViolation("tower edge " + std::to_string(i + 1) + ": square over H does not commute");
        tower.edges.push_back(s);
        tower.norms.push_back(phi.norm);
        tower.levels.push_back(phi.target_k);
        tower.products.push_back(tower.products.back() * s);
        tower.phis.push_back(std::move(phi));
    }
    return tower;
}

std::optional<StageRepresentative> realize_fraction(const Fraction& f, const TowerPrefix& tower, std::size_t min_stage)
{
    const IntMatrix2 den = evaluate_at_U(f.den);
    const Integer det = den.det();
    const IntMatrix2 adj = den.adjugate();
    for (std::size_t i = min_stage; i < tower.stages(); ++i) {
        // m den(U) = num P_i(U)  <=>  m = num P_i(U) adj / det
        ModuleVec scaled = f.num * evaluate_at_U(tower.products[i]) * adj;
        if (mpz_divisible_p(scaled.x1.get_mpz_t(), det.get_mpz_t()) &&
            mpz_divisible_p(scaled.x2.get_mpz_t(), det.get_mpz_t()))
            return StageRepresentative{i, {scaled.x1 / det, scaled.x2 / det}};
    }
    return std::nullopt;
}

ModuleVec telescope_push(const ModuleVec& n, std::size_t from, std::size_t to, const TowerPrefix& tower)
{
    ModuleVec out = n;
    for (std::size_t i = from; i < to; ++i)
        out = out * evaluate_at_U(tower.edges[i]);
    return out;
}

Fraction LElem::fraction(const TowerPrefix& tower) const
{
    return Fraction(value.n, tower.products[stage]);
}

LElem l_identity(const TowerPrefix& tower)
{
    return {0, GammaKElem::identity(tower.levels[0])};
}

LElem l_from_stage(std::size_t stage, const GammaKElem& g, const TowerPrefix& tower)
{
    if (stage >= tower.stages())
        throw InsufficientTower("stage " + std::to_string(stage) + " not built");
    if (g.k != tower.levels[stage])
        throw LevelMismatch("element level does not match stage level");
    return {stage, g};
}

LElem l_make(const CenterColim& c, const Fraction& n, Exponent j, const TowerPrefix& tower)
{
    auto rep = realize_fraction(n, tower, c.stage);
    if (!rep)
        throw InsufficientTower("denominator " + n.den.to_string() + " is not realizable in the tower prefix");
    CenterColim pushed = center_push_to(c, rep->stage, tower);
    const unsigned k = tower.levels[rep->stage];
    GammaKElem g = mul(GammaKElem(k, pushed.residue, {}, 0), GammaKElem(k, 0, rep->numerator, j));
    return {rep->stage, g};
}

LElem l_central(const Dyadic& y, const TowerPrefix& tower)
{
    for (std::size_t i = 0; i < tower.stages(); ++i) {
        const unsigned k = tower.levels[i];
        if (y.k() > k)
            continue;
        // residue r with r u^{-1} / 2^k = y, i.e. r = y.num 2^{k - y.k} u
        Integer u = 1;
        for (std::size_t e = 0; e < i; ++e)
            u *= tower.norms[e].v;
        Integer r = mod_pow2(y.num() * pow2(k - y.k()) * u, k);
        return {i, GammaKElem(k, r, {}, 0)};
    }
    throw InsufficientTower("dyadic " + y.to_string() + " needs a stage of level >= " + std::to_string(y.k()));
}

LElem l_push(const LElem& x, std::size_t target_stage, const TowerPrefix& tower)
{
    if (target_stage < x.stage || target_stage >= tower.stages())
        throw InsufficientTower("cannot push to stage " + std::to_string(target_stage));
    LElem out = x;
    while (out.stage < target_stage) {
        out.value = phi_apply(tower.phis[out.stage], out.value);
        ++out.stage;
    }
    return out;
}

LElem l_mul(const LElem& x, const LElem& y, const TowerPrefix& tower)
{
    std::size_t stage = std::max(x.stage, y.stage);
    LElem xp = l_push(x, stage, tower);
    LElem yp = l_push(y, stage, tower);
    return {stage, mul(xp.value, yp.value)};
}

LElem l_inv(const LElem& x, const TowerPrefix&)
{
    return {x.stage, inv(x.value)};
}

bool l_eq(const LElem& x, const LElem& y, const TowerPrefix& tower)
{
    std::size_t stage = std::max(x.stage, y.stage);
    return l_push(x, stage, tower).value == l_push(y, stage, tower).value;
}

LElem l_conj(const LElem& x, const LElem& g, const TowerPrefix& tower)
{
    return l_mul(l_mul(l_inv(g, tower), x, tower), g, tower);
}

LElem l_commutator(const LElem& x, const LElem& y, const TowerPrefix& tower)
{
    return l_mul(l_mul(l_inv(x, tower), l_inv(y, tower), tower), l_mul(x, y, tower), tower);
}

HbarElem l_project(const LElem& x, const TowerPrefix& tower)
{
    HElem h = gk_project(x.value);
    return {Fraction(h.n, tower.products[x.stage]), h.j};
}

std::optional<Dyadic> l_center_value(const LElem& x, const TowerPrefix& tower)
{
    if (!x.value.n.is_zero() || x.value.j != 0)
        return std::nullopt;
    return center_to_dyadic(x.center(), tower);
}

} // namespace tnil
