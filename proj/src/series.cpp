#include "tnil/series.hpp"

#include "tnil/errors.hpp"
#include "tnil/homology.hpp"

#include <algorithm>

namespace tnil {

namespace {

bool has_center(const Model& model)
{
    return model.kind == ModelKind::G2 || (model.kind == ModelKind::GammaK && model.k > 0);
}

IntMatrix2 u_minus_one()
{
    return action_matrix() - IntMatrix2::identity();
}

std::optional<unsigned> normalize_center(const Model& model, std::optional<unsigned> e)
{
    if (!has_center(model))
        return std::nullopt;
    if (e && model.kind == ModelKind::GammaK && *e >= model.k)
        return std::nullopt;
    return e;
}

} // namespace

std::optional<Integer> SubgroupData::center_order(const Model& model) const
{
    if (!center_exponent)
        return Integer(1);
    if (model.kind == ModelKind::G2)
        return std::nullopt;
    return pow2(model.k - *center_exponent);
}

std::string SubgroupData::to_string() const
{
    std::string c = center_exponent ? "<t^" + pow2(*center_exponent).get_str() + ">" : "1";
    return "{center " + c + ", module " + module.to_string() + ", b " + std::to_string(b_part) + "}";
}

SubgroupData whole_group(const Model& model)
{
    return {normalize_center(model, 0u), Lattice::whole(), 1};
}

SubgroupData lcs_step(const Model& model, const SubgroupData& s)
{
    SubgroupData out;
    out.module = s.module.times(u_minus_one());
    if (s.b_part != 0)
        out.module = out.module + Lattice::whole().times(u_minus_one());

    Integer g = 0;
    if (s.center_exponent)
        g = gcd(g, pow2(*s.center_exponent + 1));
    g = gcd(g, s.module.content());
    if (g != 0) {
        unsigned e = static_cast<unsigned>(v2(g));
        if (g != pow2(e))
            throw PreconditionError("lcs_step: subgroup " + s.to_string() + " is not of a representable shape");
        out.center_exponent = normalize_center(model, e);
    }
    out.b_part = 0;
    return out;
}

std::vector<SubgroupData> lcs_chain(const Model& model, int depth)
{
    if (depth < 1)
        throw PreconditionError("lcs_chain: depth must be >= 1");
    std::vector<SubgroupData> chain{whole_group(model)};
    while (static_cast<int>(chain.size()) < depth)
        chain.push_back(lcs_step(model, chain.back()));
    return chain;
}

Lattice h_module_stage(int i)
{
    if (i <= 1)
        return Lattice::whole();
    return image(power(u_minus_one(), static_cast<unsigned long>(i - 1)));
}

GammaOmegaCertificate gamma_omega(const Model& model, int depth_bound, const std::vector<ModuleVec>& probes)
{
    constexpr int probe_bound = 256;
    GammaOmegaCertificate cert;
    cert.model = model;
    cert.depth_bound = depth_bound;
    cert.gamma_omega = {normalize_center(model, 0u), Lattice(), 0};
    cert.order = cert.gamma_omega.center_order(model);

    auto chain = lcs_chain(model, depth_bound);
    const auto expected = normalize_center(model, 0u);
    cert.center_constant = true;
    for (int i = 2; i <= depth_bound; ++i)
        if (chain[i - 1].center_exponent != expected)
            cert.center_constant = false;

    cert.all_probes_exit = true;
    for (const auto& v : probes) {
        if (v.is_zero())
            continue;
        std::optional<int> exit;
        Lattice stage = Lattice::whole();
        for (int i = 1; i <= probe_bound; ++i) {
            if (!stage.contains(v)) {
                exit = i;
                break;
            }
            stage = stage.times(u_minus_one());
        }
        if (!exit)
            throw TheoremViolation("module vector " + v.to_string() + " lies in gamma_i for every i <= " +
                                   std::to_string(probe_bound));
        cert.probes.push_back({v, exit});
    }
    return cert;
}

std::vector<TransfiniteStage> transfinite_chain(const Model& model, int J)
{
    std::vector<TransfiniteStage> out;
    SubgroupData s{normalize_center(model, 0u), Lattice(), 0};
    for (int j = 0; j <= J; ++j) {
        out.push_back({j, s, s.center_order(model)});
        if (s.is_trivial())
            break;
        s = lcs_step(model, s);
    }
    return out;
}

Dyadic commutator_preimage(const Dyadic& c)
{
    return -c.halved();
}

namespace {

// t^{odd} realized as [[a, b, ..., b], x] with depth-1 copies of b, in
// Gamma_k. Returns the central exponent, or nullopt if it is even.
std::optional<Integer> odd_iterated_commutator(unsigned k, int depth)
{
    const GammaKElem A = GammaKElem::a(k);
    const GammaKElem B = GammaKElem::b(k);
    GammaKElem g = A;
    for (int i = 1; i < depth; ++i)
        g = commutator(g, B); // g in gamma_i
    for (const auto& x : {A, conj(A, B)}) {
        GammaKElem w = commutator(g, x); // in gamma_{depth+1}, central
        if (w.n.is_zero() && w.j == 0 && is_odd(w.c))
            return w.c;
    }
    return std::nullopt;
}

} // namespace

WitnessReport witness_not_transfinitely_nilpotent(const std::vector<LaurentPoly>& edges, int J,
                                                  const std::vector<Dyadic>& samples, int commutator_depth)
{
    WitnessReport report;
    report.edges = edges;
    report.J = J;
    report.commutator_depth = commutator_depth;

    bool even = false;
    for (const auto& s : edges)
        if (in_S(s) && norm(s) % 2 == 0)
            even = true;
    if (!even)
        throw PreconditionError("no even-norm edge; the center colimit is trivial");

    unsigned needed = 1;
    for (const auto& c : samples)
        needed = std::max<unsigned>(needed, static_cast<unsigned>(c.k()) + static_cast<unsigned>(J));

    // Cycle the given edges until the top level holds every preimage.
    std::vector<LaurentPoly> cycled = edges;
    TowerPrefix tower = tower_build(cycled);
    while (tower.levels.back() < needed) {
        cycled.push_back(edges[cycled.size() % edges.size()]);
        tower = tower_build(cycled);
    }
    report.stages_used = tower.stages();
    report.top_level = tower.levels.back();

    report.center_chain_constant = true;
    for (unsigned k : tower.levels) {
        if (k == 0)
            continue;
        auto chain = lcs_chain(Model::gamma(k), commutator_depth);
        for (int i = 2; i <= commutator_depth; ++i)
            if (chain[i - 1].center_exponent != std::optional<unsigned>(0u))
                report.center_chain_constant = false;
    }

    // Depth evidence per level, shared by every sample living there.
    std::map<unsigned, bool> level_in_gamma_omega;
    auto in_gamma_omega_at = [&](unsigned k) {
        auto it = level_in_gamma_omega.find(k);
        if (it != level_in_gamma_omega.end())
            return it->second;
        bool ok = true;
        for (int d = 1; d <= commutator_depth && ok; ++d)
            ok = odd_iterated_commutator(k, d).has_value();
        level_in_gamma_omega[k] = ok;
        return ok;
    };

    const LElem B = l_from_stage(0, GammaKElem::b(tower.levels[0]), tower);

    report.gamma_omega_contains_samples = true;
    report.preimages_verified = true;
    report.never_shrinks = true;
    for (const auto& c : samples) {
        WitnessSample ws;
        ws.c = c;
        LElem x = l_central(c, tower);
        ws.in_gamma_omega = c.is_zero() || in_gamma_omega_at(tower.levels[x.stage]);
        ws.preimage_chain.push_back(c);
        ws.dyadic_verified = true;
        ws.model_verified = true;
        for (int j = 0; j < J; ++j) {
            const Dyadic& target = ws.preimage_chain.back();
            Dyadic y = commutator_preimage(target);
            if (!(-2 * y == target))
                ws.dyadic_verified = false;
            LElem Y = l_central(y, tower);
            if (!y.is_zero() && !in_gamma_omega_at(tower.levels[Y.stage]))
                ws.in_gamma_omega = false;
            auto value = l_center_value(l_commutator(Y, B, tower), tower);
            if (!value || !(*value == target))
                ws.model_verified = false;
            ws.preimage_chain.push_back(y);
        }
        report.gamma_omega_contains_samples = report.gamma_omega_contains_samples && ws.in_gamma_omega;
        report.preimages_verified = report.preimages_verified && ws.dyadic_verified && ws.model_verified;
        report.never_shrinks = report.never_shrinks && ws.dyadic_verified && ws.model_verified &&
                               static_cast<int>(ws.preimage_chain.size()) == J + 1;
        report.samples.push_back(std::move(ws));
    }

    auto h2 = colim_h2(tower);
    auto statement = five_term_report(h2);
    report.five_term_consistent = statement.emitted && h2.zero;
    return report;
}

std::vector<Dyadic> dyadic_samples(unsigned max_k, std::size_t count)
{
    std::vector<Dyadic> out;
    if (max_k == 0 || count == 0)
        return out;
    std::size_t per_level = (count + max_k - 1) / max_k;
    for (unsigned k = 1; k <= max_k && out.size() < count; ++k) {
        unsigned long odd_count = 1UL << (k - 1);
        std::size_t take = std::min<std::size_t>(per_level, odd_count);
        for (std::size_t i = 0; i < take && out.size() < count; ++i) {
            unsigned long idx = take == 1 ? 0 : i * (odd_count - 1) / (take - 1);
            out.emplace_back(Integer(2 * idx + 1), k);
        }
    }
    return out;
}

} // namespace tnil
