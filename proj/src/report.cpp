#include "tnil/report.hpp"

#include "tnil/cohn.hpp"
#include "tnil/errors.hpp"
#include "tnil/homology.hpp"
#include "tnil/phi.hpp"
#include "tnil/series.hpp"
#include "tnil/tower.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tnil::report {

std::string to_string(Provenance p)
{
    switch (p) {
    case Provenance::Verified: return "verified";
    case Provenance::Derived: return "derived";
    case Provenance::PaperAssumed: return "paper-assumed";
    }
    return "derived";
}

Json big(const Integer& n)
{
    if (n.fits_slong_p())
        return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

Builder::Builder(std::string command) : command_(std::move(command)) {}

void Builder::derived(const std::string& name, Json value)
{
    claims_.push_back({{"name", name}, {"value", std::move(value)}, {"provenance", "derived"}});
}

void Builder::assumed(const std::string& name, Json value)
{
    claims_.push_back({{"name", name}, {"value", std::move(value)}, {"provenance", "paper-assumed"}});
}

void Builder::check(const std::string& name, bool holds, Json value, Provenance p)
{
    claims_.push_back({{"name", name}, {"value", std::move(value)}, {"provenance", to_string(p)}, {"holds", holds}});
    passed_ = passed_ && holds;
}

Json Builder::finish() const
{
    return {{"schema", "tnil.report"},
            {"schema_version", kSchemaVersion},
            {"command", command_},
            {"inputs", inputs_},
            {"claims", claims_},
            {"warnings", warnings_},
            {"passed", passed_}};
}

namespace {

Json edge_list(const std::vector<LaurentPoly>& edges)
{
    Json out = Json::array();
    for (const auto& s : edges)
        out.push_back(s.to_string());
    return out;
}

Json norm_json(const NormData& nd)
{
    return {{"s", nd.s.to_string()}, {"norm", big(nd.norm)}, {"p", nd.p}, {"v", big(nd.v)}};
}

Json h1_json(const H1Data& h)
{
    Json inv = Json::array();
    for (const auto& x : h.invariants)
        inv.push_back(big(x));
    return {{"group", h.to_string()}, {"invariants", inv}};
}

Json cohn_json(const CohnSuiteReport& r)
{
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"trial", f.trial}, {"matrix", f.matrix}, {"reason", f.reason}});
    return {{"m", r.modulus_exponent},     {"trials", r.trials},
            {"max_size", r.max_size},      {"max_degree", r.max_degree},
            {"seed", r.seed},              {"verified", r.verified},
            {"coherence_checks", r.coherence_checks}, {"coherence_passed", r.coherence_passed},
            {"failures", failures}};
}

Json optional_order(const std::optional<Integer>& o)
{
    return o ? big(*o) : Json("infinite");
}

void phi_claims(Builder& b, const PhiData& phi, const std::string& prefix)
{
    const unsigned K = phi.target_k;
    for (const auto& r : phi.relators)
        b.check(prefix + "relator " + r.name, r.trivial, r.image.to_string());
    b.check(prefix + "phi(t) = t^|s|", phi_apply(phi, GammaKElem::t(phi.source_k)) == GammaKElem(K, phi.norm.norm, {}, 0),
            phi.image_t.to_string());
    b.check(prefix + "phi(b) = b", phi_apply(phi, GammaKElem::b(phi.source_k)) == GammaKElem::b(K));
    b.check(prefix + "projection to H is the s-action", tower_diagram_commutes(phi));
    auto ns = normal_surjectivity(phi);
    b.check(prefix + "normally surjective", ns.surjective,
            {{"collapse_order", ns.collapse_order}, {"image_exponent", big(ns.image_exponent)}});

    bool valuation_ok = true;
    Json valuation;
    try {
        valuation = h2_generator_image_valuation(phi);
    } catch (const TheoremViolation& e) {
        valuation_ok = false;
        valuation = e.what();
    }
    b.check(prefix + "H_2 generator t^{2^k} maps to t^{2^{k+p}}", valuation_ok, valuation);

    auto tc = two_connected_certificate(phi);
    b.check(prefix + "2-connected", tc.passed(),
            {{"h1_source", h1_json(tc.source_h1)},
             {"h1_target", h1_json(tc.target_h1)},
             {"h1_map", {big(tc.map_aa), big(tc.map_ab), big(tc.map_ba), big(tc.map_bb)}},
             {"h1_iso", tc.h1_iso},
             {"h2_valuation", tc.h2_valuation},
             {"h2_iso", tc.h2_iso}});
}

} // namespace

Json norm(const LaurentPoly& s)
{
    Builder b("norm");
    b.inputs()["s"] = s.to_string();
    NormData nd = norm_data(s);
    b.derived("norm", big(nd.norm));
    b.derived("p", nd.p);
    b.derived("v", big(nd.v));
    b.derived("evaluate_at_U", evaluate_at_U(s).to_string());
    b.derived("H_2(H) induced map", in_S(s) ? tnil::to_string(s_star_on_H2(s)) : "undefined");
    b.check("2^p v = norm, v odd", pow2(nd.p) * nd.v == nd.norm && is_odd(nd.v));
    if (in_S(s)) {
        int predicted = predicted_parity(s);
        b.derived("predicted parity", predicted);
        b.check("predicted parity = norm mod 2", mod(nd.norm, 2) == predicted);
    } else {
        b.warn("s is not in S (augmentation " + augmentation(s).get_str() + "); parity prediction skipped");
    }
    return b.finish();
}

Json parity_verify(int max_span, int max_abs_coeff)
{
    Builder b("parity-verify");
    b.inputs()["max_span"] = max_span;
    b.inputs()["max_coeff"] = max_abs_coeff;
    ParityReport r = verify_parity_range(max_span, max_abs_coeff);
    b.derived("checked", r.checked);
    b.derived("even norms", r.even_norms);
    b.derived("exponent normalization", "support shifted to start at b^0 before applying the formula");
    Json ce = Json::array();
    for (const auto& c : r.counterexamples)
        ce.push_back({{"s", c.s.to_string()}, {"norm", big(c.norm)}, {"predicted", c.predicted}});
    b.check("parity formula agrees with the determinant", r.counterexamples.empty(), ce);
    b.check("no vanishing norm", r.zero_norms == 0, r.zero_norms);
    return b.finish();
}

Json phi_check(const LaurentPoly& s, unsigned k)
{
    Builder b("phi-check");
    b.inputs()["s"] = s.to_string();
    b.inputs()["k"] = k;
    PhiData phi = phi_build(s, k);
    b.derived("norm", norm_json(phi.norm));
    b.derived("target level", phi.target_k);
    b.derived("l", {{"exact", big(phi.l.exact)}, {"mod 2^k", big(phi.l.mod_level)}});
    b.derived("r", big(phi.r));
    b.derived("image of a", phi.image_a.to_string());
    b.check("3r = -l mod 2^k", phi.congruence_holds);
    b.derived("3r = +l mod 2^k", phi.plus_sign_congruence_holds);
    phi_claims(b, phi, "");
    b.assumed("H_2(Gamma_k) = Z/2 generated by t^{2^k}", h2_certificate(k).value);
    return b.finish();
}

Json tower(const std::vector<LaurentPoly>& edges, bool checks, std::size_t cohn_trials)
{
    Builder b("tower");
    b.inputs()["edges"] = edge_list(edges);
    b.inputs()["checks"] = checks;
    TowerPrefix t = tower_build(edges);
    b.derived("levels", t.levels);
    Json norms = Json::array();
    for (const auto& nd : t.norms)
        norms.push_back(norm_json(nd));
    b.derived("norms", norms);
    std::vector<std::string> distinct;
    std::size_t even = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        even += t.norms[i].p > 0;
        if (std::find(distinct.begin(), distinct.end(), edges[i].to_string()) == distinct.end())
            distinct.push_back(edges[i].to_string());
    }
    b.derived("coverage of S", {{"distinct_edges", distinct.size()}, {"even_norm_edges", even}});
    bool relators_ok = true;
    for (const auto& phi : t.phis)
        relators_ok = relators_ok && phi.all_relators_trivial();
    b.check("every edge map respects the relators", relators_ok, t.phis.size());
    if (!t.has_even_edge())
        b.warn("no even-norm edge; center colimit trivial");

    if (!checks)
        return b.finish();

    for (std::size_t i = 0; i < t.phis.size(); ++i)
        phi_claims(b, t.phis[i], "edge " + std::to_string(i + 1) + ": ");

    ColimH2 h2 = colim_h2(t);
    b.derived("colimit H_2", {{"zero", h2.zero}, {"even_edges", h2.even_edges}, {"edges", h2.edges}, {"note", h2.note}});
    FiveTermStatement ft = five_term_report(h2);
    if (ft.emitted)
        b.assumed("five-term consequence", {{"statement", ft.statement}, {"reason", ft.reason}});
    else
        b.warn("five-term consequence withheld: " + ft.reason);

    LocalityReport loc = locality_report(t, cohn_trials);
    if (loc.emitted) {
        Json ev = Json::array();
        for (const auto& e : loc.evidence)
            ev.push_back(cohn_json(e));
        b.check("truncations Z/2^m are Cohn local", loc.passed(), ev);
        b.assumed("Hbar is local", loc.hbar_locality);
        b.assumed("locality of the colimit", loc.statement);
    } else {
        b.warn("locality statement withheld: " + loc.reason);
    }
    return b.finish();
}

Json lcs(const Model& model, int depth, int J)
{
    Builder b("lcs");
    b.inputs()["model"] = model.to_string();
    b.inputs()["depth"] = depth;
    b.inputs()["J"] = J;

    auto chain = lcs_chain(model, depth);
    Json stages = Json::array();
    bool h_indices = true, center_constant = true;
    Integer expected = 1;
    for (int i = 1; i <= depth; ++i) {
        const auto& st = chain[i - 1];
        auto index = st.module.index();
        stages.push_back({{"i", i},
                          {"subgroup", st.to_string()},
                          {"module_index", index ? big(*index) : Json("infinite")},
                          {"center_order", model.kind == ModelKind::H ? Json(1) : optional_order(st.center_order(model))}});
        h_indices = h_indices && index && *index == expected;
        expected *= 3;
        if (i >= 2 && model.kind != ModelKind::H)
            center_constant = center_constant && st.center_exponent == std::optional<unsigned>(0);
    }
    b.derived("stages", stages);
    b.check("module indices are 3^{i-1}", h_indices);
    if (model.kind != ModelKind::H)
        b.check("center part is <t> for i >= 2", center_constant);

    std::vector<ModuleVec> probes;
    for (int x = -10; x <= 10; ++x)
        for (int y = -10; y <= 10; ++y)
            if (x != 0 || y != 0)
                probes.push_back({x, y});
    auto cert = gamma_omega(model, depth, probes);
    int worst = 0;
    for (const auto& p : cert.probes)
        worst = std::max(worst, p.exit_stage.value_or(0));
    b.derived("gamma_omega", {{"subgroup", cert.gamma_omega.to_string()}, {"order", optional_order(cert.order)}});
    b.check("gamma_omega certificate", cert.passed(),
            {{"probes", cert.probes.size()}, {"latest_exit_stage", worst}, {"center_constant", cert.center_constant}});
    if (model.kind == ModelKind::H)
        return b.finish();

    auto trans = transfinite_chain(model, J);
    Json orders = Json::array();
    for (const auto& st : trans)
        orders.push_back(optional_order(st.order));
    b.derived("gamma_{omega+j} orders", orders);
    if (model.kind == ModelKind::GammaK) {
        bool halving = true;
        for (std::size_t j = 0; j + 1 < trans.size(); ++j)
            halving = halving && *trans[j].order == 2 * *trans[j + 1].order;
        b.check("successive quotients have order 2", halving);
        if (J >= static_cast<int>(model.k))
            b.check("terminates at j = k", trans.size() == model.k + 1 && trans.back().subgroup.is_trivial(),
                    static_cast<int>(trans.size()) - 1);
    }
    return b.finish();
}

Json witness(const std::vector<LaurentPoly>& edges, int J, std::size_t samples, unsigned max_k)
{
    Builder b("witness");
    b.inputs()["edges"] = edge_list(edges);
    b.inputs()["J"] = J;
    b.inputs()["samples"] = samples;
    b.inputs()["max_k"] = max_k;
    auto rep = witness_not_transfinitely_nilpotent(edges, J, dyadic_samples(max_k, samples));
    b.derived("stages used", rep.stages_used);
    b.derived("top level", rep.top_level);
    b.derived("commutator depth", rep.commutator_depth);
    Json list = Json::array();
    for (const auto& s : rep.samples)
        list.push_back({{"c", s.c.to_string()},
                        {"y_J", s.preimage_chain.back().to_string()},
                        {"in_gamma_omega", s.in_gamma_omega},
                        {"dyadic_verified", s.dyadic_verified},
                        {"model_verified", s.model_verified}});
    b.derived("samples", list);
    b.check("center part of gamma_i constant", rep.center_chain_constant);
    b.check("samples lie in gamma_omega", rep.gamma_omega_contains_samples);
    b.check("commutator preimages verified", rep.preimages_verified);
    b.check("gamma_{omega+j} never shrinks for j <= J", rep.never_shrinks);
    b.check("consistent with the five-term consequence", rep.five_term_consistent);
    b.assumed("H_2(H) = H_2(Gamma_k) = Z/2", "Z/2");
    return b.finish();
}

Json cohn(unsigned m, std::size_t trials, std::size_t n, int deg, std::uint64_t seed)
{
    Builder b("cohn");
    b.inputs()["m"] = m;
    b.inputs()["trials"] = trials;
    b.inputs()["n"] = n;
    b.inputs()["deg"] = deg;
    b.inputs()["seed"] = seed;
    b.derived("Delta nilpotency degree", delta_nilpotency_degree({m}));
    auto r = cohn_local_suite({m}, trials, n, deg, seed);
    b.check("unique lifts", r.failures.empty() && r.verified == r.trials, cohn_json(r));
    b.check("direct-limit coherence", r.coherence_passed == r.coherence_checks,
            {{"checks", r.coherence_checks}, {"passed", r.coherence_passed}});
    b.assumed("Hbar is local", "paper-assumed");
    return b.finish();
}

Model parse_model(const std::string& text)
{
    if (text == "H")
        return Model::h();
    if (text == "G2")
        return Model::g2();
    std::string rest;
    if (text.rfind("Gamma_", 0) == 0)
        rest = text.substr(6);
    else if (text.rfind("Gamma", 0) == 0)
        rest = text.substr(5);
    else
        throw std::invalid_argument("unknown model '" + text + "' (expected H, G2 or Gamma_<k>)");
    if (rest.empty() || rest.size() > 4 || rest.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad level in model '" + text + "'");
    return Model::gamma(static_cast<unsigned>(std::stoul(rest)));
}

std::vector<LaurentPoly> parse_edges(const std::string& csv)
{
    std::vector<LaurentPoly> out;
    if (csv.find_first_not_of(" \t") == std::string::npos)
        return out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_laurent(item));
    if (!csv.empty() && csv.back() == ',')
        throw ParseError("trailing comma in edge list", csv.size() - 1);
    return out;
}

namespace {

std::string scalar_text(const Json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

} // namespace

std::string render_text(const Json& r)
{
    std::ostringstream os;
    os << r.value("command", "?") << " (" << r.value("schema", "") << " v" << r.value("schema_version", 0) << ")\n";
    if (r.contains("error")) {
        os << "error: " << scalar_text(r["error"]["kind"]) << ": " << scalar_text(r["error"]["message"]) << "\n";
        return os.str();
    }
    os << "inputs:\n";
    for (const auto& [key, value] : r["inputs"].items())
        os << "  " << key << " = " << scalar_text(value) << "\n";
    os << "claims:\n";
    for (const auto& c : r["claims"]) {
        os << "  [" << c["provenance"].get<std::string>() << "] ";
        if (c.contains("holds"))
            os << (c["holds"].get<bool>() ? "ok   " : "FAIL ");
        os << c["name"].get<std::string>();
        const Json& v = c["value"];
        bool flat = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
        if (flat) {
            os << ": " << v.dump() << "\n";
        } else if (v.is_array() || v.is_object()) {
            if (!v.empty())
                os << "\n" << v.dump(2) << "\n";
            else
                os << "\n";
        } else if (!v.is_null()) {
            os << ": " << scalar_text(v) << "\n";
        } else {
            os << "\n";
        }
    }
    for (const auto& w : r["warnings"])
        os << "warning: " << w.get<std::string>() << "\n";
    os << (r["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

bool all_claims_labeled(const Json& r)
{
    if (!r.contains("claims"))
        return false;
    for (const auto& c : r["claims"]) {
        if (!c.contains("provenance") || !c["provenance"].is_string())
            return false;
        const auto p = c["provenance"].get<std::string>();
        if (p != "verified" && p != "derived" && p != "paper-assumed")
            return false;
    }
    return true;
}

} // namespace tnil::report
