#include "tnil/homology.hpp"

#include "tnil/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tnil {

std::string to_string(InducedMap m)
{
    return m == InducedMap::Zero ? "zero" : "iso";
}

H2Certificate h2_certificate(unsigned k)
{
    H2Certificate cert;
    cert.group = k == 0 ? "H" : "Gamma_" + std::to_string(k);
    cert.level = k;
    cert.generator_exponent_valuation = k;
    return cert;
}

InducedMap s_star_on_H2(const LaurentPoly& s)
{
    if (!in_S(s))
        throw PreconditionError("s_star_on_H2: " + s.to_string() + " is not in S");
    return is_odd(norm(s)) ? InducedMap::Iso : InducedMap::Zero;
}

unsigned h2_generator_image_valuation(const PhiData& phi)
{
    G2Elem A = GammaKElem(phi.target_k, g2_a_power(phi.s)).lift();
    A = mul(A, pow(G2Elem::t(), phi.r, G2Elem::identity()));
    G2Elem t_image = commutator(A, conj(A, G2Elem::b()));
    if (!t_image.n.is_zero() || t_image.j != 0 || t_image.c == 0)
        throw TheoremViolation("image of t is not a nonzero power of t");
    unsigned valuation = phi.source_k + static_cast<unsigned>(v2(t_image.c));
    if (valuation != phi.source_k + phi.norm.p)
        throw TheoremViolation("H_2 generator image has valuation " + std::to_string(valuation) + ", expected " +
                               std::to_string(phi.source_k + phi.norm.p));
    return valuation;
}

std::string H1Data::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& d : invariants) {
        if (d == 1)
            continue;
        out << (first ? "" : " + ") << (d == 0 ? std::string("Z") : "Z/" + d.get_str());
        first = false;
    }
    return first ? "0" : out.str();
}

namespace {

// Smith invariants of an integer matrix with two columns (a, b).
std::vector<Integer> smith_two_columns(std::vector<std::pair<Integer, Integer>> rows)
{
    // Row-reduce to Hermite form, then read invariants from the 2x2 block.
    Lattice l([&] {
        std::vector<ModuleVec> v;
        for (auto& [x, y] : rows)
            v.push_back({x, y});
        return v;
    }());
    Integer d1 = 0, d2 = 0;
    const auto& basis = l.basis();
    if (basis.size() == 2) {
        d1 = gcd(gcd(basis[0].x1, basis[0].x2), basis[1].x2);
        d2 = abs(basis[0].x1 * basis[1].x2) / d1;
    } else if (basis.size() == 1) {
        d1 = gcd(basis[0].x1, basis[0].x2);
        d2 = 0;
    }
    return {d1, d2};
}

} // namespace

H1Data abelianization(unsigned k)
{
    std::vector<std::pair<Integer, Integer>> rows;
    for (const auto& [sa, sb] : gamma_relator_exponent_sums(k))
        rows.emplace_back(sa, sb);
    return {smith_two_columns(rows)};
}

TwoConnectedReport two_connected_certificate(const PhiData& phi)
{
    TwoConnectedReport rep;
    rep.source_h1 = abelianization(phi.source_k);
    rep.target_h1 = abelianization(phi.target_k);

    // Images of a and b under phi, abelianized: a-exponent of phi(a) is the
    // coordinate sum of its module part (a^b ~ a), b-exponent is its b power.
    rep.map_aa = phi.image_a.n.x1 + phi.image_a.n.x2;
    rep.map_ab = phi.image_a.j;
    rep.map_ba = 0;
    rep.map_bb = 1;

    const bool same_shape = rep.source_h1.invariants == rep.target_h1.invariants;
    // Both are Z/d + Z with the torsion on a; invertible iff the torsion
    // coefficient is a unit mod d and b maps to a generator of the free part.
    Integer torsion = 0;
    for (const auto& d : rep.target_h1.invariants)
        if (d != 0 && d != 1)
            torsion = d;
    bool a_unit = torsion == 0 ? abs(rep.map_aa) == 1 : gcd(rep.map_aa, torsion) == 1;
    rep.h1_iso = same_shape && torsion == 3 && a_unit && rep.map_ab == 0 && abs(rep.map_bb) == 1;

    rep.h2_valuation = h2_generator_image_valuation(phi);
    // Class of t^{2^k m} in H_2(Gamma_K) = Z/2 generated by t^{2^K}.
    rep.h2_iso = rep.h2_valuation == phi.target_k;
    return rep;
}

ColimH2 colim_h2(const TowerPrefix& tower)
{
    ColimH2 out;
    out.edges = tower.edges.size();
    for (const auto& nd : tower.norms)
        if (nd.p >= 1)
            ++out.even_edges;
    out.zero = out.even_edges > 0;
    out.note = out.zero ? "composite H_2(H) -> H_2(H) along the prefix is zero; the full colimit needs a cofinal "
                          "family of even-norm edges (asserted, not checked)"
                        : "every edge norm is odd; the prefix maps Z/2 isomorphically";
    return out;
}

FiveTermStatement five_term_report(const ColimH2& h2)
{
    FiveTermStatement st;
    st.provenance = "paper-assumed";
    if (h2.zero) {
        st.emitted = true;
        st.statement = "gamma_omega(L(H)) = gamma_{omega+1}(L(H))";
        st.reason = "H_2(Hbar) = 0 and the five-term sequence H_2(L) -> H_2(Hbar) -> "
                    "gamma_omega/gamma_{omega+1} -> 1";
    } else {
        st.emitted = false;
        st.reason = "H_2 colimit not shown to vanish: no even-norm edge in the prefix";
    }
    return st;
}

} // namespace tnil
