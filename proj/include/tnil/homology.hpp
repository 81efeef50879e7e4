#pragma once

// Second-homology bookkeeping for the tower maps: induced maps on H_2, the
// 2-connectivity certificates, the colimit H_2 of H-bar and the five-term
// consequence.
//
// H_2(H) = H_2(Gamma_k) = Z/2 are taken as known values; the generator of
// H_2(Gamma_k) is the Hopf class of t^{2^k}. Only induced maps are computed.

#include "tnil/phi.hpp"
#include "tnil/tower.hpp"

#include <string>
#include <vector>

namespace tnil {

enum class InducedMap { Zero, Iso };

std::string to_string(InducedMap m);

struct H2Certificate {
    std::string group;             // "H" or "Gamma_k"
    unsigned level = 0;
    std::string value = "Z/2";     // known value, not recomputed
    unsigned generator_exponent_valuation = 0; // generator is t^{2^level}
};

H2Certificate h2_certificate(unsigned k);

/// s_*: H_2(H) -> H_2(H) is zero iff |s| is even. Requires in_S(s).
InducedMap s_star_on_H2(const LaurentPoly& s);

/// [phi(a), phi(a)^b] evaluated in G2 (integer center) gives t^m; the
/// generator t^{2^k} maps to t^{2^k m}. Returns v_2(2^k m), which must equal
/// source_k + p(s) (TheoremViolation otherwise).
unsigned h2_generator_image_valuation(const PhiData& phi);

struct H1Data {
    std::vector<Integer> invariants; // Smith invariants of the relation matrix; 0 = free factor
    std::string to_string() const;
};

/// Abelianization from the exponent-sum matrix of the relator words.
H1Data abelianization(unsigned k);

struct TwoConnectedReport {
    H1Data source_h1;
    H1Data target_h1;
    // Induced map on Z/3 + Z in the basis (a, b).
    Integer map_aa = 0, map_ab = 0, map_ba = 0, map_bb = 0;
    bool h1_iso = false;
    unsigned h2_valuation = 0;
    bool h2_iso = false;
    bool passed() const { return h1_iso && h2_iso; }
};

TwoConnectedReport two_connected_certificate(const PhiData& phi);

struct ColimH2 {
    bool zero = false;
    std::size_t even_edges = 0;
    std::size_t edges = 0;
    std::string note;
};

/// Folds the parities of the edge norms: the composite map on Z/2 is zero once
/// an even-norm edge occurs.
ColimH2 colim_h2(const TowerPrefix& tower);

struct FiveTermStatement {
    bool emitted = false;
    std::string statement;
    std::string reason;
    std::string provenance;
};

/// H_2(L) -> H_2(Hbar) -> gamma_omega(L)/gamma_{omega+1}(L) -> 1 with
/// H_2(Hbar) = 0 gives gamma_omega(L) = gamma_{omega+1}(L).
FiveTermStatement five_term_report(const ColimH2& h2);

} // namespace tnil
