#pragma once

// Normal-form models of
//   H   = <a, b | a^{b^2} = a a^{3b}, [a, a^b] = 1>            = N x| <b>
//   G2  = <a, b | a^{b^2} = a a^{3b}, [a,a^b,a] = [a,a^b,a^b] = 1>
//   Gamma_k = G2 / <[a,a^b,b,...,b] (k times)>  (t has order 2^k)
//   Hbar = N_S x| <b>
// with t = [a, a^b] = a^{-1} (a^b)^{-1} a a^b.
//
// G2 normal form: t^c a^{n1} (a^b)^{n2} b^j. The subgroup M = <a, a^b> is a
// Heisenberg group with central t; b acts on it by the automorphism
// theta(g) = g^b = b^{-1} g b, which is
//
//   theta(t^c x^n) = t^{-c + q(n)} x^{nU},   q(n) = -3 C(n2, 2) - n1 n2,
//
// where x^n = a^{n1} (a^b)^{n2}. q is fixed by theta(a) = a^b,
// theta(a^b) = a (a^b)^3 and the product rule
//   x^n x^m = t^{beta(n,m)} x^{n+m},  beta(n, m) = -n2 m1.

#include "tnil/integer.hpp"
#include "tnil/localization.hpp"
#include "tnil/quadratic.hpp"

#include <map>
#include <string>
#include <vector>

namespace tnil {

/// b^j a^n.
struct HElem {
    ModuleVec n;
    Exponent j = 0;

    static HElem identity() { return {}; }
    static HElem a() { return {{1, 0}, 0}; }
    static HElem b() { return {{}, 1}; }

    friend bool operator==(const HElem&, const HElem&) = default;
    std::string to_string() const;
};

HElem h_mul(const HElem& x, const HElem& y);
HElem h_inv(const HElem& x);

/// t^c a^{n1} (a^b)^{n2} b^j with c an integer.
struct G2Elem {
    Integer c = 0;
    ModuleVec n;
    Exponent j = 0;

    static G2Elem identity() { return {}; }
    static G2Elem a() { return {0, {1, 0}, 0}; }
    static G2Elem b() { return {0, {}, 1}; }
    static G2Elem t() { return {1, {}, 0}; }

    friend bool operator==(const G2Elem&, const G2Elem&) = default;
    std::string to_string() const;
};

G2Elem g2_mul(const G2Elem& x, const G2Elem& y);
G2Elem g2_inv(const G2Elem& x);

/// Image of a G2 element in H (drops t).
HElem g2_project(const G2Elem& x);

/// G2 element reduced to Gamma_k: c read mod 2^k. k = 0 is H.
struct GammaKElem {
    unsigned k = 0;
    Integer c = 0; // in [0, 2^k)
    ModuleVec n;
    Exponent j = 0;

    GammaKElem() = default;
    GammaKElem(unsigned level, const Integer& center, ModuleVec module, Exponent b_exp);
    GammaKElem(unsigned level, const G2Elem& g);

    static GammaKElem identity(unsigned k) { return {k, 0, {}, 0}; }
    static GammaKElem a(unsigned k) { return {k, 0, {1, 0}, 0}; }
    static GammaKElem b(unsigned k) { return {k, 0, {}, 1}; }
    static GammaKElem t(unsigned k) { return {k, 1, {}, 0}; }

    G2Elem lift() const { return {c, n, j}; }

    friend bool operator==(const GammaKElem&, const GammaKElem&) = default;
    std::string to_string() const;
};

/// Throws LevelMismatch when x.k != y.k.
GammaKElem gk_mul(const GammaKElem& x, const GammaKElem& y);
GammaKElem gk_inv(const GammaKElem& x);
HElem gk_project(const GammaKElem& x);

/// Group operations shared by every model; used by generic code (relators,
/// commutators, powers).
template <class G>
struct GroupOps;

template <>
struct GroupOps<HElem> {
    static HElem mul(const HElem& x, const HElem& y) { return h_mul(x, y); }
    static HElem inv(const HElem& x) { return h_inv(x); }
};

template <>
struct GroupOps<G2Elem> {
    static G2Elem mul(const G2Elem& x, const G2Elem& y) { return g2_mul(x, y); }
    static G2Elem inv(const G2Elem& x) { return g2_inv(x); }
};

template <>
struct GroupOps<GammaKElem> {
    static GammaKElem mul(const GammaKElem& x, const GammaKElem& y) { return gk_mul(x, y); }
    static GammaKElem inv(const GammaKElem& x) { return gk_inv(x); }
};

template <class G>
G mul(const G& x, const G& y)
{
    return GroupOps<G>::mul(x, y);
}

template <class G>
G inv(const G& x)
{
    return GroupOps<G>::inv(x);
}

template <class G>
G mul(const G& x, const G& y, const G& z)
{
    return mul(mul(x, y), z);
}

/// x^y = y^{-1} x y.
template <class G>
G conj(const G& x, const G& y)
{
    return mul(inv(y), x, y);
}

/// [x, y] = x^{-1} y^{-1} x y.
template <class G>
G commutator(const G& x, const G& y)
{
    return mul(mul(inv(x), inv(y)), mul(x, y));
}

/// x^e by repeated squaring; identity must be supplied (carries the level).
template <class G>
G pow(const G& x, const Integer& e, const G& identity)
{
    G base = e < 0 ? inv(x) : x;
    Integer n = abs(e);
    G result = identity;
    while (n != 0) {
        if (mpz_odd_p(n.get_mpz_t()))
            result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

/// A defining relator, evaluated on images (A, B) of the generators a, b.
template <class G>
struct NamedElement {
    std::string name;
    G value;
};

/// Defining relators of Gamma_k (k = 0 gives H, where [a, a^b] itself is a
/// relator) evaluated on (A, B):
///   a^{b^2} (a (a^3)^b)^{-1},  [t, a],  [t, a^b],  [t, b, ..., b] (k times)
/// with t = [A, A^B].
template <class G>
std::vector<NamedElement<G>> gamma_relators(const G& A, const G& B, unsigned k)
{
    G Ab = conj(A, B);
    G lhs = conj(Ab, B);
    G rhs = mul(A, conj(mul(A, A, A), B));
    G t = commutator(A, Ab);
    std::vector<NamedElement<G>> out;
    out.push_back({"a^{b^2} = a a^{3b}", mul(lhs, inv(rhs))});
    out.push_back({"[a,a^b,a] = 1", commutator(t, A)});
    out.push_back({"[a,a^b,a^b] = 1", commutator(t, Ab)});
    G iterated = t;
    for (unsigned i = 0; i < k; ++i)
        iterated = commutator(iterated, B);
    out.push_back({"[a,a^b" + std::string(k == 0 ? "" : ",b^" + std::to_string(k)) + "] = 1", iterated});
    return out;
}

/// Relators of G2 (no b-tower relator).
template <class G>
std::vector<NamedElement<G>> g2_relators(const G& A, const G& B)
{
    auto r = gamma_relators(A, B, 0);
    r.pop_back();
    return r;
}

/// Relators of H: the defining relator and [a, a^b].
template <class G>
std::vector<NamedElement<G>> h_relators(const G& A, const G& B)
{
    auto r = gamma_relators(A, B, 0);
    return {r[0], r[3]};
}

/// x^n = a^{n1} (a^b)^{n2} lifted with zero central coordinate.
G2Elem g2_module(const ModuleVec& n);

/// a^s := a^{n_0 b^{e_0}} ... a^{n_l b^{e_l}} in ascending exponent order,
/// where a^{n b^e} = (a^{b^e})^n.
G2Elem g2_a_power(const LaurentPoly& s);

/// A word over a^{+-1}, b^{+-1}: letters 1 = a, -1 = a^{-1}, 2 = b, -2 = b^{-1}.
using Word = std::vector<int>;

Word word_inverse(const Word& w);
Word word_concat(const Word& x, const Word& y);
Word word_commutator(const Word& x, const Word& y);
/// b^{-e} w b^e.
Word word_conj_b(const Word& w, Exponent e);
/// a-exponent sum and b-exponent sum.
std::pair<long, long> word_exponent_sums(const Word& w);
std::string word_to_string(const Word& w);

/// Relator words of Gamma_k over {a, b}; same list and order as gamma_relators.
/// The last word has length 4^k * 8; keep k small.
std::vector<Word> gamma_relator_words(unsigned k);
/// Exponent sums of gamma_relator_words(k), without building the words. The
/// last relator is a commutator for every k, so its sums are zero.
std::vector<std::pair<long, long>> gamma_relator_exponent_sums(unsigned k);

/// Word evaluator independent of the closed-form theta/q formulas.
///
/// Collection over the polycyclic sequence t, a, a^b, b. The state is a
/// collected word t^c a^{n1} (a^b)^{n2} b^j; appending a letter moves it left
/// past b^j using the conjugation rules
///   b a b^{-1} = a^b a^{-3},  b a^b b^{-1} = a,
///   b^{-1} a b = a^b,         b^{-1} a^b b = a (a^b)^3
/// (memoized per power of b) and then collects inside <a, a^b> with
///   (a^b)^p a^q = a^q (a^b)^p t^{-pq},
/// the power form of the single commutation relation a^b a = a a^b t^{-1}.
class WordCollector {
public:
    G2Elem evaluate(const Word& w);

private:
    struct MElem {
        Integer c = 0, n1 = 0, n2 = 0;
    };
    static MElem m_mul(const MElem& x, const MElem& y);
    static MElem m_inv(const MElem& x);
    // b^e g b^{-e} for g = a (gen 0) or a^b (gen 1).
    const MElem& conjugate(Exponent e, int gen);

    std::map<std::pair<Exponent, int>, MElem> memo_;
};

enum class ModelKind { H, G2, GammaK };

struct Model {
    ModelKind kind = ModelKind::H;
    unsigned k = 0; // GammaK only

    static Model h() { return {ModelKind::H, 0}; }
    static Model g2() { return {ModelKind::G2, 0}; }
    static Model gamma(unsigned k) { return {ModelKind::GammaK, k}; }

    std::string to_string() const;
};

/// Evaluates w with WordCollector and maps to the requested model.
G2Elem word_oracle_g2(const Word& w);
HElem word_oracle_h(const Word& w);
GammaKElem word_oracle_gamma(const Word& w, unsigned k);

/// Evaluates w with the closed-form laws.
template <class G>
G evaluate_word(const Word& w, const G& A, const G& B, const G& identity)
{
    G Ainv = inv(A), Binv = inv(B);
    G r = identity;
    for (int letter : w) {
        switch (letter) {
        case 1: r = mul(r, A); break;
        case -1: r = mul(r, Ainv); break;
        case 2: r = mul(r, B); break;
        case -2: r = mul(r, Binv); break;
        default: break;
        }
    }
    return r;
}

/// b^j a^n with n in N_S.
struct HbarElem {
    Fraction n;
    Exponent j = 0;
    std::string to_string() const;
};

HbarElem hbar_mul(const HbarElem& x, const HbarElem& y);
HbarElem hbar_inv(const HbarElem& x);
bool hbar_eq(const HbarElem& x, const HbarElem& y);

} // namespace tnil
