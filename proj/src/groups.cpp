#include "tnil/groups.hpp"

#include "tnil/errors.hpp"

#include <sstream>

namespace tnil {

namespace {

// Central coordinate of x^n x^m relative to x^{n+m}.
Integer beta(const ModuleVec& n, const ModuleVec& m)
{
    return -n.x2 * m.x1;
}

// theta(x^n) = t^{q(n)} x^{nU}.
Integer q(const ModuleVec& n)
{
    Integer pairs = n.x2 * (n.x2 - 1) / 2;
    return -3 * pairs - n.x1 * n.x2;
}

struct CentralModule {
    Integer c;
    ModuleVec n;
};

CentralModule theta(const CentralModule& g)
{
    return {-g.c + q(g.n), g.n * action_matrix()};
}

CentralModule theta_inverse(const CentralModule& g)
{
    ModuleVec pre = g.n * action_matrix_inverse();
    return {-g.c + q(pre), pre};
}

// b^{-e} g b^{e}, i.e. theta^e(g).
CentralModule theta_power(CentralModule g, Exponent e)
{
    for (; e > 0; --e)
        g = theta(g);
    for (; e < 0; ++e)
        g = theta_inverse(g);
    return g;
}

} // namespace

std::string HElem::to_string() const
{
    return "b^" + std::to_string(j) + " a^" + n.to_string();
}

HElem h_mul(const HElem& x, const HElem& y)
{
    return {x.n * action_power(y.j) + y.n, x.j + y.j};
}

HElem h_inv(const HElem& x)
{
    return {-(x.n * action_power(-x.j)), -x.j};
}

std::string G2Elem::to_string() const
{
    return "t^" + c.get_str() + " a^" + n.to_string() + " b^" + std::to_string(j);
}

G2Elem g2_mul(const G2Elem& x, const G2Elem& y)
{
    // x.m b^{xj} y.m b^{yj} = x.m theta^{-xj}(y.m) b^{xj+yj}
    CentralModule moved = theta_power({y.c, y.n}, -x.j);
    return {x.c + moved.c + beta(x.n, moved.n), x.n + moved.n, x.j + y.j};
}

G2Elem g2_inv(const G2Elem& x)
{
    // (m b^j)^{-1} = b^{-j} m^{-1} = theta^{j}(m^{-1}) b^{-j}
    CentralModule m_inv{-x.c - beta(x.n, -x.n), -x.n};
    CentralModule moved = theta_power(m_inv, x.j);
    return {moved.c, moved.n, -x.j};
}

HElem g2_project(const G2Elem& x)
{
    return {x.n * action_power(x.j), x.j};
}

GammaKElem::GammaKElem(unsigned level, const Integer& center, ModuleVec module, Exponent b_exp)
    : k(level), c(mod_pow2(center, level)), n(std::move(module)), j(b_exp)
{
}

GammaKElem::GammaKElem(unsigned level, const G2Elem& g) : GammaKElem(level, g.c, g.n, g.j) {}

std::string GammaKElem::to_string() const
{
    return "[k=" + std::to_string(k) + "] t^" + c.get_str() + " a^" + n.to_string() + " b^" + std::to_string(j);
}

GammaKElem gk_mul(const GammaKElem& x, const GammaKElem& y)
{
    if (x.k != y.k)
        throw LevelMismatch("Gamma_" + std::to_string(x.k) + " * Gamma_" + std::to_string(y.k));
    return GammaKElem(x.k, g2_mul(x.lift(), y.lift()));
}

GammaKElem gk_inv(const GammaKElem& x)
{
    return GammaKElem(x.k, g2_inv(x.lift()));
}

HElem gk_project(const GammaKElem& x)
{
    return g2_project(x.lift());
}

G2Elem g2_module(const ModuleVec& n)
{
    return {0, n, 0};
}

G2Elem g2_a_power(const LaurentPoly& s)
{
    G2Elem result;
    for (auto& [e, coeff] : s.terms()) {
        G2Elem b_e{0, {}, e};
        G2Elem a_conj = mul(g2_inv(b_e), G2Elem::a(), b_e);
        result = g2_mul(result, pow(a_conj, coeff, G2Elem::identity()));
    }
    return result;
}

Word word_inverse(const Word& w)
{
    Word out(w.rbegin(), w.rend());
    for (int& l : out)
        l = -l;
    return out;
}

Word word_concat(const Word& x, const Word& y)
{
    Word out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

Word word_commutator(const Word& x, const Word& y)
{
    return word_concat(word_concat(word_inverse(x), word_inverse(y)), word_concat(x, y));
}

Word word_conj_b(const Word& w, Exponent e)
{
    Word pre(static_cast<std::size_t>(std::abs(e)), e > 0 ? -2 : 2);
    Word post(static_cast<std::size_t>(std::abs(e)), e > 0 ? 2 : -2);
    return word_concat(word_concat(pre, w), post);
}

std::pair<long, long> word_exponent_sums(const Word& w)
{
    long sa = 0, sb = 0;
    for (int l : w) {
        if (l == 1 || l == -1)
            sa += l;
        else
            sb += l / 2;
    }
    return {sa, sb};
}

std::string word_to_string(const Word& w)
{
    if (w.empty())
        return "1";
    std::ostringstream out;
    for (int l : w) {
        switch (l) {
        case 1: out << 'a'; break;
        case -1: out << 'A'; break;
        case 2: out << 'b'; break;
        case -2: out << 'B'; break;
        default: out << '?'; break;
        }
    }
    return out.str();
}

std::vector<Word> gamma_relator_words(unsigned k)
{
    const Word a{1}, b{2};
    Word ab = word_conj_b(a, 1);
    Word lhs = word_conj_b(a, 2);
    Word rhs = word_concat(a, word_conj_b(Word{1, 1, 1}, 1));
    Word t = word_commutator(a, ab);
    std::vector<Word> out;
    out.push_back(word_concat(lhs, word_inverse(rhs)));
    out.push_back(word_commutator(t, a));
    out.push_back(word_commutator(t, ab));
    Word iterated = t;
    for (unsigned i = 0; i < k; ++i)
        iterated = word_commutator(iterated, b);
    out.push_back(iterated);
    return out;
}

std::vector<std::pair<long, long>> gamma_relator_exponent_sums(unsigned /*k*/)
{
    std::vector<std::pair<long, long>> out;
    for (const auto& w : gamma_relator_words(0))
        out.push_back(word_exponent_sums(w));
    return out;
}

WordCollector::MElem WordCollector::m_mul(const MElem& x, const MElem& y)
{
    // t^c a^{n1} (a^b)^{n2} * t^c' a^{m1} (a^b)^{m2}: move (a^b)^{n2} past a^{m1}.
    return {x.c + y.c - x.n2 * y.n1, x.n1 + y.n1, x.n2 + y.n2};
}

WordCollector::MElem WordCollector::m_inv(const MElem& x)
{
    // (a^{n1} (a^b)^{n2})^{-1} = (a^b)^{-n2} a^{-n1}, then collect.
    return {-x.c - x.n2 * x.n1, -x.n1, -x.n2};
}

const WordCollector::MElem& WordCollector::conjugate(Exponent e, int gen)
{
    auto key = std::make_pair(e, gen);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;
    MElem value;
    if (e == 0) {
        value = gen == 0 ? MElem{0, 1, 0} : MElem{0, 0, 1};
    } else if (e > 0) {
        // b^e g b^{-e} = b^{e-1} (b g b^{-1}) b^{-(e-1)}
        if (gen == 0) {
            MElem y = conjugate(e - 1, 1);
            MElem x_inv = m_inv(conjugate(e - 1, 0));
            value = m_mul(y, m_mul(x_inv, m_mul(x_inv, x_inv)));
        } else {
            value = conjugate(e - 1, 0);
        }
    } else {
        // b^e g b^{-e} = b^{e+1} (b^{-1} g b) b^{-(e+1)}
        if (gen == 0) {
            value = conjugate(e + 1, 1);
        } else {
            MElem x = conjugate(e + 1, 0);
            MElem y = conjugate(e + 1, 1);
            value = m_mul(x, m_mul(y, m_mul(y, y)));
        }
    }
    return memo_.emplace(key, value).first->second;
}

G2Elem WordCollector::evaluate(const Word& w)
{
    MElem state;
    Exponent j = 0;
    for (int letter : w) {
        if (letter == 2 || letter == -2) {
            j += letter / 2;
            continue;
        }
        MElem g = conjugate(j, 0);
        if (letter == -1)
            g = m_inv(g);
        state = m_mul(state, g);
    }
    return {state.c, {state.n1, state.n2}, j};
}

std::string Model::to_string() const
{
    switch (kind) {
    case ModelKind::H: return "H";
    case ModelKind::G2: return "G2";
    case ModelKind::GammaK: return "Gamma_" + std::to_string(k);
    }
    return "?";
}

G2Elem word_oracle_g2(const Word& w)
{
    WordCollector collector;
    return collector.evaluate(w);
}

HElem word_oracle_h(const Word& w)
{
    return g2_project(word_oracle_g2(w));
}

GammaKElem word_oracle_gamma(const Word& w, unsigned k)
{
    return GammaKElem(k, word_oracle_g2(w));
}

std::string HbarElem::to_string() const
{
    return "b^" + std::to_string(j) + " a^" + n.to_string();
}

HbarElem hbar_mul(const HbarElem& x, const HbarElem& y)
{
    return {frac_add(frac_act_b(x.n, y.j), y.n), x.j + y.j};
}

HbarElem hbar_inv(const HbarElem& x)
{
    return {frac_neg(frac_act_b(x.n, -x.j)), -x.j};
}

bool hbar_eq(const HbarElem& x, const HbarElem& y)
{
    return x.j == y.j && frac_eq(x.n, y.n);
}

} // namespace tnil
