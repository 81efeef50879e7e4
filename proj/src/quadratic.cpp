#include "tnil/quadratic.hpp"

#include "tnil/errors.hpp"

#include <sstream>

namespace tnil {

std::string ModuleVec::to_string() const
{
    return "(" + x1.get_str() + "," + x2.get_str() + ")";
}

Integer wedge(const ModuleVec& u, const ModuleVec& v)
{
    return u.x1 * v.x2 - u.x2 * v.x1;
}

std::string IntMatrix2::to_string() const
{
    return "[[" + a.get_str() + "," + b.get_str() + "],[" + c.get_str() + "," + d.get_str() + "]]";
}

IntMatrix2 power(const IntMatrix2& m, unsigned long e)
{
    IntMatrix2 result = IntMatrix2::identity();
    IntMatrix2 base = m;
    while (e != 0) {
        if (e & 1UL)
            result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

const IntMatrix2& action_matrix()
{
    static const IntMatrix2 u{0, 1, 1, 3};
    return u;
}

const IntMatrix2& action_matrix_inverse()
{
    static const IntMatrix2 u_inv{-3, 1, 1, 0};
    return u_inv;
}

IntMatrix2 action_power(Exponent e)
{
    if (e >= 0)
        return power(action_matrix(), static_cast<unsigned long>(e));
    return power(action_matrix_inverse(), static_cast<unsigned long>(-e));
}

IntMatrix2 evaluate_at_U(const LaurentPoly& s)
{
    IntMatrix2 sum;
    if (s.is_zero())
        return sum;
    Exponent e = s.min_exponent();
    IntMatrix2 u_e = action_power(e);
    for (auto& [exp, c] : s.terms()) {
        while (e < exp) {
            u_e = u_e * action_matrix();
            ++e;
        }
        sum = sum + c * u_e;
    }
    return sum;
}

Integer norm(const LaurentPoly& s)
{
    return evaluate_at_U(s).det();
}

TwoAdicSplit two_adic_split(const Integer& n)
{
    if (n == 0)
        throw PreconditionError("two_adic_split: zero has no 2-adic decomposition");
    TwoAdicSplit out;
    out.p = v2(n);
    mpz_tdiv_q_2exp(out.v.get_mpz_t(), n.get_mpz_t(), out.p);
    return out;
}

NormData norm_data(const LaurentPoly& s)
{
    NormData d;
    d.s = s;
    d.norm = norm(s);
    if (d.norm == 0)
        throw PreconditionError("norm_data: |" + s.to_string() + "| = 0");
    auto split = two_adic_split(d.norm);
    d.p = split.p;
    d.v = split.v;
    return d;
}

int predicted_parity(const LaurentPoly& s)
{
    if (!in_S(s))
        throw PreconditionError("predicted_parity: " + s.to_string() + " is not in S");
    LaurentPoly shifted = s.shifted(-s.min_exponent());
    Integer sum = 1;
    const auto& terms = shifted.terms();
    for (auto i = terms.begin(); i != terms.end(); ++i) {
        for (auto j = std::next(i); j != terms.end(); ++j) {
            if ((j->first - i->first) % 3 != 0)
                sum += i->second * j->second;
        }
    }
    return is_odd(sum) ? 1 : 0;
}

ParityReport verify_parity_range(int max_span, int max_abs_coeff)
{
    ParityReport report;
    report.max_span = max_span;
    report.max_abs_coeff = max_abs_coeff;
    for (const auto& s : enumerate_S(max_span, max_abs_coeff)) {
        Integer n = norm(s);
        int predicted = predicted_parity(s);
        ++report.checked;
        if (n == 0)
            ++report.zero_norms;
        if (!is_odd(n))
            ++report.even_norms;
        if ((is_odd(n) ? 1 : 0) != predicted)
            report.counterexamples.push_back({s, n, predicted});
    }
    return report;
}

namespace {

struct ExtGcd {
    Integer g, s, t;
};

ExtGcd ext_gcd(const Integer& a, const Integer& b)
{
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace

Lattice::Lattice(const std::vector<ModuleVec>& generators)
{
    ModuleVec pivot;
    Integer e = 0;
    for (const auto& v : generators) {
        if (v.x1 == 0) {
            e = gcd(e, v.x2);
            continue;
        }
        if (pivot.x1 == 0) {
            // Old pivot has nothing in column 1; it joins the column-2 part.
            e = gcd(e, pivot.x2);
            pivot = v;
            continue;
        }
        auto [g, s, t] = ext_gcd(pivot.x1, v.x1);
        Integer pa = pivot.x1 / g;
        Integer va = v.x1 / g;
        ModuleVec combined = s * pivot + t * v;
        ModuleVec leftover = va * pivot - pa * v;
        pivot = combined;
        e = gcd(e, leftover.x2);
    }
    if (pivot.x1 < 0)
        pivot = -pivot;
    if (pivot.x1 == 0) {
        e = gcd(e, pivot.x2);
        if (e != 0)
            basis_.push_back({0, e});
        return;
    }
    if (e != 0)
        pivot.x2 = mod(pivot.x2, e);
    basis_.push_back(pivot);
    if (e != 0)
        basis_.push_back({0, e});
}

bool Lattice::contains(const ModuleVec& v) const
{
    ModuleVec rest = v;
    std::size_t i = 0;
    if (i < basis_.size() && basis_[i].x1 != 0) {
        if (!mpz_divisible_p(rest.x1.get_mpz_t(), basis_[i].x1.get_mpz_t()))
            return false;
        Integer q = rest.x1 / basis_[i].x1;
        rest = rest - q * basis_[i];
        ++i;
    }
    if (rest.x1 != 0)
        return false;
    if (i < basis_.size())
        return mpz_divisible_p(rest.x2.get_mpz_t(), basis_[i].x2.get_mpz_t()) != 0;
    return rest.x2 == 0;
}

bool Lattice::contains(const Lattice& other) const
{
    for (const auto& v : other.basis_)
        if (!contains(v))
            return false;
    return true;
}

std::optional<Integer> Lattice::index() const
{
    if (basis_.size() < 2)
        return std::nullopt;
    return abs(basis_[0].x1 * basis_[1].x2);
}

Integer Lattice::content() const
{
    Integer g = 0;
    for (const auto& v : basis_)
        g = gcd(gcd(g, v.x1), v.x2);
    return g;
}

Lattice Lattice::times(const IntMatrix2& m) const
{
    std::vector<ModuleVec> gens;
    for (const auto& v : basis_)
        gens.push_back(v * m);
    return Lattice(gens);
}

Lattice Lattice::operator+(const Lattice& o) const
{
    std::vector<ModuleVec> gens = basis_;
    gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
    return Lattice(gens);
}

std::string Lattice::to_string() const
{
    std::ostringstream out;
    out << '<';
    for (std::size_t i = 0; i < basis_.size(); ++i)
        out << (i ? "," : "") << basis_[i].to_string();
    out << '>';
    return out.str();
}

Lattice image(const IntMatrix2& m)
{
    return Lattice({m.row(0), m.row(1)});
}

std::optional<int> intersect_chain_probe(const ModuleVec& v, const std::function<Lattice(int)>& chain, int bound)
{
    for (int i = 0; i <= bound; ++i)
        if (!chain(i).contains(v))
            return i;
    return std::nullopt;
}

} // namespace tnil
