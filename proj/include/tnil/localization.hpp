#pragma once

// N_S as fractions, the quasi-cyclic group C_{2^inf} as dyadic rationals mod 1,
// and its tower-indexed representation.

#include "tnil/integer.hpp"
#include "tnil/laurent.hpp"
#include "tnil/quadratic.hpp"

#include <cstddef>
#include <string>

namespace tnil {

struct TowerPrefix;

/// Element num / den of N_S. Never reduced; compare with frac_eq.
struct Fraction {
    ModuleVec num;
    LaurentPoly den = LaurentPoly(1);

    Fraction() = default;
    /// Throws PreconditionError unless den is in S.
    Fraction(ModuleVec num, LaurentPoly den);

    std::string to_string() const;
};

/// num_f * den_g(U) == num_g * den_f(U). Sound because every s-map is injective.
bool frac_eq(const Fraction& f, const Fraction& g);
Fraction frac_add(const Fraction& f, const Fraction& g);
Fraction frac_neg(const Fraction& f);
/// f^b: numerator times U.
Fraction frac_act_b(const Fraction& f);
/// f^{b^e} for any integer e.
Fraction frac_act_b(const Fraction& f, Exponent e);
/// Numerator times s(U); the denominator is unchanged.
Fraction frac_scale(const Fraction& f, const LaurentPoly& s);

/// num / 2^k mod 1 in canonical form: 0 <= num < 2^k with num odd, or 0/2^0.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(const Integer& num, unsigned long k);

    static Dyadic canonicalize(const Integer& num, unsigned long k) { return Dyadic(num, k); }

    const Integer& num() const noexcept { return num_; }
    unsigned long k() const noexcept { return k_; }
    bool is_zero() const { return num_ == 0; }

    Dyadic operator-() const { return Dyadic(-num_, k_); }
    friend Dyadic operator+(const Dyadic& x, const Dyadic& y);
    friend Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }
    /// Integer multiple.
    friend Dyadic operator*(const Integer& m, const Dyadic& x) { return Dyadic(m * x.num_, x.k_); }
    friend bool operator==(const Dyadic&, const Dyadic&) = default;

    Dyadic doubled() const { return Dyadic(2 * num_, k_); }
    /// num / 2^{k+1}. Doubling is 2-to-1 with kernel {0, 1/2}; this is the
    /// preimage whose numerator is the input numerator.
    Dyadic halved() const { return Dyadic(num_, k_ + 1); }

    std::string to_string() const;

private:
    Integer num_ = 0;
    unsigned long k_ = 0;
};

/// Element of Z/2^{k(stage)} at a stage of a tower.
struct CenterColim {
    std::size_t stage = 0;
    Integer residue = 0;
};

/// Transition t -> t^{|s|} from stage to stage+1. s must be the tower edge
/// leaving c.stage.
CenterColim center_push(const CenterColim& c, const LaurentPoly& s, const TowerPrefix& tower);

/// Push repeatedly up to target_stage.
CenterColim center_push_to(const CenterColim& c, std::size_t target_stage, const TowerPrefix& tower);

/// r mod 2^k  ->  r * u^{-1} / 2^k mod 1, u the product of odd parts of the
/// edge norms from stage 0 to c.stage.
Dyadic center_to_dyadic(const CenterColim& c, const TowerPrefix& tower);

/// Equality in the colimit (push both to the later stage).
bool center_eq(const CenterColim& x, const CenterColim& y, const TowerPrefix& tower);

} // namespace tnil
