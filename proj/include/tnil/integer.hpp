#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tnil {

using Integer = mpz_class;

inline std::string to_string(const Integer& x) { return x.get_str(); }

/// Non-negative representative of x modulo m (m > 0).
inline Integer mod(const Integer& x, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Integer pow2(unsigned long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

/// x mod 2^k, non-negative.
inline Integer mod_pow2(const Integer& x, unsigned long k)
{
    Integer r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
    return r;
}

/// 2-adic valuation; x must be nonzero.
inline unsigned long v2(const Integer& x) { return mpz_scan1(x.get_mpz_t(), 0); }

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Inverse of an odd x modulo 2^k (k >= 0). Returns 0 when k == 0.
inline Integer inverse_mod_pow2(const Integer& x, unsigned long k)
{
    if (k == 0)
        return 0;
    Integer m = pow2(k);
    Integer r;
    mpz_invert(r.get_mpz_t(), mod(x, m).get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool is_odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

} // namespace tnil
