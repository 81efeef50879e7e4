#pragma once

// Test-only reference computations, written independently of the library's
// evaluation paths.

#include "tnil/integer.hpp"
#include "tnil/laurent.hpp"

#include <map>
#include <random>
#include <utility>
#include <vector>

namespace tnil::oracle {

/// |s| as the field norm from Q(x), x^2 = 3x + 1: reduce s to alpha + beta x
/// (using x^{-1} = x - 3), then N(alpha + beta x) = alpha^2 + 3 alpha beta - beta^2.
inline Integer field_norm(const LaurentPoly& s)
{
    // x^e as (p, q) meaning p + q x
    auto power = [](Exponent e) {
        Integer p = 1, q = 0;
        for (; e > 0; --e) { // (p + q x) x = p x + q (3x + 1)
            Integer np = q, nq = p + 3 * q;
            p = np;
            q = nq;
        }
        for (; e < 0; ++e) { // (p + q x)(x - 3) = p x - 3p + q(3x + 1) - 3 q x
            Integer np = q - 3 * p, nq = p;
            p = np;
            q = nq;
        }
        return std::make_pair(p, q);
    };
    Integer alpha = 0, beta = 0;
    for (auto& [e, c] : s.terms()) {
        auto [p, q] = power(e);
        alpha += c * p;
        beta += c * q;
    }
    return alpha * alpha + 3 * alpha * beta - beta * beta;
}

/// Number of tuples in [-c, c]^{len} with sum 1, by dynamic programming.
inline Integer count_sum_one(int len, int c)
{
    std::map<long, Integer> ways{{0, 1}};
    for (int i = 0; i < len; ++i) {
        std::map<long, Integer> next;
        for (auto& [sum, w] : ways)
            for (int v = -c; v <= c; ++v)
                next[sum + v] += w;
        ways = std::move(next);
    }
    return ways.count(1) ? ways[1] : Integer(0);
}

/// Schoolbook product on dense coefficient arrays.
inline LaurentPoly dense_product(const LaurentPoly& a, const LaurentPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    Exponent lo = a.min_exponent() + b.min_exponent();
    std::vector<Integer> out(static_cast<std::size_t>(a.span() + b.span() + 1), 0);
    for (Exponent i = a.min_exponent(); i <= a.max_exponent(); ++i)
        for (Exponent j = b.min_exponent(); j <= b.max_exponent(); ++j)
            out[static_cast<std::size_t>(i + j - lo)] += a.coeff(i) * b.coeff(j);
    LaurentPoly::Terms terms;
    for (std::size_t k = 0; k < out.size(); ++k)
        if (out[k] != 0)
            terms.emplace(lo + static_cast<Exponent>(k), out[k]);
    return LaurentPoly(terms);
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int lo, int hi, int max_coeff)
{
    LaurentPoly::Terms terms;
    for (int e = lo; e <= hi; ++e) {
        long c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * max_coeff + 1)) - max_coeff;
        if (c != 0)
            terms.emplace(e, c);
    }
    return LaurentPoly(terms);
}

/// Random element of S: random poly with its constant term adjusted.
inline LaurentPoly random_s(std::mt19937_64& rng, int lo, int hi, int max_coeff)
{
    LaurentPoly p = random_poly(rng, lo, hi, max_coeff);
    return p - LaurentPoly(augmentation(p) - 1);
}

inline long draw(std::mt19937_64& rng, long lo, long hi)
{
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

} // namespace tnil::oracle
