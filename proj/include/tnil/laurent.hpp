#pragma once

// Integer Laurent polynomials in one variable b: the integral group ring of
// the infinite cyclic group <b>, its augmentation, and the set S = 1 + Delta.

#include "tnil/integer.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tnil {

using Exponent = std::int64_t;

/// Sparse Laurent polynomial sum c_e b^e with arbitrary-precision coefficients.
/// No stored coefficient is ever zero.
class LaurentPoly {
public:
    using Terms = std::map<Exponent, Integer>;

    LaurentPoly() = default;
    LaurentPoly(const Integer& constant); // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(Terms terms);

    static LaurentPoly monomial(Exponent e, const Integer& coeff = 1);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coeff(Exponent e) const;

    /// Lowest and highest exponent; undefined on zero.
    Exponent min_exponent() const { return terms_.begin()->first; }
    Exponent max_exponent() const { return terms_.rbegin()->first; }
    Exponent span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }

    /// Multiply by b^m.
    LaurentPoly shifted(Exponent m) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add_term(Exponent e, const Integer& c);
    Terms terms_;
};

/// Parse a Laurent literal. Grammar (whitespace allowed between tokens):
///
///   poly     = [sign] term { sign term }
///   term     = integer [ ["*"] "b" [power] ] | "b" [power]
///   power    = "^" ( [sign] digits | "(" [sign] digits ")" )
///   sign     = "+" | "-"
///
/// Repeated exponents are summed. Throws ParseError with the byte offset.
LaurentPoly parse_laurent(std::string_view text);

/// Sum of coefficients (image under b -> 1).
Integer augmentation(const LaurentPoly& s);

struct SMembership {
    LaurentPoly poly;
    Integer augmentation;
    bool member() const { return augmentation == 1; }
};

SMembership s_membership(const LaurentPoly& s);

/// True iff augmentation(s) == 1.
bool in_S(const LaurentPoly& s);

/// All elements of S with support in exponents [0, max_span] and coefficients
/// in [-max_abs_coeff, max_abs_coeff].
///
/// Order: ascending span (max exponent - min exponent), then lexicographic on
/// the coefficient tuple (c_0, ..., c_max_span) compared entrywise as integers.
/// Deterministic and duplicate-free.
std::vector<LaurentPoly> enumerate_S(int max_span, int max_abs_coeff);

} // namespace tnil
