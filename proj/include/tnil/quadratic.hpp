#pragma once

// The module N = Z^2 spanned by a and a^b, the action of b on it, the norm
// |s| = det s(U), and small integer-lattice utilities.

#include "tnil/integer.hpp"
#include "tnil/laurent.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tnil {

/// Row vector (x1, x2) in the basis {a, a^b}; b acts on the right by U.
struct ModuleVec {
    Integer x1 = 0;
    Integer x2 = 0;

    bool is_zero() const { return x1 == 0 && x2 == 0; }
    ModuleVec operator-() const { return {-x1, -x2}; }
    ModuleVec& operator+=(const ModuleVec& o)
    {
        x1 += o.x1;
        x2 += o.x2;
        return *this;
    }
    friend ModuleVec operator+(ModuleVec a, const ModuleVec& b) { return a += b; }
    friend ModuleVec operator-(ModuleVec a, const ModuleVec& b) { return a += -b; }
    friend ModuleVec operator*(const Integer& k, const ModuleVec& v) { return {k * v.x1, k * v.x2}; }
    friend bool operator==(const ModuleVec&, const ModuleVec&) = default;

    std::string to_string() const;
};

/// det of the 2x2 matrix with rows u, v; this is the pairing N x N -> Lambda^2 N.
Integer wedge(const ModuleVec& u, const ModuleVec& v);

/// Row-major 2x2 integer matrix [[a, b], [c, d]].
struct IntMatrix2 {
    Integer a = 0, b = 0, c = 0, d = 0;

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }
    static IntMatrix2 scalar(const Integer& k) { return {k, 0, 0, k}; }

    Integer det() const { return a * d - b * c; }
    IntMatrix2 adjugate() const { return {d, -b, -c, a}; }
    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    ModuleVec row(int i) const { return i == 0 ? ModuleVec{a, b} : ModuleVec{c, d}; }

    friend IntMatrix2 operator+(const IntMatrix2& x, const IntMatrix2& y)
    {
        return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
    }
    friend IntMatrix2 operator-(const IntMatrix2& x, const IntMatrix2& y)
    {
        return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
    }
    friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend IntMatrix2 operator*(const Integer& k, const IntMatrix2& m) { return {k * m.a, k * m.b, k * m.c, k * m.d}; }
    friend ModuleVec operator*(const ModuleVec& v, const IntMatrix2& m)
    {
        return {v.x1 * m.a + v.x2 * m.c, v.x1 * m.b + v.x2 * m.d};
    }
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

    std::string to_string() const;
};

/// m^e for e >= 0.
IntMatrix2 power(const IntMatrix2& m, unsigned long e);

/// U = [[0, 1], [1, 3]]: a -> a^b, a^b -> a^{b^2} = a a^{3b}.
const IntMatrix2& action_matrix();

/// U^{-1} = U - 3I = [[-3, 1], [1, 0]].
const IntMatrix2& action_matrix_inverse();

/// U^e for any integer e.
IntMatrix2 action_power(Exponent e);

/// s(U) = sum n_i U^i.
IntMatrix2 evaluate_at_U(const LaurentPoly& s);

/// |s| = det s(U), sign kept.
Integer norm(const LaurentPoly& s);

struct TwoAdicSplit {
    unsigned long p = 0;
    Integer v = 1; // odd
};

/// n = 2^p * v with v odd. Throws PreconditionError on zero.
TwoAdicSplit two_adic_split(const Integer& n);

struct NormData {
    LaurentPoly s;
    Integer norm;
    unsigned long p = 0;
    Integer v = 1;
};

/// Throws PreconditionError if the norm vanishes (never happens on S).
NormData norm_data(const LaurentPoly& s);

/// Value of 1 + sum_{j>i, 3 does not divide j-i} n_i n_j mod 2, which predicts
/// |s| mod 2. Requires in_S(s).
///
/// Support is first shifted to start at exponent 0; |b^m s| = (-1)^m |s|, so the
/// parity of the norm is unchanged by the shift.
int predicted_parity(const LaurentPoly& s);

struct ParityCounterexample {
    LaurentPoly s;
    Integer norm;
    int predicted = 0;
};

struct ParityReport {
    int max_span = 0;
    int max_abs_coeff = 0;
    std::size_t checked = 0;
    std::size_t even_norms = 0;
    std::size_t zero_norms = 0;
    std::vector<ParityCounterexample> counterexamples;
};

/// Exhaustively compares predicted_parity with the determinant over enumerate_S.
ParityReport verify_parity_range(int max_span, int max_abs_coeff);

/// Subgroup of Z^2 held in Hermite normal form.
///
/// The basis is one of: empty; {(0, e)} with e > 0; {(g, h)} with g > 0;
/// {(g, h), (0, e)} with g, e > 0 and 0 <= h < e.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(const std::vector<ModuleVec>& generators);

    static Lattice whole() { return Lattice({{1, 0}, {0, 1}}); }

    const std::vector<ModuleVec>& basis() const noexcept { return basis_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    bool is_zero() const { return basis_.empty(); }

    bool contains(const ModuleVec& v) const;
    bool contains(const Lattice& other) const;

    /// [Z^2 : L]; nullopt when the rank is below 2 (infinite index).
    std::optional<Integer> index() const;

    /// gcd of all coordinates of all elements (0 for the zero lattice).
    Integer content() const;

    /// L * m = { v m : v in L }.
    Lattice times(const IntMatrix2& m) const;

    Lattice operator+(const Lattice& o) const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

    std::string to_string() const;

private:
    std::vector<ModuleVec> basis_;
};

/// Lattice spanned by the rows of m.
Lattice image(const IntMatrix2& m);

/// Least i in [0, bound] with v not in chain(i); nullopt if v lies in every
/// chain(i) up to the bound.
std::optional<int> intersect_chain_probe(const ModuleVec& v, const std::function<Lattice(int)>& chain, int bound);

} // namespace tnil
