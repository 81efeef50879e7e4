#pragma once

// Cohn locality of the center truncations Z/2^m, on which b acts by -1 and
// N_S trivially.

#include "tnil/integer.hpp"
#include "tnil/laurent.hpp"
#include "tnil/tower.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tnil {

/// The module Z/2^m with b -> -1 and N_S acting trivially; Delta is generated
/// by b - 1, which acts as -2.
struct NilpotentModuleSpec {
    unsigned modulus_exponent = 0;
    Integer modulus() const { return pow2(modulus_exponent); }
};

/// Least d with M Delta^d = 0.
unsigned delta_nilpotency_degree(const NilpotentModuleSpec& m);

/// Square matrix over Z[<b>].
class RingMatrix {
public:
    RingMatrix() = default;
    explicit RingMatrix(std::vector<std::vector<LaurentPoly>> rows);

    static RingMatrix identity(std::size_t n);

    std::size_t size() const { return rows_.size(); }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    /// Entrywise augmentation.
    std::vector<std::vector<Integer>> augmentation_matrix() const;
    /// Entrywise b -> -1, reduced mod 2^m.
    std::vector<std::vector<Integer>> action_on(const NilpotentModuleSpec& m) const;

    std::string to_string() const;

private:
    std::vector<std::vector<LaurentPoly>> rows_;
};

/// Exact integer determinant (fraction-free elimination).
Integer integer_determinant(std::vector<std::vector<Integer>> m);

/// Inverse modulo 2^k of an integer matrix with odd determinant; nullopt otherwise.
std::optional<std::vector<std::vector<Integer>>> inverse_mod_pow2(const std::vector<std::vector<Integer>>& m,
                                                                   unsigned k);

struct LiftResult {
    std::vector<Integer> beta;
    Integer action_determinant = 0;  // det of the action matrix mod 2^m, before reduction
    bool existence_verified = false;   // T beta == alpha
    bool uniqueness_verified = false;  // T has a two-sided inverse, so ker T = 0
};

/// beta with beta o t = alpha, i.e. T beta = alpha where T is the action of t
/// on M^n. Throws PreconditionError unless the augmentation matrix has
/// determinant +-1, TheoremViolation if the action matrix is not invertible.
LiftResult lift_unique(const RingMatrix& t, const std::vector<Integer>& alpha, const NilpotentModuleSpec& m);

struct CohnFailure {
    std::size_t trial = 0;
    std::string matrix;
    std::string reason;
};

struct CohnSuiteReport {
    unsigned modulus_exponent = 0;
    std::size_t trials = 0;
    std::size_t max_size = 0;
    int max_degree = 0;
    std::uint64_t seed = 0;
    std::size_t verified = 0;
    std::size_t coherence_checks = 0;
    std::size_t coherence_passed = 0;
    std::vector<CohnFailure> failures;
    bool passed() const { return failures.empty() && verified == trials && coherence_passed == coherence_checks; }
};

/// Random augmentation-invertible matrices of size 1..max_size with entry
/// degrees in [-max_degree, max_degree]; every lift checked for existence and
/// uniqueness. Each trial also lifts at modulus 2^{m+1} and checks that the
/// lift of the pushed data is the pushed lift (push = multiplication by 2).
CohnSuiteReport cohn_local_suite(const NilpotentModuleSpec& m, std::size_t trials, std::size_t max_size,
                                 int max_degree, std::uint64_t seed);

/// Lift at 2^m, push to 2^{m'} (m' >= m), compare with the lift at 2^{m'} of
/// the pushed alpha.
bool direct_limit_coherent(const RingMatrix& t, const std::vector<Integer>& alpha, unsigned m, unsigned m_prime);

struct LocalityReport {
    bool emitted = false;
    std::vector<CohnSuiteReport> evidence; // one per truncation level present
    std::string hbar_locality = "paper-assumed";
    std::string statement;
    std::string reason;
    bool passed() const;
};

LocalityReport locality_report(const TowerPrefix& tower, std::size_t trials = 50, std::uint64_t seed = 1);

} // namespace tnil
