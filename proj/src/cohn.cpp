#include "tnil/cohn.hpp"

#include "tnil/errors.hpp"

#include <random>
#include <sstream>

namespace tnil {

using IntMat = std::vector<std::vector<Integer>>;

unsigned delta_nilpotency_degree(const NilpotentModuleSpec& m)
{
    // Delta^d acts as (-2)^d; find the least d killing Z/2^m.
    const Integer modulus = m.modulus();
    Integer power = 1;
    unsigned d = 0;
    while (mod(power, modulus) != 0) {
        power *= -2;
        ++d;
    }
    return d;
}

RingMatrix::RingMatrix(std::vector<std::vector<LaurentPoly>> rows) : rows_(std::move(rows))
{
    for (const auto& r : rows_)
        if (r.size() != rows_.size())
            throw PreconditionError("RingMatrix must be square");
}

RingMatrix RingMatrix::identity(std::size_t n)
{
    std::vector<std::vector<LaurentPoly>> rows(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        rows[i][i] = LaurentPoly(1);
    return RingMatrix(std::move(rows));
}

IntMat RingMatrix::augmentation_matrix() const
{
    IntMat out(size(), std::vector<Integer>(size()));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            out[i][j] = augmentation(rows_[i][j]);
    return out;
}

IntMat RingMatrix::action_on(const NilpotentModuleSpec& m) const
{
    const Integer modulus = m.modulus();
    IntMat out(size(), std::vector<Integer>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            Integer v = 0;
            for (auto& [e, c] : rows_[i][j].terms())
                v += (e % 2 == 0) ? c : Integer(-c);
            out[i][j] = mod(v, modulus);
        }
    }
    return out;
}

std::string RingMatrix::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < size(); ++i) {
        out << (i ? "," : "") << '[';
        for (std::size_t j = 0; j < size(); ++j)
            out << (j ? "," : "") << '"' << rows_[i][j].to_string() << '"';
        out << ']';
    }
    out << ']';
    return out.str();
}

Integer integer_determinant(IntMat m)
{
    // Bareiss elimination.
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && m[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(m[k], m[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::optional<IntMat> inverse_mod_pow2(const IntMat& m, unsigned k)
{
    const std::size_t n = m.size();
    const Integer modulus = pow2(k);
    IntMat a = m;
    IntMat inv(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = k == 0 ? Integer(0) : Integer(1);
    if (k == 0)
        return inv;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && !is_odd(a[pivot][col]))
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Integer p_inv = tnil::inverse_mod_pow2(a[col][col], k);
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] = mod(a[col][j] * p_inv, modulus);
            inv[col][j] = mod(inv[col][j] * p_inv, modulus);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0)
                continue;
            Integer f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = mod(a[i][j] - f * a[col][j], modulus);
                inv[i][j] = mod(inv[i][j] - f * inv[col][j], modulus);
            }
        }
    }
    return inv;
}

namespace {

std::vector<Integer> mat_vec(const IntMat& m, const std::vector<Integer>& v, const Integer& modulus)
{
    std::vector<Integer> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += m[i][j] * v[j];
        out[i] = mod(out[i], modulus);
    }
    return out;
}

bool is_identity_mod(const IntMat& x, const IntMat& y, const Integer& modulus)
{
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Integer s = 0;
            for (std::size_t l = 0; l < n; ++l)
                s += x[i][l] * y[l][j];
            if (mod(s - (i == j ? 1 : 0), modulus) != 0)
                return false;
        }
    }
    return true;
}

} // namespace

LiftResult lift_unique(const RingMatrix& t, const std::vector<Integer>& alpha, const NilpotentModuleSpec& m)
{
    if (alpha.size() != t.size())
        throw PreconditionError("lift_unique: alpha has the wrong length");
    Integer aug_det = integer_determinant(t.augmentation_matrix());
    if (abs(aug_det) != 1)
        throw PreconditionError("lift_unique: augmentation matrix has determinant " + aug_det.get_str());

    const Integer modulus = m.modulus();
    const unsigned k = m.modulus_exponent;
    IntMat action = t.action_on(m);
    LiftResult out;
    out.action_determinant = integer_determinant(action);
    if (k > 0 && !is_odd(out.action_determinant))
        throw TheoremViolation("action matrix has even determinant " + out.action_determinant.get_str());
    auto inverse = inverse_mod_pow2(action, k);
    if (!inverse)
        throw TheoremViolation("action matrix is not invertible mod 2^" + std::to_string(k));

    std::vector<Integer> a(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        a[i] = mod(alpha[i], modulus);
    out.beta = mat_vec(*inverse, a, modulus);
    out.existence_verified = mat_vec(action, out.beta, modulus) == a;
    out.uniqueness_verified = is_identity_mod(action, *inverse, modulus) && is_identity_mod(*inverse, action, modulus);
    return out;
}

bool direct_limit_coherent(const RingMatrix& t, const std::vector<Integer>& alpha, unsigned m, unsigned m_prime)
{
    const Integer shift = pow2(m_prime - m);
    const Integer big = pow2(m_prime);
    auto low = lift_unique(t, alpha, {m});
    std::vector<Integer> pushed_alpha, pushed_beta;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        pushed_alpha.push_back(mod(mod(alpha[i], pow2(m)) * shift, big));
        pushed_beta.push_back(mod(low.beta[i] * shift, big));
    }
    auto high = lift_unique(t, pushed_alpha, {m_prime});
    return high.beta == pushed_beta;
}

namespace {

class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}
    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here and
    // keeps the stream identical across standard libraries.
    long between(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

private:
    std::mt19937_64 engine_;
};

RingMatrix random_augmentation_invertible(TrialRng& rng, std::size_t n, int max_degree)
{
    IntMat a(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        a[i][i] = 1;
    for (std::size_t step = 0; step < 3 * n; ++step) {
        std::size_t i = static_cast<std::size_t>(rng.between(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(rng.between(0, static_cast<long>(n) - 1));
        if (i == j) {
            if (rng.between(0, 1) == 1)
                for (auto& x : a[i])
                    x = -x;
            continue;
        }
        long f = rng.between(-2, 2);
        for (std::size_t c = 0; c < n; ++c)
            a[i][c] += f * a[j][c];
    }
    std::vector<std::vector<LaurentPoly>> rows(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly delta;
            for (int e = -max_degree; e <= max_degree; ++e)
                delta += LaurentPoly::monomial(e, rng.between(-2, 2));
            delta -= LaurentPoly(augmentation(delta));
            rows[i][j] = delta + LaurentPoly(a[i][j]);
        }
    }
    return RingMatrix(std::move(rows));
}

} // namespace

CohnSuiteReport cohn_local_suite(const NilpotentModuleSpec& m, std::size_t trials, std::size_t max_size,
                                 int max_degree, std::uint64_t seed)
{
    CohnSuiteReport report;
    report.modulus_exponent = m.modulus_exponent;
    report.trials = trials;
    report.max_size = max_size;
    report.max_degree = max_degree;
    report.seed = seed;
    TrialRng rng(seed);
    const Integer modulus = m.modulus();
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.between(1, static_cast<long>(max_size)));
        RingMatrix t = random_augmentation_invertible(rng, n, max_degree);
        std::vector<Integer> alpha;
        for (std::size_t i = 0; i < n; ++i)
            alpha.push_back(mod(Integer(rng.between(0, 1L << 30)), modulus));
        try {
            auto lift = lift_unique(t, alpha, m);
            if (!lift.existence_verified || !lift.uniqueness_verified) {
                report.failures.push_back({trial, t.to_string(), "lift not verified"});
                continue;
            }
            ++report.verified;
            ++report.coherence_checks;
            if (direct_limit_coherent(t, alpha, m.modulus_exponent, m.modulus_exponent + 1))
                ++report.coherence_passed;
            else
                report.failures.push_back({trial, t.to_string(), "direct-limit coherence failed"});
        } catch (const std::exception& e) {
            report.failures.push_back({trial, t.to_string(), e.what()});
        }
    }
    return report;
}

bool LocalityReport::passed() const
{
    if (!emitted)
        return false;
    for (const auto& e : evidence)
        if (!e.passed())
            return false;
    return true;
}

LocalityReport locality_report(const TowerPrefix& tower, std::size_t trials, std::uint64_t seed)
{
    LocalityReport rep;
    if (tower.edges.empty()) {
        rep.reason = "empty tower: no truncation levels beyond the base, nothing to conclude about H";
        return rep;
    }
    for (unsigned m = 1; m <= tower.levels.back(); ++m)
        rep.evidence.push_back(cohn_local_suite({m}, trials, 3, 3, seed + m));
    rep.emitted = true;
    rep.statement = "Z/2^m is Cohn local for every level m in the prefix (verified); C_{2^inf} is their direct "
                    "limit; Hbar is local (paper-assumed); hence the colimit group is local and is L(H)";
    return rep;
}

} // namespace tnil
