#ifndef QSD_NUMERIC_HPP
#define QSD_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qsd {

// All arithmetic in this project is exact. Int/Rat are the only number
// types that ever touch a mathematical value; no floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int igcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int ilcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Floor of the integer square root; n must be >= 0.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

/// Exact k-th root if n is a perfect k-th power, otherwise nullopt.
std::optional<Int> exact_root(const Int& n, unsigned long k);

bool is_prime(const Int& n);
bool is_prime_ul(unsigned long n);

/// p-part n_p of n: the largest power p^t dividing n.  n >= 1, p prime.
Int p_part(const Int& n, unsigned long p);

/// Exponent t with p^t || n.
unsigned long p_valuation(const Int& n, unsigned long p);

/// Prime factorization, sorted by prime.  Uses trial division plus
/// Pollard rho for the occasional large cofactor.
std::vector<std::pair<Int, unsigned>> factorize(const Int& n);

/// All positive divisors of n, sorted ascending.  n >= 1.
std::vector<Int> divisors(const Int& n);

// A prime power q = p^f.  Everything in the engine is indexed by these.
struct PrimePower {
    unsigned long p = 0;
    unsigned f = 0;
    unsigned long q = 0;

    Int value() const { return Int(static_cast<long>(q)); }
    bool operator==(const PrimePower&) const = default;
};

/// Recognize q as p^f; nullopt if q is not a prime power (or q < 2).
std::optional<PrimePower> as_prime_power(unsigned long q);

// Constraint shapes used by the case catalog: all prime powers, a fixed
// characteristic, odd exponent, and/or a lower bound on q.
struct PowerConstraint {
    std::optional<unsigned long> p;
    bool odd_exponent = false;
    unsigned long min_q = 2;
};

/// Strictly increasing prime powers q <= q_max satisfying the constraint.
std::vector<PrimePower> prime_powers(const PowerConstraint& c, unsigned long q_max);

}  // namespace qsd

#endif
