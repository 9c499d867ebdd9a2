#include "qsd/numeric.hpp"

#include <algorithm>

namespace qsd {

std::optional<Int> exact_root(const Int& n, unsigned long k) {
    if (n < 0) return std::nullopt;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // 40 Miller-Rabin rounds on top of GMP's BPSW; the values in scope
    // are far below any known pseudoprime for this configuration.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime_ul(unsigned long n) { return is_prime(Int(static_cast<long>(n))); }

Int p_part(const Int& n, unsigned long p) {
    if (n <= 0) throw std::domain_error("p_part: n must be >= 1");
    if (p < 2 || !is_prime_ul(p)) throw std::domain_error("p_part: p must be prime");
    Int rest = n, part = 1;
    Int pz(static_cast<long>(p));
    while (mpz_divisible_p(rest.get_mpz_t(), pz.get_mpz_t())) {
        rest /= pz;
        part *= pz;
    }
    return part;
}

unsigned long p_valuation(const Int& n, unsigned long p) {
    if (n == 0) throw std::domain_error("p_valuation: n must be nonzero");
    Int rest = abs(n);
    Int pz(static_cast<long>(p));
    unsigned long t = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), pz.get_mpz_t())) {
        rest /= pz;
        ++t;
    }
    return t;
}

namespace {

Int pollard_rho(const Int& n) {
    // Brent's variant; n must be composite and odd.
    Int x, y, d, c, q;
    for (long attempt = 1;; ++attempt) {
        x = 2 + attempt;
        y = x;
        c = attempt;
        d = 1;
        q = 1;
        int steps = 0;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = (q * diff) % n;
            if (++steps % 32 == 0) {
                d = igcd(q, n);
                if (d != 1 && d != n) return d;
                if (d == n) break;
            }
        }
        d = igcd(q, n);
        if (d != 1 && d != n) return d;
        // cycle collapsed; retry with a different polynomial
    }
}

void factor_into(Int n, std::vector<std::pair<Int, unsigned>>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.emplace_back(n, 1u);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n) {
    if (n <= 0) throw std::domain_error("factorize: n must be >= 1");
    std::vector<std::pair<Int, unsigned>> fac;
    Int rest = n;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        unsigned e = 0;
        Int pz(static_cast<long>(p));
        while (mpz_divisible_p(rest.get_mpz_t(), pz.get_mpz_t())) rest /= pz, ++e;
        if (e) fac.emplace_back(pz, e);
    }
    // trial division up to 2^20 catches everything the sieve produces;
    // rho picks up large cofactors from gcd values
    for (unsigned long p = 17; p <= (1ul << 20) && rest > 1; p += 2) {
        Int pz(static_cast<long>(p));
        if (pz * pz > rest) break;
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), pz.get_mpz_t())) rest /= pz, ++e;
        if (e) fac.emplace_back(pz, e);
    }
    if (rest > 1) {
        std::vector<std::pair<Int, unsigned>> tail;
        factor_into(rest, tail);
        std::sort(tail.begin(), tail.end());
        for (std::size_t i = 0; i < tail.size();) {
            std::size_t j = i;
            unsigned e = 0;
            while (j < tail.size() && tail[j].first == tail[i].first) e += tail[j++].second;
            fac.emplace_back(tail[i].first, e);
            i = j;
        }
    }
    std::sort(fac.begin(), fac.end());
    return fac;
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factorize(n);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fac) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::optional<PrimePower> as_prime_power(unsigned long q) {
    if (q < 2) return std::nullopt;
    unsigned long n = q;
    unsigned long p = 0;
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{q, 1, q};  // q itself prime
    unsigned f = 0;
    while (n % p == 0) n /= p, ++f;
    if (n != 1) return std::nullopt;
    return PrimePower{p, f, q};
}

std::vector<PrimePower> prime_powers(const PowerConstraint& c, unsigned long q_max) {
    std::vector<PrimePower> out;
    auto admit = [&](const PrimePower& pp) {
        if (pp.q > q_max || pp.q < c.min_q) return false;
        if (c.p && pp.p != *c.p) return false;
        if (c.odd_exponent && pp.f % 2 == 0) return false;
        return true;
    };
    if (c.p) {
        unsigned long p = *c.p;
        Int q(static_cast<long>(p));
        unsigned f = 1;
        while (q <= static_cast<long>(q_max)) {
            PrimePower pp{p, f, q.get_ui()};
            if (admit(pp)) out.push_back(pp);
            q *= static_cast<long>(p);
            ++f;
        }
        return out;
    }
    for (unsigned long q = 2; q <= q_max; ++q) {
        auto pp = as_prime_power(q);
        if (pp && admit(*pp)) out.push_back(*pp);
    }
    return out;
}

}  // namespace qsd
