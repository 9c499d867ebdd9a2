#ifndef QSD_POLY_HPP
#define QSD_POLY_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "qsd/numeric.hpp"

namespace qsd {

// Dense univariate polynomials in q, coefficients stored lowest degree
// first.  The zero polynomial is the empty coefficient list; otherwise
// the leading coefficient is nonzero.  Degrees across the whole catalog
// stay below ~500, so dense storage is the right shape.

class RatPoly;

class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<Int> coeffs);
    explicit IntPoly(const Int& constant);

    static IntPoly q();                      // the indeterminate
    static IntPoly monomial(Int c, int deg);

    const std::vector<Int>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Int& coeff(int deg) const;
    const Int& leading() const;

    IntPoly pow(unsigned e) const;
    /// Substitute q -> q^s.
    IntPoly compose_power(unsigned s) const;

    Int operator()(const Int& x) const;      // exact Horner evaluation

    bool operator==(const IntPoly&) const = default;

    friend IntPoly operator+(const IntPoly&, const IntPoly&);
    friend IntPoly operator-(const IntPoly&, const IntPoly&);
    friend IntPoly operator*(const IntPoly&, const IntPoly&);
    friend IntPoly operator-(const IntPoly&);
    friend IntPoly operator+(const IntPoly& a, long b) { return a + IntPoly(Int(b)); }
    friend IntPoly operator-(const IntPoly& a, long b) { return a - IntPoly(Int(b)); }
    friend IntPoly operator*(const IntPoly& a, long b) { return a * IntPoly(Int(b)); }
    friend IntPoly operator*(long a, const IntPoly& b) { return IntPoly(Int(a)) * b; }

    /// Content: gcd of all coefficients (0 for the zero polynomial).
    Int content() const;

    std::string str() const;

private:
    void normalize();
    std::vector<Int> c_;
};

class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    explicit RatPoly(const Rat& constant);
    RatPoly(const IntPoly& p);  // implicit widening is intended

    static RatPoly q();

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int deg) const;
    const Rat& leading() const;

    RatPoly pow(unsigned e) const;
    RatPoly compose_power(unsigned s) const;

    Rat operator()(const Rat& x) const;
    Rat operator()(const Int& x) const { return (*this)(Rat(x)); }

    bool operator==(const RatPoly&) const = default;

    friend RatPoly operator+(const RatPoly&, const RatPoly&);
    friend RatPoly operator-(const RatPoly&, const RatPoly&);
    friend RatPoly operator*(const RatPoly&, const RatPoly&);
    friend RatPoly operator-(const RatPoly&);
    friend RatPoly operator*(const Rat& a, const RatPoly& b);

    /// Least common multiple of all coefficient denominators (1 if zero).
    Int denominator_lcm() const;
    /// True if every coefficient is an integer.
    bool is_integral() const;
    /// Conversion to IntPoly; throws if a coefficient is non-integral.
    IntPoly to_int() const;

    std::string str() const;

private:
    void normalize();
    std::vector<Rat> c_;
};

/// Quotient and remainder in Q[q]; divisor must be nonzero.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& num, const RatPoly& den);

/// Exact division; throws std::domain_error if the remainder is nonzero.
/// In-scope quotients are all exact, so a nonzero remainder is a data bug.
RatPoly exact_div(const RatPoly& num, const RatPoly& den);
IntPoly exact_div(const IntPoly& num, const IntPoly& den);

/// Exact Horner evaluation of a RatPoly at an integer point, demanding an
/// integer value.  Throws if the value has a nontrivial denominator.
Int eval_int(const RatPoly& p, const Int& x);

}  // namespace qsd

#endif
