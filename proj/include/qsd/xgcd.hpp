#ifndef QSD_XGCD_HPP
#define QSD_XGCD_HPP

#include "qsd/poly.hpp"

namespace qsd {

// Bezout certificate for a pair (F, G) of rational polynomials:
//
//     s*F + t*G = h,   h monic = gcd(F, G) in Q[q].
//
// (s, t) is the canonical minimal-degree pair: deg s < deg G - deg h and
// deg t < deg F - deg h whenever both F/h and G/h are non-constant.  That
// pair is unique, which makes the multiplier c reproducible.
// c is the least common multiple of the coefficient denominators of s and
// t, i.e. the smallest positive integer with c*s and c*t integral.
struct BezoutCertificate {
    RatPoly h;
    RatPoly s;
    RatPoly t;
    Int c;
};

/// Extended Euclid in Q[q].  F and G must not both be zero.
BezoutCertificate poly_xgcd(const RatPoly& F, const RatPoly& G);

// For integer polynomials F, G the certificate yields an integer bound:
// gcd(F(q0), G(q0)) divides c * h_int(q0) for every integer q0, where
// h_int clears the denominators of h.  Obtained from c*s*F + c*t*G = c*h.
struct GcdBound {
    Int c;
    IntPoly h_int;
};

/// F, G nonzero integer polynomials.
GcdBound gcd_bound_multiplier(const IntPoly& F, const IntPoly& G);

}  // namespace qsd

#endif
