#include "qsd/xgcd.hpp"

namespace qsd {

BezoutCertificate poly_xgcd(const RatPoly& F, const RatPoly& G) {
    if (F.is_zero() && G.is_zero())
        throw std::domain_error("poly_xgcd: both inputs are zero");

    // One-sided degenerate cases first.
    if (G.is_zero()) {
        Rat inv = Rat(1) / F.leading();
        BezoutCertificate cert{inv * F, RatPoly(inv), RatPoly(), Int(1)};
        cert.c = ilcm(cert.s.denominator_lcm(), cert.t.denominator_lcm());
        return cert;
    }
    if (F.is_zero()) {
        Rat inv = Rat(1) / G.leading();
        BezoutCertificate cert{inv * G, RatPoly(), RatPoly(inv), Int(1)};
        cert.c = ilcm(cert.s.denominator_lcm(), cert.t.denominator_lcm());
        return cert;
    }

    RatPoly r0 = F, r1 = G;
    RatPoly s0(Rat(1)), s1;
    RatPoly t0, t1(Rat(1));
    while (!r1.is_zero()) {
        auto [quot, rem] = divrem(r0, r1);
        r0 = r1;
        r1 = rem;
        RatPoly s2 = s0 - quot * s1;
        s0 = s1;
        s1 = s2;
        RatPoly t2 = t0 - quot * t1;
        t0 = t1;
        t1 = t2;
    }

    Rat inv = Rat(1) / r0.leading();
    RatPoly h = inv * r0;
    RatPoly s = inv * s0;
    RatPoly t = inv * t0;

    // Reduce to the unique minimal-degree pair: s mod (G/h), then recover
    // t from the identity.  Skipped when G/h is constant (t is forced).
    RatPoly gq = exact_div(G, h);
    if (gq.degree() > 0) {
        s = divrem(s, gq).second;
        t = exact_div(h - s * F, G);
    }

    if (!(s * F + t * G == h))
        throw std::logic_error("poly_xgcd: Bezout identity failed");

    BezoutCertificate cert{std::move(h), std::move(s), std::move(t), Int(1)};
    cert.c = ilcm(cert.s.denominator_lcm(), cert.t.denominator_lcm());
    return cert;
}

GcdBound gcd_bound_multiplier(const IntPoly& F, const IntPoly& G) {
    if (F.is_zero() || G.is_zero())
        throw std::domain_error("gcd_bound_multiplier: inputs must be nonzero");
    BezoutCertificate cert = poly_xgcd(RatPoly(F), RatPoly(G));
    // c*s and c*t are integral, so c*h(q0) = (c*s)(q0)F(q0) + (c*t)(q0)G(q0)
    // is an integer divisible by gcd(F(q0), G(q0)); scaling h by its own
    // denominator lcm only multiplies that value by an integer.
    Int hden = cert.h.denominator_lcm();
    IntPoly h_int = (Rat(hden) * cert.h).to_int();
    return GcdBound{cert.c, std::move(h_int)};
}

}  // namespace qsd
