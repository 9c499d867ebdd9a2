#include "qsd/groups.hpp"

#include <map>
#include <numeric>

namespace qsd {

namespace {

const IntPoly Q = IntPoly::q();

IntPoly qpow_minus_1(unsigned d) { return Q.pow(d) - 1; }
IntPoly qpow_plus_1(unsigned d) { return Q.pow(d) + 1; }

IntPoly build_order(Family f) {
    switch (f) {
        case Family::TwoB2:
            return Q.pow(2) * qpow_plus_1(2) * qpow_minus_1(1);
        case Family::TwoG2:
            return Q.pow(3) * qpow_plus_1(3) * qpow_minus_1(1);
        case Family::ThreeD4:
            return Q.pow(12) * (Q.pow(8) + Q.pow(4) + 1) * qpow_minus_1(6) * qpow_minus_1(2);
        case Family::TwoF4:
            return Q.pow(12) * qpow_plus_1(6) * qpow_minus_1(4) * qpow_plus_1(3) * qpow_minus_1(1);
        case Family::G2:
            return Q.pow(6) * qpow_minus_1(6) * qpow_minus_1(2);
        case Family::F4:
            return Q.pow(24) * qpow_minus_1(2) * qpow_minus_1(6) * qpow_minus_1(8) *
                   qpow_minus_1(12);
        case Family::E6:
            return Q.pow(36) * qpow_minus_1(2) * qpow_minus_1(5) * qpow_minus_1(6) *
                   qpow_minus_1(8) * qpow_minus_1(9) * qpow_minus_1(12);
        case Family::TwoE6:
            return Q.pow(36) * qpow_minus_1(2) * qpow_plus_1(5) * qpow_minus_1(6) *
                   qpow_minus_1(8) * qpow_plus_1(9) * qpow_minus_1(12);
        case Family::E7:
            return Q.pow(63) * qpow_minus_1(2) * qpow_minus_1(6) * qpow_minus_1(8) *
                   qpow_minus_1(10) * qpow_minus_1(12) * qpow_minus_1(14) * qpow_minus_1(18);
        case Family::E8:
            return Q.pow(120) * qpow_minus_1(2) * qpow_minus_1(8) * qpow_minus_1(12) *
                   qpow_minus_1(14) * qpow_minus_1(18) * qpow_minus_1(20) * qpow_minus_1(24) *
                   qpow_minus_1(30);
    }
    throw std::logic_error("build_order: bad family");
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::TwoB2: return "2B2";
        case Family::TwoG2: return "2G2";
        case Family::ThreeD4: return "3D4";
        case Family::TwoF4: return "2F4";
        case Family::G2: return "G2";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::TwoE6: return "2E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
    }
    throw std::logic_error("family_name: bad family");
}

Family family_from_name(const std::string& s) {
    for (Family f : kAllFamilies)
        if (family_name(f) == s) return f;
    throw std::domain_error("unknown family: " + s);
}

const IntPoly& order_poly(Family f) {
    static const std::map<Family, IntPoly> cache = [] {
        std::map<Family, IntPoly> m;
        for (Family f : kAllFamilies) m.emplace(f, build_order(f));
        return m;
    }();
    return cache.at(f);
}

Int center_divisor(Family f, const PrimePower& q) {
    switch (f) {
        case Family::E6: return Int(std::gcd(3ul, q.q - 1));
        case Family::TwoE6: return Int(std::gcd(3ul, q.q + 1));
        case Family::E7: return Int(std::gcd(2ul, q.q - 1));
        case Family::TwoF4:
            // 2F4(2) has the Tits group 2F4(2)' as its simple socle, of
            // index 2 in the full group the order polynomial describes.
            return Int(q.q == 2 ? 2 : 1);
        default: return Int(1);
    }
}

bool valid_q(Family f, const PrimePower& q) {
    switch (f) {
        case Family::TwoB2: return q.p == 2 && q.f % 2 == 1 && q.q >= 8;
        case Family::TwoG2: return q.p == 3 && q.f % 2 == 1 && q.q >= 27;
        case Family::TwoF4: return q.p == 2 && q.f % 2 == 1;
        case Family::G2: return q.q >= 3;  // G2(2) is not simple
        default: return q.q >= 2;
    }
}

Int order_of(Family f, const PrimePower& q) {
    if (!valid_q(f, q)) throw std::domain_error("order_of: invalid q for " + family_name(f));
    Int full = order_poly(f)(q.value());
    Int d = center_divisor(f, q);
    if (full % d != 0) throw std::logic_error("order_of: center divisor does not divide");
    return full / d;
}

Int out_order(Family f, const PrimePower& q) {
    if (!valid_q(f, q)) throw std::domain_error("out_order: invalid q for " + family_name(f));
    unsigned long fexp = q.f;
    switch (f) {
        case Family::TwoB2: return Int(fexp);
        case Family::TwoG2: return Int(fexp);
        case Family::ThreeD4: return Int(3 * fexp);
        case Family::TwoF4:
            // Out(2F4(2)') = 2; for q >= 8 only field automorphisms.
            return Int(q.q == 2 ? 2 : fexp);
        case Family::G2: return Int(q.p == 3 ? 2 * fexp : fexp);
        case Family::F4: return Int(q.p == 2 ? 2 * fexp : fexp);  // (2,p)f
        case Family::E6: return Int(2 * fexp * std::gcd(3ul, q.q - 1));
        case Family::TwoE6: return Int(2 * fexp * std::gcd(3ul, q.q + 1));
        case Family::E7: return Int(fexp * std::gcd(2ul, q.q - 1));
        case Family::E8: return Int(fexp);
    }
    throw std::logic_error("out_order: bad family");
}

unsigned out_multiplier_cap(Family f) {
    switch (f) {
        case Family::ThreeD4: return 3;
        case Family::G2:
        case Family::F4:
        case Family::E7: return 2;
        case Family::E6:
        case Family::TwoE6: return 6;
        case Family::TwoF4: return 2;  // covers the q=2 row
        default: return 1;
    }
}

IntPoly sl_order(int n, int eps) {
    if (n < 2) throw std::domain_error("sl_order: n >= 2");
    IntPoly r = Q.pow(static_cast<unsigned>(n * (n - 1) / 2));
    for (int i = 2; i <= n; ++i) {
        if (eps > 0 || i % 2 == 0)
            r = r * qpow_minus_1(static_cast<unsigned>(i));
        else
            r = r * qpow_plus_1(static_cast<unsigned>(i));  // SU: q^i - (-1)^i
    }
    return r;
}

IntPoly sp_order(int n) {
    if (n < 1) throw std::domain_error("sp_order: n >= 1");
    IntPoly r = Q.pow(static_cast<unsigned>(n * n));
    for (int i = 1; i <= n; ++i) r = r * qpow_minus_1(static_cast<unsigned>(2 * i));
    return r;
}

IntPoly spin_odd_order(int n) { return sp_order(n); }

IntPoly spin_even_order(int n, int eps) {
    if (n < 2) throw std::domain_error("spin_even_order: n >= 2");
    IntPoly r = Q.pow(static_cast<unsigned>(n * (n - 1)));
    r = r * (eps > 0 ? qpow_minus_1(static_cast<unsigned>(n))
                     : qpow_plus_1(static_cast<unsigned>(n)));
    for (int i = 1; i <= n - 1; ++i) r = r * qpow_minus_1(static_cast<unsigned>(2 * i));
    return r;
}

}  // namespace qsd
