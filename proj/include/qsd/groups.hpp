#ifndef QSD_GROUPS_HPP
#define QSD_GROUPS_HPP

#include <string>

#include "qsd/poly.hpp"

namespace qsd {

// The ten exceptional families.  Order polynomials are stored in the
// universal (simply connected) version; the simple group order is
// order_poly(q) / center_divisor(q).
enum class Family { TwoB2, TwoG2, ThreeD4, TwoF4, G2, F4, E6, TwoE6, E7, E8 };

inline constexpr Family kAllFamilies[] = {
    Family::TwoB2, Family::TwoG2, Family::ThreeD4, Family::TwoF4, Family::G2,
    Family::F4,    Family::E6,    Family::TwoE6,   Family::E7,    Family::E8,
};

std::string family_name(Family f);          // "2B2", "3D4", "E6", ...
Family family_from_name(const std::string&); // throws on unknown name

/// Universal-version order of the family as a polynomial in q.
const IntPoly& order_poly(Family f);

/// |Z(X_sc(q))|, the factor between universal and simple orders.
Int center_divisor(Family f, const PrimePower& q);

/// Simple group order; requires valid_q.  For 2F4 at q=2 this is the
/// order of the Tits group 2F4(2)'.
Int order_of(Family f, const PrimePower& q);

/// |Out(X)| for the simple group at q = p^f; requires valid_q.
Int out_order(Family f, const PrimePower& q);

/// Upper bound on |Out(X)| of the form mult*f, valid for every q = p^f.
unsigned out_multiplier_cap(Family f);

/// True iff the family is simple at q (2B2: q=2^(2n+1)>=8; 2G2:
/// q=3^(2n+1)>=27; G2: q>=3; 2F4: q=2^(2n+1) including the q=2 row, which
/// the catalog handles via the Tits group).
bool valid_q(Family f, const PrimePower& q);

// Classical helper orders (universal versions), used to assemble
// subgroup-order expressions.  n is the Lie rank; eps = +1 / -1.
IntPoly sl_order(int n, int eps);        // A_{n-1}^eps: SL_n(q) or SU_n(q)
IntPoly sp_order(int n);                  // C_n: Sp_{2n}(q)
IntPoly spin_odd_order(int n);            // B_n: Spin_{2n+1}(q)
IntPoly spin_even_order(int n, int eps);  // D_n^eps: Spin_{2n}^eps(q)

}  // namespace qsd

#endif
