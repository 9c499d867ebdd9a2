#ifndef QSD_SIEVE_HPP
#define QSD_SIEVE_HPP

#include "qsd/catalog.hpp"
#include "qsd/report.hpp"
#include "qsd/xgcd.hpp"

namespace qsd {

inline constexpr unsigned long kDefaultQMax = 100000;

// The global constant 2(y-1) <= 18 from y <= 10; every stage bound uses
// it on the r/(r,lambda) side.
inline constexpr long kYFactor = 18;

// Symbolic certificate for a polynomial case: for every admissible q,
//   r/(r,lambda)  <=  c * h(q) * |Out(X)|.
// `dominance` records deg(v) >= 2*deg(h) + 3, which (with |Out| <= 2f and
// f <= log2 q) certifies failure of v <= 18 (c h |Out|)^2 beyond any
// finite scan; without it a case cannot be closed symbolically.
struct BoundCertificate {
    IntPoly h;
    Int c;
    int deg_v = 0;
    int deg_h = 0;
    bool dominance = false;
};

/// Certificate for a polynomial (non-fixed-q) case.  Numeric rows have no
/// symbolic stage and go straight to exact_stage.
BoundCertificate bound_stage(const SubgroupCase& c);

/// The same construction for an arbitrary pair (v-polynomial, divisor
/// polynomial); used by the parabolic gcd routes.
BoundCertificate bound_stage_pair(const RatPoly& index, const IntPoly& divisor);

/// All u with case conditions satisfied, q = u^scale valid for the family,
/// q <= q_max, and v(u) <= 18 (c h(u) |Out|)^2.  Ascending.
std::vector<PrimePower> q_feasible(const SubgroupCase& c, const BoundCertificate& cert,
                                   unsigned long q_max);

struct ExactOutcome {
    Int v;
    Int a;
    bool eliminated = false;              // v > 18 a^2
    std::vector<DesignParams> params;     // param_search output when not eliminated
};

/// Exact-integer gcd stage at one point (u for subfield rows).
ExactOutcome exact_stage(const SubgroupCase& c, const PrimePower& u);

/// Full pipeline for one non-parabolic case.
std::vector<ReportEntry> run_case(const SubgroupCase& c, unsigned long q_max = kDefaultQMax);

/// Full pipeline for one parabolic case.
std::vector<ReportEntry> run_parabolic(const ParabolicCase& c,
                                       unsigned long q_max = kDefaultQMax);

/// The complete Theorem replay: every catalog row, every parabolic, and
/// the special-lemma closures, on `workers` threads with deterministic
/// output.  workers = 0 picks a hardware default.
EliminationReport run_all(unsigned long q_max = kDefaultQMax, unsigned workers = 0);

}  // namespace qsd

#endif
