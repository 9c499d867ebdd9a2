#ifndef QSD_DESIGN_HPP
#define QSD_DESIGN_HPP

#include <optional>
#include <vector>

#include "qsd/numeric.hpp"

namespace qsd {

// Candidate parameter quintuple for a quasi-symmetric 2-design with
// intersection numbers (0, y), 2 <= y <= 10.
struct DesignParams {
    Int v, b, r, k, lambda;
    int y;

    bool operator==(const DesignParams&) const = default;
};

/// All invariants in one place; param_search re-asserts this on every
/// candidate it constructs.
bool design_invariants_hold(const DesignParams& d);

// Exactly the quintuples satisfying
//   r(k-1) = lambda(v-1),   (y-1)(r-1) = (k-1)(lambda-1),
//   vr = bk, b > v, k < r, 2 < k < v-1, y | k, y | (r-lambda),
//   y < lambda <= k-1, r <= v-1, v < (k^2-k)/(y-1)
// and, when r_divisor is given, r/(r,lambda) | r_divisor.
//
// Enumeration: write r' = r/(r,lambda), l' = lambda/(r,lambda); then
// r'(k-1) = l'(v-1) with (r',l') = 1 forces r' | v-1, and the two-sided
// bound (y-1) r'^2/l'^2 < v-1 < 2(y-1) r'^2/l'^2 pins l' to a short
// window per divisor r'.  This is complete, not heuristic.
std::vector<DesignParams> param_search(const Int& v, const std::vector<int>& y_set,
                                       const std::optional<Int>& r_divisor = std::nullopt);

/// Convenience: y over the full range [2, 10].
std::vector<DesignParams> param_search(const Int& v,
                                       const std::optional<Int>& r_divisor = std::nullopt);

}  // namespace qsd

#endif
