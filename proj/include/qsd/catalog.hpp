#ifndef QSD_CATALOG_HPP
#define QSD_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsd/groups.hpp"
#include "qsd/weyl.hpp"

namespace qsd {

// q-conditions attached to a catalog row, on top of the family's own
// validity predicate.  For subfield rows (scale > 1) the condition is on
// the subfield parameter u with q = u^scale.
struct QCondition {
    std::optional<unsigned long> fixed_p;
    bool p_odd = false;
    bool f_odd = false;
    unsigned long min_q = 2;
    std::vector<int> q_mod3;  // nonempty: require q % 3 in this set

    bool matches(const PrimePower& u) const;
    std::string text() const;
};

// One row of the large-maximal-subgroup table, expanded per sign choice
// and, where the subgroup-order constant depends on q mod 2 or mod 3, per
// congruence class.  order_u is the order of the preimage of H cap X in
// the universal group X_sc, as a polynomial in u (q = u^scale); index_u
// is the exact point count v = |X_sc| / order_u.  Rows pinned to
// individual q values carry integer orders instead.
struct SubgroupCase {
    std::string id;
    Family family;
    std::string subgroup;
    unsigned scale = 1;
    RatPoly order_u;
    RatPoly index_u;
    QCondition cond;
    std::vector<unsigned long> fixed_q;
    std::map<unsigned long, Int> fixed_orders;  // q -> |H cap X| in the simple group
    bool route_special = false;                 // (G2, A2^eps): closed in the special module
    std::vector<std::string> annotations;

    bool is_numeric() const { return !fixed_q.empty(); }
};

/// The complete non-parabolic case list.
const std::vector<SubgroupCase>& nonparabolic_cases();

/// v at a specific q for a numeric row (simple-group order / |H cap X|).
Int numeric_index_at(const SubgroupCase& c, unsigned long q);

// A maximal parabolic case.  index_poly has constant term 1 and
// nonnegative coefficients; stab_order_poly = |X_sc| / index_poly bounds
// the stabilizer order from above (it exceeds |X_alpha| by at most the
// center of X_sc).
struct ParabolicCase {
    enum class Route {
        Generic,   // unique p-power subdegree: v <= 72 q^2
        E6Node1,   // rank-3 action, subdegree d1
        E6Node3,   // extended-gcd route on (v-1, |X_alpha|)
        Special,   // 2B2/2G2 Borel: handled by the dedicated lemma checks
    };

    std::string id;
    Family family;
    int node;
    std::string subgroup;
    IntPoly index_poly;
    IntPoly stab_order_poly;
    Route route = Route::Generic;
    std::vector<std::string> annotations;
};

/// All maximal parabolic cases across the ten families.
const std::vector<ParabolicCase>& parabolic_cases();

/// E6 node-1 rank-3 subdegrees d1, d2 with 1 + d1 + d2 = v.
IntPoly e6_node1_subdegree(int which);

/// Case lookup by id over both lists; nullopt when unknown.
const SubgroupCase* find_nonparabolic(const std::string& id);
const ParabolicCase* find_parabolic(const std::string& id);

}  // namespace qsd

#endif
