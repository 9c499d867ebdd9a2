#ifndef QSD_WEYL_HPP
#define QSD_WEYL_HPP

#include <vector>

#include "qsd/groups.hpp"

namespace qsd {

// Weyl-degree data for the untwisted families, plus the Dynkin diagram
// (Bourbaki numbering).  Deleting a node yields the Levi of the
// corresponding maximal parabolic; the index polynomial is
//
//   [X : P_J] = prod_degrees (q^d - 1) / ( (q-1) * prod_Levi (q^e - 1) )
//
// which is exact by the Bruhat decomposition (Poincare polynomial of the
// coset variety).
struct WeylData {
    std::vector<int> degrees;                       // fundamental degrees
    std::vector<std::pair<int, int>> edges;         // 1-based node pairs
    int rank;
};

const WeylData& weyl_data(Family f);  // untwisted only; throws otherwise

struct LeviComponent {
    char type;  // 'A', 'C' (BC degrees), 'D', 'E'
    int rank;
};

/// Degrees of one simple component.
std::vector<int> component_degrees(const LeviComponent& c);

/// Connected components of the diagram after deleting `node` (1-based).
std::vector<LeviComponent> levi_components(Family f, int node);

/// Number of maximal parabolic classes (untwisted: rank; twisted: the
/// number of Frobenius orbits on nodes).
int parabolic_count(Family f);

/// Index polynomial of the maximal parabolic P_node.  For twisted
/// families the node enumerates the fixed embedded table.
const IntPoly& parabolic_index(Family f, int node);

/// Weyl group order |W| = product of degrees (untwisted).
Int weyl_order(Family f);

/// |W|/|W_J| for the parabolic at `node` (untwisted).
Int weyl_index(Family f, int node);

}  // namespace qsd

#endif
