#include "qsd/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qsd {

namespace {

const IntPoly Q = IntPoly::q();

IntPoly qd_minus_1(int d) { return Q.pow(static_cast<unsigned>(d)) - 1; }

WeylData make_weyl(Family f) {
    switch (f) {
        case Family::G2:
            return {{2, 6}, {{1, 2}}, 2};
        case Family::F4:
            return {{2, 6, 8, 12}, {{1, 2}, {2, 3}, {3, 4}}, 4};
        case Family::E6:
            return {{2, 5, 6, 8, 9, 12}, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}}, 6};
        case Family::E7:
            return {{2, 6, 8, 10, 12, 14, 18},
                    {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}},
                    7};
        case Family::E8:
            return {{2, 8, 12, 14, 18, 20, 24, 30},
                    {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}},
                    8};
        default:
            throw std::domain_error("weyl_data: twisted family " + family_name(f));
    }
}

bool is_untwisted(Family f) {
    return f == Family::G2 || f == Family::F4 || f == Family::E6 || f == Family::E7 ||
           f == Family::E8;
}

// Classify a connected simply-laced-shaped component by its shape: a
// chain is type A (or BC inside F4, same degrees), a fork with leg
// lengths (1,1,k) is D, legs (1,2,2) and (1,2,3) are E6 and E7.
LeviComponent classify(const std::vector<int>& nodes,
                       const std::map<int, std::vector<int>>& adj, Family f) {
    int n = static_cast<int>(nodes.size());
    int branch = -1;
    for (int v : nodes) {
        auto it = adj.find(v);
        int deg = it == adj.end() ? 0 : static_cast<int>(it->second.size());
        if (deg > 2) branch = v;
    }
    if (branch < 0) {
        // chain; inside F4 the 2-3 edge makes it BC-type (same degrees)
        if (f == Family::F4 && n >= 2) {
            bool has23 = false;
            std::set<int> in(nodes.begin(), nodes.end());
            if (in.count(2) && in.count(3)) has23 = true;
            if (has23) return {'C', n};
        }
        return {'A', n};
    }
    // fork: measure the three leg lengths from the branch node
    std::vector<int> legs;
    for (int start : adj.at(branch)) {
        int len = 1, prev = branch, cur = start;
        for (;;) {
            const auto& nb = adj.at(cur);
            int next = -1;
            for (int w : nb)
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        legs.push_back(len);
    }
    std::sort(legs.begin(), legs.end());
    if (legs.size() != 3) throw std::logic_error("classify: bad fork");
    if (legs[0] == 1 && legs[1] == 1) return {'D', n};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] == 2) return {'E', 6};
    if (legs[0] == 1 && legs[1] == 2 && legs[2] == 3) return {'E', 7};
    throw std::logic_error("classify: unrecognized component shape");
}

}  // namespace

const WeylData& weyl_data(Family f) {
    static const std::map<Family, WeylData> cache = [] {
        std::map<Family, WeylData> m;
        for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8})
            m.emplace(f, make_weyl(f));
        return m;
    }();
    auto it = cache.find(f);
    if (it == cache.end()) throw std::domain_error("weyl_data: twisted family");
    return it->second;
}

std::vector<int> component_degrees(const LeviComponent& c) {
    std::vector<int> d;
    switch (c.type) {
        case 'A':
            for (int i = 2; i <= c.rank + 1; ++i) d.push_back(i);
            return d;
        case 'C':
            for (int i = 1; i <= c.rank; ++i) d.push_back(2 * i);
            return d;
        case 'D':
            for (int i = 1; i <= c.rank - 1; ++i) d.push_back(2 * i);
            d.push_back(c.rank);
            return d;
        case 'E':
            if (c.rank == 6) return {2, 5, 6, 8, 9, 12};
            if (c.rank == 7) return {2, 6, 8, 10, 12, 14, 18};
            throw std::logic_error("component_degrees: bad E rank");
    }
    throw std::logic_error("component_degrees: bad type");
}

std::vector<LeviComponent> levi_components(Family f, int node) {
    const WeylData& w = weyl_data(f);
    if (node < 1 || node > w.rank) throw std::domain_error("levi_components: bad node");
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : w.edges) {
        if (a == node || b == node) continue;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<int> remaining;
    for (int v = 1; v <= w.rank; ++v)
        if (v != node) remaining.insert(v);
    std::vector<LeviComponent> comps;
    while (!remaining.empty()) {
        std::vector<int> stack{*remaining.begin()}, nodes;
        remaining.erase(remaining.begin());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            nodes.push_back(v);
            auto it = adj.find(v);
            if (it == adj.end()) continue;
            for (int wv : it->second)
                if (remaining.erase(wv)) stack.push_back(wv);
        }
        comps.push_back(classify(nodes, adj, f));
    }
    return comps;
}

int parabolic_count(Family f) {
    switch (f) {
        case Family::TwoB2:
        case Family::TwoG2: return 1;
        case Family::ThreeD4:
        case Family::TwoF4: return 2;
        case Family::TwoE6: return 4;
        default: return weyl_data(f).rank;
    }
}

namespace {

IntPoly untwisted_index(Family f, int node) {
    const WeylData& w = weyl_data(f);
    IntPoly num(Int(1));
    for (int d : w.degrees) num = num * qd_minus_1(d);
    IntPoly den = qd_minus_1(1);
    for (const auto& comp : levi_components(f, node))
        for (int e : component_degrees(comp)) den = den * qd_minus_1(e);
    return exact_div(num, den);
}

// Twisted parabolic indices.  2B2/2G2/3D4/2F4 are classical fixed data
// (point and line counts of the associated Moufang polygons); the four
// 2E6 indices come out of the twisted order formula |X|/|U_J||L_J| with
// the Levi orders assembled from Frobenius orbits on the E6 diagram.
std::vector<IntPoly> twisted_indices(Family f) {
    switch (f) {
        case Family::TwoB2: return {Q.pow(2) + 1};
        case Family::TwoG2: return {Q.pow(3) + 1};
        case Family::ThreeD4: {
            IntPoly core = Q.pow(8) + Q.pow(4) + 1;
            return {core * (Q + 1), core * (Q.pow(3) + 1)};
        }
        case Family::TwoF4: {
            IntPoly tail = (Q.pow(3) + 1) * (Q.pow(6) + 1);
            return {(Q + 1) * tail, (Q.pow(2) + 1) * tail};
        }
        case Family::TwoE6: {
            const IntPoly& X = order_poly(Family::TwoE6);
            // node orbits {1,6}, {2}, {3,5}, {4} with Levi types
            // T1*2D4, T1*2A5, T1*(A1(q^2) x A2), T1*(A2(q^2) x A1)
            IntPoly L16 = Q.pow(12) * (Q.pow(4) + 1) * qd_minus_1(2) * qd_minus_1(4) *
                          qd_minus_1(6) * qd_minus_1(2);
            IntPoly L2 = Q.pow(15) * qd_minus_1(2) * (Q.pow(3) + 1) * qd_minus_1(4) *
                         (Q.pow(5) + 1) * qd_minus_1(6) * qd_minus_1(1);
            IntPoly L35 = Q.pow(5) * qd_minus_1(4) * qd_minus_1(2) * qd_minus_1(3) *
                          qd_minus_1(2);
            IntPoly L4 = Q.pow(7) * qd_minus_1(4) * qd_minus_1(6) * qd_minus_1(2) *
                         qd_minus_1(1);
            IntPoly U16 = Q.pow(36 - 12), U2 = Q.pow(36 - 15), U35 = Q.pow(36 - 5),
                    U4 = Q.pow(36 - 7);
            return {exact_div(X, U16 * L16), exact_div(X, U2 * L2), exact_div(X, U35 * L35),
                    exact_div(X, U4 * L4)};
        }
        default:
            throw std::domain_error("twisted_indices: untwisted family");
    }
}

}  // namespace

const IntPoly& parabolic_index(Family f, int node) {
    static std::map<Family, std::vector<IntPoly>> cache = [] {
        std::map<Family, std::vector<IntPoly>> m;
        for (Family f : kAllFamilies) {
            std::vector<IntPoly> v;
            if (is_untwisted(f)) {
                for (int n = 1; n <= weyl_data(f).rank; ++n)
                    v.push_back(untwisted_index(f, n));
            } else {
                v = twisted_indices(f);
            }
            m.emplace(f, std::move(v));
        }
        return m;
    }();
    const auto& v = cache.at(f);
    if (node < 1 || node > static_cast<int>(v.size()))
        throw std::domain_error("parabolic_index: bad node");
    return v[static_cast<std::size_t>(node - 1)];
}

Int weyl_order(Family f) {
    Int w(1);
    for (int d : weyl_data(f).degrees) w *= d;
    return w;
}

Int weyl_index(Family f, int node) {
    Int wj(1);
    for (const auto& comp : levi_components(f, node))
        for (int e : component_degrees(comp)) wj *= e;
    Int w = weyl_order(f);
    if (w % wj != 0) throw std::logic_error("weyl_index: non-integral");
    return w / wj;
}

}  // namespace qsd
