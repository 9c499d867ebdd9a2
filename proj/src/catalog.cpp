#include "qsd/catalog.hpp"

#include <algorithm>

namespace qsd {

bool QCondition::matches(const PrimePower& u) const {
    if (fixed_p && u.p != *fixed_p) return false;
    if (p_odd && u.p == 2) return false;
    if (f_odd && u.f % 2 == 0) return false;
    if (u.q < min_q) return false;
    if (!q_mod3.empty() &&
        std::find(q_mod3.begin(), q_mod3.end(), static_cast<int>(u.q % 3)) == q_mod3.end())
        return false;
    return true;
}

std::string QCondition::text() const {
    std::string s;
    auto add = [&](const std::string& part) {
        if (!s.empty()) s += ", ";
        s += part;
    };
    if (fixed_p) add("p=" + std::to_string(*fixed_p));
    if (p_odd) add("p odd");
    if (f_odd) add("f odd");
    if (min_q > 2) add("q>=" + std::to_string(min_q));
    if (!q_mod3.empty()) {
        std::string part = "q mod 3 in {";
        for (std::size_t i = 0; i < q_mod3.size(); ++i)
            part += (i ? "," : "") + std::to_string(q_mod3[i]);
        add(part + "}");
    }
    return s.empty() ? "all q" : s;
}

namespace {

const IntPoly Q = IntPoly::q();

IntPoly qm(unsigned d) { return Q.pow(d) - 1; }
IntPoly qp(unsigned d) { return Q.pow(d) + 1; }

RatPoly half(const IntPoly& p) { return Rat(1, 2) * RatPoly(p); }
RatPoly scaled(const Rat& c, const IntPoly& p) { return c * RatPoly(p); }

struct Builder {
    std::vector<SubgroupCase> rows;

    // Polynomial row; computes the exact index by polynomial division
    // against the (possibly rescaled) universal order of the family.
    void poly(Family fam, std::string id, std::string subgroup, RatPoly order_u,
              QCondition cond = {}, unsigned scale = 1, bool special = false,
              std::vector<std::string> notes = {}) {
        SubgroupCase c;
        c.id = std::move(id);
        c.family = fam;
        c.subgroup = std::move(subgroup);
        c.scale = scale;
        c.order_u = std::move(order_u);
        RatPoly big(order_poly(fam).compose_power(scale));
        c.index_u = exact_div(big, c.order_u);  // throws on bad catalog data
        c.cond = std::move(cond);
        c.route_special = special;
        c.annotations = std::move(notes);
        rows.push_back(std::move(c));
    }

    // Fixed-q row with explicit subgroup orders.
    void numeric(Family fam, std::string id, std::string subgroup,
                 std::map<unsigned long, Int> orders, std::vector<std::string> notes = {}) {
        SubgroupCase c;
        c.id = std::move(id);
        c.family = fam;
        c.subgroup = std::move(subgroup);
        for (const auto& [q, ord] : orders) c.fixed_q.push_back(q);
        std::sort(c.fixed_q.begin(), c.fixed_q.end());
        c.fixed_orders = std::move(orders);
        c.annotations = std::move(notes);
        rows.push_back(std::move(c));
    }
};

QCondition cond_p(unsigned long p, bool f_odd = false, unsigned long min_q = 2) {
    QCondition c;
    c.fixed_p = p;
    c.f_odd = f_odd;
    c.min_q = min_q;
    return c;
}

QCondition cond_podd(unsigned long min_q = 2) {
    QCondition c;
    c.p_odd = true;
    c.min_q = min_q;
    return c;
}

QCondition cond_mod3(std::vector<int> residues, bool p_odd = false) {
    QCondition c;
    c.q_mod3 = std::move(residues);
    c.p_odd = p_odd;
    return c;
}

QCondition cond_min(unsigned long min_q) {
    QCondition c;
    c.min_q = min_q;
    return c;
}

std::vector<SubgroupCase> build_nonparabolic() {
    Builder b;
    const IntPoly sl2 = sl_order(2, +1);
    const IntPoly sl3 = sl_order(3, +1), su3 = sl_order(3, -1);
    const IntPoly sl6 = sl_order(6, +1), su6 = sl_order(6, -1);
    const IntPoly sl8 = sl_order(8, +1), su8 = sl_order(8, -1);
    const IntPoly sp6 = sp_order(3), sp8 = sp_order(4);
    const IntPoly spin8p = spin_even_order(4, +1), spin8m = spin_even_order(4, -1);
    const IntPoly spin9 = spin_odd_order(4);
    const IntPoly spin10m = spin_even_order(5, -1);
    const IntPoly spin12 = spin_even_order(6, +1);
    const IntPoly spin16 = spin_even_order(8, +1);
    const IntPoly g2 = order_poly(Family::G2);
    const IntPoly f4 = order_poly(Family::F4);
    const IntPoly d4_3 = order_poly(Family::ThreeD4);
    const IntPoly f4_2 = order_poly(Family::TwoF4);
    const IntPoly e6 = order_poly(Family::E6), e6_2 = order_poly(Family::TwoE6);
    const IntPoly e7 = order_poly(Family::E7), e8 = order_poly(Family::E8);

    // ---- 2B2(q), q = 2^(2n+1) >= 8
    b.numeric(Family::TwoB2, "2B2:torus4", "(q+sqrt(2q)+1):4",
              {{8, Int(52)}, {32, Int(164)}});
    b.poly(Family::TwoB2, "2B2:sub3", "2B2(q^(1/3))",
           RatPoly(order_poly(Family::TwoB2)), cond_p(2, true, 8), 3);

    // ---- 2G2(q), q = 3^(2n+1) >= 27
    b.poly(Family::TwoG2, "2G2:A1", "A1(q) [2 x PSL(2,q)]",
           RatPoly(Q * qm(2)));
    b.poly(Family::TwoG2, "2G2:sub3", "2G2(q^(1/3))",
           RatPoly(order_poly(Family::TwoG2)), cond_p(3, true, 3), 3);

    // ---- 3D4(q)
    b.poly(Family::ThreeD4, "3D4:A1A1", "A1(q^3)A1(q)",
           RatPoly(Q.pow(4) * qm(6) * qm(2)));
    b.poly(Family::ThreeD4, "3D4:A2+", "(q^2+q+1)A2(q)",
           RatPoly(2 * ((Q.pow(2) + Q + 1) * sl3)));
    b.poly(Family::ThreeD4, "3D4:A2-", "(q^2-q+1)A2-(q)",
           RatPoly(2 * ((Q.pow(2) - Q + 1) * su3)));
    b.poly(Family::ThreeD4, "3D4:G2", "G2(q)", RatPoly(g2));
    b.poly(Family::ThreeD4, "3D4:sub2", "3D4(q^(1/2))", RatPoly(d4_3), {}, 2);
    b.numeric(Family::ThreeD4, "3D4:7^2SL23", "7^2:SL(2,3)", {{2, Int(1176)}});

    // ---- 2F4(q), q = 2^(2n+1); generic rows at q >= 8, the q = 2 rows
    // are maximals of the Tits group 2F4(2)'.
    b.poly(Family::TwoF4, "2F4:2B2wr2", "2B2(q) wr 2",
           RatPoly(2 * (order_poly(Family::TwoB2) * order_poly(Family::TwoB2))),
           cond_min(8));
    b.poly(Family::TwoF4, "2F4:B2", "B2(q):2", RatPoly(2 * sp_order(2)), cond_min(8));
    b.poly(Family::TwoF4, "2F4:sub3", "2F4(q^(1/3))", RatPoly(f4_2), cond_p(2, true, 2), 3);
    b.numeric(Family::TwoF4, "2F4:SU3", "SU(3,q):2", {{8, Int(33094656)}});
    b.numeric(Family::TwoF4, "2F4:PGU3", "PGU(3,q):2", {{8, Int(33094656)}});
    b.numeric(Family::TwoF4, "2F4:A23", "A2(3):2", {{2, Int(11232)}},
              {"tits-group-socle"});
    b.numeric(Family::TwoF4, "2F4:A125", "A1(25)", {{2, Int(7800)}}, {"tits-group-socle"});
    b.numeric(Family::TwoF4, "2F4:A6", "A6.2^2", {{2, Int(1440)}}, {"tits-group-socle"});
    b.numeric(Family::TwoF4, "2F4:5^2", "5^2:4A4", {{2, Int(1200)}}, {"tits-group-socle"});

    // ---- G2(q), q >= 3
    b.poly(Family::G2, "G2:A2+", "A2(q) [SL(3,q):2]", RatPoly(2 * sl3), {}, 1, true);
    b.poly(Family::G2, "G2:A2-", "A2-(q) [SU(3,q):2]", RatPoly(2 * su3), {}, 1, true);
    b.poly(Family::G2, "G2:A1A1", "A1(q)^2", RatPoly(Q.pow(2) * qm(2) * qm(2)));
    b.poly(Family::G2, "G2:sub2", "G2(q^(1/2))", RatPoly(g2), {}, 2);
    b.poly(Family::G2, "G2:sub3", "G2(q^(1/3))", RatPoly(g2), {}, 3);
    b.poly(Family::G2, "G2:2G2", "2G2(q), q=3^a odd a", RatPoly(order_poly(Family::TwoG2)),
           cond_p(3, true));
    b.numeric(Family::G2, "G2:G2_2", "G2(2)", {{5, Int(12096)}, {7, Int(12096)}});
    b.numeric(Family::G2, "G2:A1_13", "A1(13)", {{4, Int(1092)}});
    b.numeric(Family::G2, "G2:J2", "J2", {{4, Int(604800)}});
    b.numeric(Family::G2, "G2:J1", "J1", {{11, Int(175560)}});
    b.numeric(Family::G2, "G2:2^3L32", "2^3.A2(2)", {{3, Int(1344)}, {5, Int(1344)}});

    // ---- F4(q)
    b.poly(Family::F4, "F4:B4", "B4(q) [Spin9(q)]", RatPoly(spin9));
    b.poly(Family::F4, "F4:D4", "D4(q).S3", RatPoly(6 * spin8p));
    b.poly(Family::F4, "F4:3D4", "3D4(q).3", RatPoly(3 * d4_3));
    b.poly(Family::F4, "F4:sub2", "F4(q^(1/2))", RatPoly(f4), {}, 2);
    b.poly(Family::F4, "F4:sub3", "F4(q^(1/3))", RatPoly(f4), {}, 3);
    b.poly(Family::F4, "F4:A1C3", "A1(q)C3(q)", half(sl2 * sp6), cond_podd());
    b.poly(Family::F4, "F4:C4", "C4(q) [Sp8(q)]", RatPoly(sp8), cond_p(2));
    b.poly(Family::F4, "F4:C2sq", "C2(q^2).2", RatPoly(2 * sp_order(2).compose_power(2)),
           cond_p(2));
    b.poly(Family::F4, "F4:C2C2", "C2(q)^2.2", RatPoly(2 * (sp_order(2) * sp_order(2))),
           cond_p(2));
    b.poly(Family::F4, "F4:2F4", "2F4(q), q=2^(2n+1)", RatPoly(f4_2), cond_p(2, true));
    b.numeric(Family::F4, "F4:3D4_2", "3D4(2).3", {{3, Int(634023936)}});
    b.numeric(Family::F4, "F4:A9", "A9", {{2, Int(181440)}});
    b.numeric(Family::F4, "F4:A10", "A10", {{2, Int(1814400)}});
    b.numeric(Family::F4, "F4:A3_3", "A3(3) [L4(3)]", {{2, Int(6065280)}});
    b.numeric(Family::F4, "F4:J2", "J2", {{2, Int(604800)}});
    b.numeric(Family::F4, "F4:S6wrS2", "S6 wr S2", {{2, Int(1036800)}});
    b.poly(Family::F4, "F4:A1G2", "A1(q)G2(q), q>3 odd", RatPoly(sl2 * g2), cond_podd(5));

    // ---- E6(q), center (3, q-1)
    b.poly(Family::E6, "E6:A1A5:even", "A1(q)A5(q)", RatPoly(sl2 * sl6), cond_p(2));
    b.poly(Family::E6, "E6:A1A5:odd", "A1(q)A5(q)", half(sl2 * sl6), cond_podd());
    b.poly(Family::E6, "E6:F4:e1", "F4(q)", RatPoly(f4), cond_mod3({0, 2}));
    b.poly(Family::E6, "E6:F4:e3", "F4(q)", RatPoly(3 * f4), cond_mod3({1}));
    b.poly(Family::E6, "E6:C4:e1", "C4(q) [PSp8(q)], p odd", half(sp8), cond_mod3({0, 2}, true));
    b.poly(Family::E6, "E6:C4:e3", "C4(q) [PSp8(q)], p odd", scaled(Rat(3, 2), sp8),
           cond_mod3({1}, true));
    b.poly(Family::E6, "E6:sub2+:m1", "E6(q^(1/2))", RatPoly(e6), cond_mod3({0, 1}), 2);
    b.poly(Family::E6, "E6:sub2+:m3", "E6(q^(1/2))", RatPoly(3 * e6), cond_mod3({2}), 2);
    b.poly(Family::E6, "E6:sub2-:m1", "2E6(q^(1/2))", RatPoly(e6_2), cond_mod3({0, 2}), 2);
    b.poly(Family::E6, "E6:sub2-:m3", "2E6(q^(1/2))", RatPoly(3 * e6_2), cond_mod3({1}), 2);
    b.poly(Family::E6, "E6:sub3:m1", "E6(q^(1/3))", RatPoly(e6), cond_mod3({0, 2}), 3);
    b.poly(Family::E6, "E6:sub3:m3", "E6(q^(1/3))", RatPoly(3 * e6), cond_mod3({1}), 3);
    b.poly(Family::E6, "E6:T2D4", "(q-1)^2.D4(q).S3", RatPoly(6 * (qm(1) * qm(1) * spin8p)),
           cond_min(3));
    b.poly(Family::E6, "E6:T3D4", "(q^2+q+1).3D4(q).3",
           RatPoly(3 * ((Q.pow(2) + Q + 1) * d4_3)));

    // ---- 2E6(q), center (3, q+1)
    b.poly(Family::TwoE6, "2E6:A1A5:even", "A1(q)A5-(q)", RatPoly(sl2 * su6), cond_p(2));
    b.poly(Family::TwoE6, "2E6:A1A5:odd", "A1(q)A5-(q)", half(sl2 * su6), cond_podd());
    b.poly(Family::TwoE6, "2E6:F4:e1", "F4(q)", RatPoly(f4), cond_mod3({0, 1}));
    b.poly(Family::TwoE6, "2E6:F4:e3", "F4(q)", RatPoly(3 * f4), cond_mod3({2}));
    b.poly(Family::TwoE6, "2E6:T1D5", "(q+1)D5-(q)", RatPoly(qp(1) * spin10m));
    b.poly(Family::TwoE6, "2E6:C4:e1", "C4(q) [PSp8(q)], p odd", half(sp8),
           cond_mod3({0, 1}, true));
    b.poly(Family::TwoE6, "2E6:C4:e3", "C4(q) [PSp8(q)], p odd", scaled(Rat(3, 2), sp8),
           cond_mod3({2}, true));
    b.poly(Family::TwoE6, "2E6:sub3:m1", "2E6(q^(1/3))", RatPoly(e6_2), cond_mod3({0, 1}), 3);
    b.poly(Family::TwoE6, "2E6:sub3:m3", "2E6(q^(1/3))", RatPoly(3 * e6_2), cond_mod3({2}), 3);
    b.poly(Family::TwoE6, "2E6:T2D4", "(q+1)^2.D4-(q).S3",
           RatPoly(6 * (qp(1) * qp(1) * spin8m)));
    b.poly(Family::TwoE6, "2E6:T3D4", "(q^2-q+1).3D4(q).3",
           RatPoly(3 * ((Q.pow(2) - Q + 1) * d4_3)), cond_min(3));
    b.numeric(Family::TwoE6, "2E6:J3", "J3", {{2, Int(50232960)}});
    b.numeric(Family::TwoE6, "2E6:A12", "A12", {{2, Int(239500800)}});
    b.numeric(Family::TwoE6, "2E6:B3_3", "B3(3) [O7(3)]", {{2, Int(4585351680)}});
    b.numeric(Family::TwoE6, "2E6:Fi22", "Fi22", {{2, Int("64561751654400")}});

    // ---- E7(q), center (2, q-1)
    b.poly(Family::E7, "E7:T1E6+", "(q-1)E6(q).2", RatPoly(2 * (qm(1) * e6)));
    b.poly(Family::E7, "E7:T1E6-", "(q+1)2E6(q).2", RatPoly(2 * (qp(1) * e6_2)));
    b.poly(Family::E7, "E7:A1D6:even", "A1(q)D6(q)", RatPoly(sl2 * spin12), cond_p(2));
    b.poly(Family::E7, "E7:A1D6:odd", "A1(q)D6(q)", half(sl2 * spin12), cond_podd());
    b.poly(Family::E7, "E7:A7+:even", "A7(q).2", RatPoly(2 * sl8), cond_p(2));
    b.poly(Family::E7, "E7:A7+:odd", "A7(q).2", RatPoly(sl8), cond_podd());
    b.poly(Family::E7, "E7:A7-:even", "A7-(q).2", RatPoly(2 * su8), cond_p(2));
    b.poly(Family::E7, "E7:A7-:odd", "A7-(q).2", RatPoly(su8), cond_podd());
    b.poly(Family::E7, "E7:A1F4", "A1(q)F4(q)", RatPoly(sl2 * f4));
    b.poly(Family::E7, "E7:sub2:ueven", "E7(q^(1/2))", RatPoly(e7), cond_p(2), 2);
    b.poly(Family::E7, "E7:sub2:uodd", "E7(q^(1/2))", RatPoly(2 * e7), cond_podd(), 2);
    b.poly(Family::E7, "E7:sub3", "E7(q^(1/3))", RatPoly(e7), {}, 3);
    b.numeric(Family::E7, "E7:Fi22", "Fi22", {{2, Int("64561751654400")}});

    // ---- E8(q)
    b.poly(Family::E8, "E8:A1E7:even", "A1(q)E7(q)", RatPoly(sl2 * e7), cond_p(2));
    b.poly(Family::E8, "E8:A1E7:odd", "A1(q)E7(q)", half(sl2 * e7), cond_podd());
    b.poly(Family::E8, "E8:D8:even", "D8(q)", RatPoly(spin16), cond_p(2));
    b.poly(Family::E8, "E8:D8:odd", "D8(q) [HSpin16(q)]", half(spin16), cond_podd());
    b.poly(Family::E8, "E8:A2E6+:e1", "A2(q)E6(q).2", RatPoly(2 * (sl3 * e6)),
           cond_mod3({0, 2}));
    b.poly(Family::E8, "E8:A2E6+:e3", "A2(q)E6(q).2", scaled(Rat(2, 3), sl3 * e6),
           cond_mod3({1}));
    b.poly(Family::E8, "E8:A2E6-:e1", "A2-(q)2E6(q).2", RatPoly(2 * (su3 * e6_2)),
           cond_mod3({0, 1}));
    b.poly(Family::E8, "E8:A2E6-:e3", "A2-(q)2E6(q).2", scaled(Rat(2, 3), su3 * e6_2),
           cond_mod3({2}));
    b.poly(Family::E8, "E8:sub2", "E8(q^(1/2))", RatPoly(e8), {}, 2);
    b.poly(Family::E8, "E8:sub3", "E8(q^(1/3))", RatPoly(e8), {}, 3);

    std::sort(b.rows.begin(), b.rows.end(),
              [](const SubgroupCase& a, const SubgroupCase& c) { return a.id < c.id; });
    return std::move(b.rows);
}

std::vector<ParabolicCase> build_parabolic() {
    std::vector<ParabolicCase> out;
    for (Family f : kAllFamilies) {
        int n = parabolic_count(f);
        for (int node = 1; node <= n; ++node) {
            ParabolicCase c;
            c.family = f;
            c.node = node;
            c.id = family_name(f) + ":P" + std::to_string(node);
            c.subgroup = "maximal parabolic P" + std::to_string(node);
            c.index_poly = parabolic_index(f, node);
            c.stab_order_poly = exact_div(order_poly(f), c.index_poly);
            if (f == Family::TwoB2 || f == Family::TwoG2) {
                c.route = ParabolicCase::Route::Special;
            } else if (f == Family::E6 && (node == 1 || node == 6)) {
                c.route = ParabolicCase::Route::E6Node1;
                c.annotations.push_back("e6-p1-printed-index-denominator-(q^8-1)-vs-computed-(q-1)");
            } else if (f == Family::E6 && (node == 3 || node == 5)) {
                c.route = ParabolicCase::Route::E6Node3;
            } else if (f == Family::E6) {
                c.route = ParabolicCase::Route::Generic;
                c.annotations.push_back("e6-p2-p4-treated-assuming-graph-automorphism");
            }
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ParabolicCase& a, const ParabolicCase& b) { return a.id < b.id; });
    return out;
}

}  // namespace

const std::vector<SubgroupCase>& nonparabolic_cases() {
    static const std::vector<SubgroupCase> cases = build_nonparabolic();
    return cases;
}

const std::vector<ParabolicCase>& parabolic_cases() {
    static const std::vector<ParabolicCase> cases = build_parabolic();
    return cases;
}

Int numeric_index_at(const SubgroupCase& c, unsigned long q) {
    auto it = c.fixed_orders.find(q);
    if (it == c.fixed_orders.end())
        throw std::domain_error("numeric_index_at: q not admissible for " + c.id);
    auto pp = as_prime_power(q);
    if (!pp) throw std::domain_error("numeric_index_at: q not a prime power");
    Int ord = order_of(c.family, *pp);
    if (ord % it->second != 0)
        throw std::logic_error("catalog data error: subgroup order does not divide |X| in " +
                               c.id);
    return ord / it->second;
}

IntPoly e6_node1_subdegree(int which) {
    // rank-3 suborbits of E6(q) on cosets of P1 (type D5)
    const IntPoly Qp = IntPoly::q();
    if (which == 1) return exact_div(Qp * (Qp.pow(8) - 1) * (Qp.pow(3) + 1), Qp - 1);
    if (which == 2) return exact_div(Qp.pow(8) * (Qp.pow(5) - 1) * (Qp.pow(4) + 1), Qp - 1);
    throw std::domain_error("e6_node1_subdegree: which must be 1 or 2");
}

const SubgroupCase* find_nonparabolic(const std::string& id) {
    for (const auto& c : nonparabolic_cases())
        if (c.id == id) return &c;
    return nullptr;
}

const ParabolicCase* find_parabolic(const std::string& id) {
    for (const auto& c : parabolic_cases())
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace qsd
