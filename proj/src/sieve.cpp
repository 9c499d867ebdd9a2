#include "qsd/sieve.hpp"

#include <algorithm>
#include <thread>

#include "qsd/special.hpp"

namespace qsd {

namespace {

PrimePower scaled_q(const SubgroupCase& c, const PrimePower& u) {
    if (c.scale == 1) return u;
    unsigned long q = 1;
    for (unsigned i = 0; i < c.scale; ++i) q *= u.q;
    return PrimePower{u.p, u.f * c.scale, q};
}

ReportEntry base_entry(const SubgroupCase& c, const std::string& stage) {
    ReportEntry e;
    e.case_id = c.id;
    e.family = family_name(c.family);
    e.subgroup = c.subgroup;
    e.stage = stage;
    e.annotations = c.annotations;
    return e;
}

ReportEntry base_entry(const ParabolicCase& c, const std::string& stage) {
    ReportEntry e;
    e.case_id = c.id;
    e.family = family_name(c.family);
    e.subgroup = c.subgroup;
    e.stage = stage;
    e.annotations = c.annotations;
    return e;
}

std::string join_q(const std::vector<PrimePower>& qs, unsigned scale) {
    std::string s;
    for (const auto& u : qs) {
        unsigned long q = 1;
        for (unsigned i = 0; i < scale; ++i) q *= u.q;
        s += (s.empty() ? "" : ",") + std::to_string(q);
    }
    return s;
}

}  // namespace

BoundCertificate bound_stage_pair(const RatPoly& index, const IntPoly& divisor) {
    Int d = index.denominator_lcm();
    IntPoly F = (Rat(d) * (index - RatPoly(Rat(1)))).to_int();  // d*(v-1)
    GcdBound gb = gcd_bound_multiplier(F, divisor);
    BoundCertificate cert;
    cert.h = std::move(gb.h_int);
    cert.c = std::move(gb.c);
    cert.deg_v = index.degree();
    cert.deg_h = cert.h.degree();
    cert.dominance = cert.deg_v >= 2 * cert.deg_h + 3;
    return cert;
}

BoundCertificate bound_stage(const SubgroupCase& c) {
    if (c.is_numeric())
        throw std::domain_error("bound_stage: fixed-q case " + c.id +
                                " has no symbolic stage");
    Int dg = c.order_u.denominator_lcm();
    IntPoly G = (Rat(dg) * c.order_u).to_int();
    return bound_stage_pair(c.index_u, G);
}

std::vector<PrimePower> q_feasible(const SubgroupCase& c, const BoundCertificate& cert,
                                   unsigned long q_max) {
    std::vector<PrimePower> out;
    PowerConstraint pc;
    pc.p = c.cond.fixed_p;
    pc.odd_exponent = c.cond.f_odd;
    unsigned long u_max = q_max;
    if (c.scale == 2)
        while (u_max * u_max > q_max) --u_max;
    if (c.scale == 3)
        while (u_max * u_max * u_max > q_max) --u_max;
    Int d = c.index_u.denominator_lcm();
    for (const PrimePower& u : prime_powers(pc, u_max)) {
        if (!c.cond.matches(u)) continue;
        PrimePower q = scaled_q(c, u);
        if (!valid_q(c.family, q)) continue;
        Int dv = eval_int(Rat(d) * c.index_u, u.value());  // d*v
        Int bound = cert.c * cert.h(u.value()) * out_order(c.family, q);
        if (dv <= d * kYFactor * bound * bound) out.push_back(u);
    }
    return out;
}

ExactOutcome exact_stage(const SubgroupCase& c, const PrimePower& u) {
    ExactOutcome res;
    PrimePower q = scaled_q(c, u);
    Int M;  // upper bound on |X_alpha|
    if (c.is_numeric()) {
        res.v = numeric_index_at(c, q.q);
        M = c.fixed_orders.at(q.q);
    } else {
        res.v = eval_int(c.index_u, u.value());
        M = eval_int(c.order_u, u.value());
    }
    if (res.v <= 2) throw std::logic_error("exact_stage: degenerate index in " + c.id);
    res.a = igcd(res.v - 1, M * out_order(c.family, q));
    res.eliminated = res.v > kYFactor * res.a * res.a;
    if (!res.eliminated) res.params = param_search(res.v, res.a);
    return res;
}

namespace {

std::vector<ReportEntry> run_exact_points(const SubgroupCase& c,
                                          const std::vector<PrimePower>& points) {
    std::vector<ReportEntry> out;
    for (const PrimePower& u : points) {
        PrimePower q = scaled_q(c, u);
        ExactOutcome res = exact_stage(c, u);
        ReportEntry e = base_entry(c, res.eliminated ? "exact-gcd" : "param-search");
        e.q = q.q;
        e.a = res.a;
        if (res.eliminated) {
            e.verdict = kEliminated;
        } else if (res.params.empty()) {
            e.verdict = kEliminated;
        } else {
            e.verdict = kSurvivor;
            e.params = res.params;
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<ReportEntry> run_case(const SubgroupCase& c, unsigned long q_max) {
    std::vector<ReportEntry> out;
    if (c.route_special) {
        ReportEntry e = base_entry(c, "symbolic-bound");
        e.verdict = kRoutedSpecial;
        e.annotations.push_back("closed-by-special-module");
        out.push_back(std::move(e));
        return out;
    }
    if (c.is_numeric()) {
        std::vector<PrimePower> points;
        for (unsigned long q : c.fixed_q) {
            auto pp = as_prime_power(q);
            if (!pp) throw std::logic_error("bad fixed q in " + c.id);
            points.push_back(*pp);
        }
        return run_exact_points(c, points);
    }
    BoundCertificate cert = bound_stage(c);
    ReportEntry sym = base_entry(c, "symbolic-bound");
    sym.h = cert.h.str();
    sym.c = cert.c;
    if (!cert.dominance) {
        sym.verdict = kUnresolved;
        sym.annotations.push_back("degree-dominance-failed");
        out.push_back(std::move(sym));
        return out;
    }
    std::vector<PrimePower> feas = q_feasible(c, cert, q_max);
    sym.verdict = kEliminated;
    sym.annotations.push_back(feas.empty() ? "feasible-q:none"
                                           : "feasible-q:" + join_q(feas, c.scale));
    out.push_back(std::move(sym));
    auto rest = run_exact_points(c, feas);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

namespace {

// Generic parabolic route: a unique p-power subdegree d exists, and
// (v-1, d) <= (v-1)_p <= 2q, so v <= 18*(2q)^2 = 72 q^2.  Index
// polynomials have nonnegative coefficients and degree >= 3, hence
// v(q) >= q^3 > 72 q^2 for every q > 72: the scan below is complete.
std::vector<ReportEntry> run_parabolic_generic(const ParabolicCase& c, unsigned long q_max) {
    std::vector<ReportEntry> out;
    ReportEntry sym = base_entry(c, "symbolic-bound");
    sym.verdict = kEliminated;
    if (c.index_poly.degree() < 3)
        throw std::logic_error("parabolic index degree < 3 in " + c.id);
    std::vector<PrimePower> feas;
    for (const PrimePower& q : prime_powers({}, std::min<unsigned long>(72, q_max))) {
        if (!valid_q(c.family, q)) continue;
        Int v = c.index_poly(q.value());
        if (v <= 72 * q.value() * q.value()) feas.push_back(q);
    }
    sym.annotations.push_back("p-power-subdegree-bound:v<=72q^2");
    sym.annotations.push_back(feas.empty() ? "feasible-q:none" : "feasible-q:" + join_q(feas, 1));
    out.push_back(std::move(sym));
    for (const PrimePower& q : feas) {
        Int v = c.index_poly(q.value());
        Int dcap = p_part(v - 1, q.p);
        if (q.p == 2) dcap *= 2;  // (v-1)_p = 2q is possible only for p = 2
        auto params = param_search(v, dcap);
        ReportEntry e = base_entry(c, "param-search");
        e.q = q.q;
        e.a = dcap;
        if (params.empty()) {
            e.verdict = kEliminated;
        } else {
            e.verdict = kSurvivor;
            e.params = params;
        }
        out.push_back(std::move(e));
    }
    return out;
}

// E6 P1/P6: rank-3 action; r/(r,lambda) divides (v-1, d1).
std::vector<ReportEntry> run_parabolic_e6node1(const ParabolicCase& c, unsigned long q_max) {
    std::vector<ReportEntry> out;
    IntPoly d1 = e6_node1_subdegree(1);
    BoundCertificate cert = bound_stage_pair(RatPoly(c.index_poly), d1);
    ReportEntry sym = base_entry(c, "symbolic-bound");
    sym.h = cert.h.str();
    sym.c = cert.c;
    sym.annotations.push_back("rank-3-subdegree-d1");
    if (!cert.dominance) {
        sym.verdict = kUnresolved;
        sym.annotations.push_back("degree-dominance-failed");
        out.push_back(std::move(sym));
        return out;
    }
    std::vector<PrimePower> feas;
    for (const PrimePower& q : prime_powers({}, q_max)) {
        Int v = c.index_poly(q.value());
        Int bound = cert.c * cert.h(q.value());
        if (v <= kYFactor * bound * bound) feas.push_back(q);
    }
    sym.verdict = kEliminated;
    sym.annotations.push_back(feas.empty() ? "feasible-q:none" : "feasible-q:" + join_q(feas, 1));
    out.push_back(std::move(sym));
    for (const PrimePower& q : feas) {
        Int v = c.index_poly(q.value());
        Int a = igcd(v - 1, d1(q.value()));
        ReportEntry e = base_entry(c, "exact-gcd");
        e.q = q.q;
        e.a = a;
        if (v > kYFactor * a * a) {
            e.verdict = kEliminated;
        } else {
            auto params = param_search(v, a);
            e.stage = "param-search";
            if (params.empty()) {
                e.verdict = kEliminated;
            } else {
                e.verdict = kSurvivor;
                e.params = params;
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

// E6 P3/P5: extended-gcd route on (v-1, |X_alpha| * |Out|), exactly as in
// the non-parabolic sweep.
std::vector<ReportEntry> run_parabolic_e6node3(const ParabolicCase& c, unsigned long q_max) {
    std::vector<ReportEntry> out;
    BoundCertificate cert = bound_stage_pair(RatPoly(c.index_poly), c.stab_order_poly);
    ReportEntry sym = base_entry(c, "symbolic-bound");
    sym.h = cert.h.str();
    sym.c = cert.c;
    if (!cert.dominance) {
        sym.verdict = kUnresolved;
        sym.annotations.push_back("degree-dominance-failed");
        out.push_back(std::move(sym));
        return out;
    }
    std::vector<PrimePower> feas;
    for (const PrimePower& q : prime_powers({}, q_max)) {
        if (!valid_q(c.family, q)) continue;
        Int v = c.index_poly(q.value());
        Int bound = cert.c * cert.h(q.value()) * out_order(c.family, q);
        if (v <= kYFactor * bound * bound) feas.push_back(q);
    }
    sym.verdict = kEliminated;
    sym.annotations.push_back(feas.empty() ? "feasible-q:none" : "feasible-q:" + join_q(feas, 1));
    out.push_back(std::move(sym));
    for (const PrimePower& q : feas) {
        Int v = c.index_poly(q.value());
        Int a = igcd(v - 1, c.stab_order_poly(q.value()) * out_order(c.family, q));
        ReportEntry e = base_entry(c, "exact-gcd");
        e.q = q.q;
        e.a = a;
        if (v > kYFactor * a * a) {
            e.verdict = kEliminated;
        } else {
            auto params = param_search(v, a);
            e.stage = "param-search";
            if (params.empty()) {
                e.verdict = kEliminated;
            } else {
                e.verdict = kSurvivor;
                e.params = params;
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

std::vector<ReportEntry> run_parabolic(const ParabolicCase& c, unsigned long q_max) {
    switch (c.route) {
        case ParabolicCase::Route::Special: {
            ReportEntry e = base_entry(c, "symbolic-bound");
            e.verdict = kRoutedSpecial;
            e.annotations.push_back("closed-by-special-module");
            return {std::move(e)};
        }
        case ParabolicCase::Route::E6Node1:
            return run_parabolic_e6node1(c, q_max);
        case ParabolicCase::Route::E6Node3:
            return run_parabolic_e6node3(c, q_max);
        case ParabolicCase::Route::Generic:
            return run_parabolic_generic(c, q_max);
    }
    throw std::logic_error("run_parabolic: bad route");
}

EliminationReport run_all(unsigned long q_max, unsigned workers) {
    const auto& nonpar = nonparabolic_cases();
    const auto& par = parabolic_cases();

    // Fixed task list; results land in pre-sized slots, so the merged
    // report is independent of scheduling.
    std::size_t total = nonpar.size() + par.size() + 4;
    std::vector<std::vector<ReportEntry>> slots(total);
    auto task = [&](std::size_t i) {
        if (i < nonpar.size()) {
            slots[i] = run_case(nonpar[i], q_max);
        } else if (i < nonpar.size() + par.size()) {
            slots[i] = run_parabolic(par[i - nonpar.size()], q_max);
        } else {
            switch (i - nonpar.size() - par.size()) {
                case 0: slots[i] = g2_a2_check(+1, q_max); break;
                case 1: slots[i] = g2_a2_check(-1, q_max); break;
                case 2: slots[i] = suzuki_check(kSuzukiScanCap); break;
                case 3: slots[i] = ree_check(kReeScanCap); break;
            }
        }
    };

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, 8);
    if (workers <= 1) {
        for (std::size_t i = 0; i < total; ++i) task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= total) return;
                    task(i);
                }
            });
        for (auto& t : pool) t.join();
    }

    EliminationReport rep;
    for (auto& s : slots)
        for (auto& e : s) rep.entries.push_back(std::move(e));
    rep.sort_entries();
    return rep;
}

}  // namespace qsd
