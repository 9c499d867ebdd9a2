#include "qsd/design.hpp"

#include <algorithm>

namespace qsd {

bool design_invariants_hold(const DesignParams& d) {
    const Int &v = d.v, &b = d.b, &r = d.r, &k = d.k, &l = d.lambda;
    Int y(d.y);
    if (d.y < 2 || d.y > 10) return false;
    if (!(v > 0 && b > 0 && r > 0 && k > 0 && l > 0)) return false;
    if (!(2 < k && k < v - 1)) return false;
    if (r * (k - 1) != l * (v - 1)) return false;
    if (v * r != b * k) return false;
    if (!(b > v && k < r)) return false;
    if ((y - 1) * (r - 1) != (k - 1) * (l - 1)) return false;
    if (k % y != 0) return false;
    if ((r - l) % y != 0) return false;
    if (!(y < l && l <= k - 1)) return false;
    if (!(v * (y - 1) < k * k - k)) return false;
    if (r > v - 1) return false;
    if (b * k > v * (v - 1)) return false;
    return true;
}

namespace {

void try_candidate(const Int& v, int y, const Int& rp, const Int& lp,
                   std::vector<DesignParams>& out) {
    // k from r'(k-1) = l'(v-1)
    Int num = lp * (v - 1);
    if (num % rp != 0) return;
    Int k = num / rp + 1;
    if (!(2 < k && k < v - 1)) return;
    if (k % y != 0) return;
    // g = (r,lambda) from (y-1)(r-1) = (k-1)(lambda-1)
    Int den = (k - 1) * lp - Int(y - 1) * rp;
    if (den <= 0) return;
    Int gnum = k - y;
    if (gnum <= 0 || gnum % den != 0) return;
    Int g = gnum / den;
    DesignParams d;
    d.v = v;
    d.y = y;
    d.r = g * rp;
    d.lambda = g * lp;
    d.k = k;
    Int bk = v * d.r;
    if (bk % k != 0) return;
    d.b = bk / k;
    if (design_invariants_hold(d)) out.push_back(d);
}

}  // namespace

std::vector<DesignParams> param_search(const Int& v, const std::vector<int>& y_set,
                                       const std::optional<Int>& r_divisor) {
    std::vector<DesignParams> out;
    if (v < 5) return out;
    Int vm1 = v - 1;
    Int dcap = r_divisor ? igcd(vm1, *r_divisor) : vm1;
    std::vector<Int> rdivs = divisors(dcap);
    for (int y : y_set) {
        Int ym1(y - 1);
        for (const Int& rp : rdivs) {
            if (rp < 2) continue;  // r' = 1 means r | lambda, impossible with r > lambda
            // window (y-1) r'^2 / l'^2 < v-1 < 2 (y-1) r'^2 / l'^2
            Int rp2 = rp * rp;
            Int lo2 = ym1 * rp2 / vm1;            // l'^2 > lo2
            Int hi2 = 2 * ym1 * rp2 / vm1 + 1;    // l'^2 < 2(y-1)r'^2/(v-1)
            Int llo = isqrt(lo2);
            Int lhi = isqrt(hi2) + 2;
            if (llo < 1) llo = 1;
            for (Int lp = llo; lp <= lhi; ++lp) {
                if (lp >= rp) break;  // lambda < r
                if (igcd(lp, rp) != 1) continue;
                // exact two-sided test, avoiding the sqrt roundoff
                if (!(ym1 * rp2 < vm1 * lp * lp)) continue;
                if (!(vm1 * lp * lp < 2 * ym1 * rp2)) continue;
                try_candidate(v, y, rp, lp, out);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const DesignParams& a, const DesignParams& b) {
        if (a.y != b.y) return a.y < b.y;
        if (a.k != b.k) return a.k < b.k;
        return a.r < b.r;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<DesignParams> param_search(const Int& v, const std::optional<Int>& r_divisor) {
    return param_search(v, {2, 3, 4, 5, 6, 7, 8, 9, 10}, r_divisor);
}

}  // namespace qsd
