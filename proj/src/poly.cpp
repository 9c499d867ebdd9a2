#include "qsd/poly.hpp"

#include <sstream>

namespace qsd {

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(const Int& constant) {
    if (constant != 0) c_.push_back(constant);
}

IntPoly IntPoly::q() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(Int c, int deg) {
    if (c == 0) return {};
    std::vector<Int> v(static_cast<std::size_t>(deg) + 1, Int(0));
    v.back() = std::move(c);
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int deg) const {
    static const Int zero(0);
    if (deg < 0 || deg >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(deg)];
}

const Int& IntPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading(): zero polynomial");
    return c_.back();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<Int> r = a.c_;
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r(Int(1));
    IntPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

IntPoly IntPoly::compose_power(unsigned s) const {
    if (s == 0) throw std::domain_error("compose_power: s must be >= 1");
    if (s == 1 || is_zero()) return *this;
    std::vector<Int> r((c_.size() - 1) * s + 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * s] = c_[i];
    return IntPoly(std::move(r));
}

Int IntPoly::operator()(const Int& x) const {
    Int acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& v : c_) g = igcd(g, v);
    return g;
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

RatPoly RatPoly::q() { return RatPoly(IntPoly::q()); }

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::coeff(int deg) const {
    static const Rat zero(0);
    if (deg < 0 || deg >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(deg)];
}

const Rat& RatPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading(): zero polynomial");
    return c_.back();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a) {
    std::vector<Rat> r = a.c_;
    for (auto& v : r) v = -v;
    return RatPoly(std::move(r));
}

RatPoly operator*(const Rat& a, const RatPoly& b) {
    if (a == 0) return {};
    std::vector<Rat> r = b.c_;
    for (auto& v : r) v *= a;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly r(Rat(1));
    RatPoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RatPoly RatPoly::compose_power(unsigned s) const {
    if (s == 0) throw std::domain_error("compose_power: s must be >= 1");
    if (s == 1 || is_zero()) return *this;
    std::vector<Rat> r((c_.size() - 1) * s + 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * s] = c_[i];
    return RatPoly(std::move(r));
}

Rat RatPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int RatPoly::denominator_lcm() const {
    Int l(1);
    for (const auto& v : c_) l = ilcm(l, v.get_den());
    return l;
}

bool RatPoly::is_integral() const {
    for (const auto& v : c_)
        if (v.get_den() != 1) return false;
    return true;
}

IntPoly RatPoly::to_int() const {
    std::vector<Int> r;
    r.reserve(c_.size());
    for (const auto& v : c_) {
        if (v.get_den() != 1) throw std::domain_error("to_int(): non-integer coefficient");
        r.push_back(v.get_num());
    }
    return IntPoly(std::move(r));
}

// ------------------------------------------------------------- division

std::pair<RatPoly, RatPoly> divrem(const RatPoly& num, const RatPoly& den) {
    if (den.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    std::vector<Rat> r(num.coeffs());
    int dn = static_cast<int>(r.size()) - 1;
    int dd = den.degree();
    if (dn < dd) return {RatPoly(), num};
    std::vector<Rat> qout(static_cast<std::size_t>(dn - dd) + 1, Rat(0));
    const Rat& lead = den.leading();
    for (int k = dn - dd; k >= 0; --k) {
        Rat coef = r[static_cast<std::size_t>(k + dd)] / lead;
        if (coef != 0) {
            qout[static_cast<std::size_t>(k)] = coef;
            for (int j = 0; j <= dd; ++j)
                r[static_cast<std::size_t>(k + j)] -= coef * den.coeff(j);
        }
    }
    return {RatPoly(std::move(qout)), RatPoly(std::move(r))};
}

RatPoly exact_div(const RatPoly& num, const RatPoly& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero()) throw std::domain_error("exact_div: inexact polynomial division");
    return q;
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
    return exact_div(RatPoly(num), RatPoly(den)).to_int();
}

Int eval_int(const RatPoly& p, const Int& x) {
    Rat v = p(Rat(x));
    if (v.get_den() != 1) throw std::domain_error("eval_int: value is not an integer");
    return v.get_num();
}

// ------------------------------------------------------------- printing

namespace {

void append_term(std::ostringstream& os, const std::string& coef, bool neg, int deg, bool first) {
    if (first) {
        if (neg) os << '-';
    } else {
        os << (neg ? '-' : '+');
    }
    bool unit = (coef == "1");
    if (deg == 0) {
        os << coef;
    } else {
        if (!unit) os << coef << '*';
        os << 'q';
        if (deg > 1) os << '^' << deg;
    }
}

}  // namespace

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Int& v = coeff(d);
        if (v == 0) continue;
        Int a = abs(v);
        append_term(os, a.get_str(), v < 0, d, first);
        first = false;
    }
    return os.str();
}

std::string RatPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rat& v = coeff(d);
        if (v == 0) continue;
        Rat a = abs(v);
        append_term(os, a.get_str(), v < 0, d, first);
        first = false;
    }
    return os.str();
}

}  // namespace qsd
