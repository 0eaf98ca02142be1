#include "pinlab/profile.hpp"

#include <algorithm>
#include <string>

namespace pinlab {

ComplexityProfile::ComplexityProfile(std::vector<int> increments, int slope_cap)
    : inc_(std::move(increments)), cap_(slope_cap) {
    if (cap_ < 1) throw DomainError("slope_cap must be positive");
    if (inc_.empty()) throw DomainError("profile horizon must be positive");
    sums_.resize(inc_.size() + 1, 0);
    for (std::size_t i = 0; i < inc_.size(); ++i) {
        if (inc_[i] < 0 || inc_[i] > cap_)
            throw DomainError("increment " + std::to_string(i + 1) + " = " + std::to_string(inc_[i]) +
                              " outside [0, " + std::to_string(cap_) + "]");
        sums_[i + 1] = sums_[i] + inc_[i];
    }
}

Rational ComplexityProfile::eval(const Rational& a) const {
    if (a < 0 || a > horizon()) throw DomainError("eval at " + a.str() + " outside [0, " + std::to_string(horizon()) + "]");
    const auto fl = a.floor();
    if (a.is_integer()) return Rational(at(static_cast<int>(fl)));
    const int k = static_cast<int>(fl);
    return Rational(at(k)) + (a - k) * delta(k + 1);
}

Rational ComplexityProfile::excess(const Rational& a) const { return eval(a) - a; }

ComplexityProfile ComplexityProfile::prefix(int r) const {
    if (r < 1 || r > horizon()) throw DomainError("prefix length " + std::to_string(r) + " outside [1, horizon]");
    return ComplexityProfile(std::vector<int>(inc_.begin(), inc_.begin() + r), cap_);
}

Interval::Interval(Rational lo_, Rational hi_) : lo(lo_), hi(hi_) {
    if (!(lo < hi)) throw DomainError("empty interval [" + lo.str() + ", " + hi.str() + "]");
}

ColorSet classify(const ComplexityProfile& profile, const Interval& iv, const Rational& t) {
    if (iv.lo < 0 || iv.hi > profile.horizon()) throw DomainError("interval outside [0, horizon]");
    if (t <= 0) throw DomainError("t must be positive");

    const Rational glo = profile.excess(iv.lo);
    const Rational ghi = profile.excess(iv.hi);
    ColorSet c;
    c.yellow = ghi >= glo;
    c.teal = glo >= ghi;
    for (std::int64_t k = iv.lo.floor() + 1; k < iv.hi; ++k) {
        const Rational gk(profile.excess_at(static_cast<int>(k)));
        if (gk < glo) c.yellow = false;
        if (gk < ghi) c.teal = false;
    }

    c.red = true;
    c.blue = true;
    // unit segments [k-1, k] whose interior meets (lo, hi)
    const auto first = iv.lo.floor() + 1;
    const auto last = iv.hi.ceil();
    for (std::int64_t k = first; k <= last; ++k) {
        const int dk = profile.delta(static_cast<int>(k));
        if (dk < 2) c.red = false;
        if (dk != 0) c.blue = false;
    }
    c.green = c.yellow && c.teal && iv.length() <= t;
    return c;
}

bool has_dim_at_least(const ComplexityProfile& profile, const Rational& d, int s0) {
    for (int s = std::max(s0, 0); s <= profile.horizon(); ++s)
        if (Rational(profile.at(s)) < d * s) return false;
    return true;
}

}  // namespace pinlab
