#include "greymadm/value.hpp"

#include <algorithm>
#include <cmath>

#include "greymadm/errors.hpp"

namespace greymadm {

GreyInterval::GreyInterval(double lo, double hi) : lo(lo), hi(hi) {
    if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
        throw ValidationError("grey interval [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "] must satisfy 0 <= lo <= hi <= 1");
    }
}

GreyInterval grey_product(const GreyInterval& g, const GreyInterval& h) {
    return GreyInterval(g.lo * h.lo, g.hi * h.hi);
}

namespace {

ValueKind classify(double a1, double a2, double a3, double a4) {
    if (a1 == a2 && a2 == a3 && a3 == a4) return ValueKind::real;
    if (a1 == a2 && a3 == a4) return ValueKind::interval;
    if (a2 == a3) return ValueKind::linguistic;
    return ValueKind::uncertain;
}

} // namespace

GeneralizedValue GeneralizedValue::from_real(double r) {
    return {r, r, r, r, ValueKind::real};
}

GeneralizedValue GeneralizedValue::from_interval(double lo, double hi) {
    if (lo > hi) {
        throw ValidationError("interval [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "] has lo > hi");
    }
    return {lo, lo, hi, hi, classify(lo, lo, hi, hi)};
}

GeneralizedValue GeneralizedValue::from_components(double a1, double a2, double a3, double a4) {
    if (!(a1 <= a2 && a2 <= a3 && a3 <= a4)) {
        throw ValidationError("generalized value components out of order");
    }
    return {a1, a2, a3, a4, classify(a1, a2, a3, a4)};
}

GeneralizedValue GeneralizedValue::from_unsorted(double a1, double a2, double a3, double a4) {
    std::array<double, 4> c{a1, a2, a3, a4};
    std::sort(c.begin(), c.end());
    return {c[0], c[1], c[2], c[3], classify(c[0], c[1], c[2], c[3])};
}

double distance(const GeneralizedValue& a, const GeneralizedValue& b) {
    const double d1 = b.a1 - a.a1;
    const double d2 = b.a2 - a.a2;
    const double d3 = b.a3 - a.a3;
    const double d4 = b.a4 - a.a4;
    return std::sqrt(d1 * d1 + d2 * d2 + d3 * d3 + d4 * d4);
}

GeneralizedValue to_generalized(const RawValue& raw, const LinguisticScale& scale) {
    return std::visit(
        [&scale](const auto& v) -> GeneralizedValue {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, RealValue>) {
                return GeneralizedValue::from_real(v.value);
            } else if constexpr (std::is_same_v<T, IntervalValue>) {
                return GeneralizedValue::from_interval(v.lo, v.hi);
            } else if constexpr (std::is_same_v<T, LinguisticValue>) {
                const Triangle& t = scale.lookup(v.term);
                return {t.lo, t.mid, t.mid, t.hi, ValueKind::linguistic};
            } else {
                if (scale.index_of(v.lower) > scale.index_of(v.upper)) {
                    throw ValidationError("uncertain span ['" + v.lower + "', '" + v.upper +
                                          "'] has lower term above upper term");
                }
                const Triangle& lo = scale.lookup(v.lower);
                const Triangle& hi = scale.lookup(v.upper);
                return GeneralizedValue::from_components(lo.lo, lo.mid, hi.mid, hi.hi);
            }
        },
        raw);
}

} // namespace greymadm
