#pragma once

#include <array>
#include <string>
#include <variant>

#include "greymadm/scale.hpp"

namespace greymadm {

/// Closed subinterval of [0, 1] carrying a grey degree. The default [1, 1]
/// is what missing grey information degrades to.
struct GreyInterval {
    double lo = 1.0;
    double hi = 1.0;

    GreyInterval() = default;
    GreyInterval(double lo, double hi);

    friend bool operator==(const GreyInterval&, const GreyInterval&) = default;
};

/// Componentwise product [g.lo * h.lo, g.hi * h.hi]; stays inside [0, 1].
GreyInterval grey_product(const GreyInterval& g, const GreyInterval& h);

enum class ValueKind { real, interval, linguistic, uncertain };

/// Ordered 4-tuple embedding of every supported attribute value type:
///   real r                -> (r, r, r, r)
///   interval [l, u]       -> (l, l, u, u)
///   linguistic (l, m, u)  -> (l, m, m, u)
///   uncertain span        -> trapezoid (l1, m1, m2, u2)
struct GeneralizedValue {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
    ValueKind kind = ValueKind::real;

    static GeneralizedValue from_real(double r);
    static GeneralizedValue from_interval(double lo, double hi);

    /// Classifies kind from the equality pattern; throws on a1..a4 disorder.
    static GeneralizedValue from_components(double a1, double a2, double a3, double a4);

    /// Sorts the components first. Used where a computation can scramble
    /// the middle pair and the ordering invariant must be re-enforced.
    static GeneralizedValue from_unsorted(double a1, double a2, double a3, double a4);

    std::array<double, 4> components() const { return {a1, a2, a3, a4}; }

    friend bool operator==(const GeneralizedValue&, const GeneralizedValue&) = default;
};

/// 4-D Euclidean distance sqrt(sum_k (b_k - a_k)^2).
double distance(const GeneralizedValue& a, const GeneralizedValue& b);

// Tagged source values as they appear in input documents.
struct RealValue {
    double value = 0.0;
    friend bool operator==(const RealValue&, const RealValue&) = default;
};
struct IntervalValue {
    double lo = 0.0;
    double hi = 0.0;
    friend bool operator==(const IntervalValue&, const IntervalValue&) = default;
};
struct LinguisticValue {
    std::string term;
    friend bool operator==(const LinguisticValue&, const LinguisticValue&) = default;
};
struct UncertainValue {
    std::string lower;
    std::string upper;
    friend bool operator==(const UncertainValue&, const UncertainValue&) = default;
};

using RawValue = std::variant<RealValue, IntervalValue, LinguisticValue, UncertainValue>;

/// Canonical 4-tuple for a tagged source value. Linguistic labels resolve
/// through the scale's alias table. Throws ValidationError on interval or
/// span order violations and unknown terms.
GeneralizedValue to_generalized(const RawValue& raw, const LinguisticScale& scale);

/// One decision-matrix entry: a fuzzy 4-tuple plus its grey degree.
struct GreyFuzzyCell {
    GeneralizedValue value;
    GreyInterval grey;

    friend bool operator==(const GreyFuzzyCell&, const GreyFuzzyCell&) = default;
};

} // namespace greymadm
