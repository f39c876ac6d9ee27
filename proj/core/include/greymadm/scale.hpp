#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace greymadm {

/// Triangular fuzzy number (lo, mid, hi) on [0, 1].
struct Triangle {
    double lo = 0.0;
    double mid = 0.0;
    double hi = 0.0;
};

/// The 11-point ordered linguistic scale, each term backed by a triangular
/// fuzzy number on [0, 1]. Alternate spellings seen in input documents
/// ("rather high", "ordinary", "rery high") resolve to canonical terms.
class LinguisticScale {
public:
    /// The standard 11-term scale from "extremely low" to "extremely high".
    static const LinguisticScale& standard();

    /// Triangle for a term or registered alias. Throws ValidationError
    /// naming the label if it is unknown.
    const Triangle& lookup(std::string_view term) const;

    /// Canonical spelling for a term or alias.
    const std::string& canonical(std::string_view term) const;

    /// Position on the ordered scale, 0 = lowest term.
    std::size_t index_of(std::string_view term) const;

    const std::vector<std::string>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

private:
    LinguisticScale(std::vector<std::string> terms,
                    std::vector<Triangle> triangles,
                    std::map<std::string, std::string> aliases);

    std::size_t resolve(std::string_view term) const;

    std::vector<std::string> terms_;
    std::vector<Triangle> triangles_;
    std::map<std::string, std::size_t> index_; // canonical terms and aliases
};

} // namespace greymadm
