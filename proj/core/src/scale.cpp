#include "greymadm/scale.hpp"

#include <algorithm>
#include <cctype>

#include "greymadm/errors.hpp"

namespace greymadm {

namespace {

std::string normalize_label(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

} // namespace

LinguisticScale::LinguisticScale(std::vector<std::string> terms,
                                 std::vector<Triangle> triangles,
                                 std::map<std::string, std::string> aliases)
    : terms_(std::move(terms)), triangles_(std::move(triangles)) {
    if (terms_.size() != 11 || triangles_.size() != 11) {
        throw ValidationError("linguistic scale must have exactly 11 terms");
    }
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Triangle& t = triangles_[i];
        if (!(0.0 <= t.lo && t.lo <= t.mid && t.mid <= t.hi && t.hi <= 1.0)) {
            throw ValidationError("scale triangle out of order for term '" + terms_[i] + "'");
        }
        index_.emplace(terms_[i], i);
    }
    for (const auto& [alias, target] : aliases) {
        auto it = index_.find(target);
        if (it == index_.end()) {
            throw ValidationError("alias '" + alias + "' targets unknown term '" + target + "'");
        }
        index_.emplace(alias, it->second);
    }
}

const LinguisticScale& LinguisticScale::standard() {
    static const LinguisticScale scale(
        {"extremely low", "very low", "low", "comparatively low", "a little low",
         "general", "a little high", "comparatively high", "high", "very high",
         "extremely high"},
        {{0.0, 0.0, 0.1},
         {0.0, 0.1, 0.2},
         {0.1, 0.2, 0.3},
         {0.2, 0.3, 0.4},
         {0.3, 0.4, 0.5},
         {0.4, 0.5, 0.6},
         {0.5, 0.6, 0.7},
         {0.6, 0.7, 0.8},
         {0.7, 0.8, 0.9},
         {0.8, 0.9, 1.0},
         {0.9, 1.0, 1.0}},
        // Alternate spellings that appear in source documents.
        {{"ordinary", "general"},
         {"rather low", "comparatively low"},
         {"rather high", "comparatively high"},
         {"rery low", "very low"},
         {"rery high", "very high"}});
    return scale;
}

std::size_t LinguisticScale::resolve(std::string_view term) const {
    auto it = index_.find(normalize_label(term));
    if (it == index_.end()) {
        throw ValidationError("unknown linguistic term '" + std::string(term) + "'");
    }
    return it->second;
}

const Triangle& LinguisticScale::lookup(std::string_view term) const {
    return triangles_[resolve(term)];
}

const std::string& LinguisticScale::canonical(std::string_view term) const {
    return terms_[resolve(term)];
}

std::size_t LinguisticScale::index_of(std::string_view term) const {
    return resolve(term);
}

} // namespace greymadm
