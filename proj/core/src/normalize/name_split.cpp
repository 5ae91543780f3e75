#include "sesforge/normalize/name_split.hpp"

namespace sesforge::normalize {

bool is_context_tag(std::string_view s) noexcept {
    if (s.size() < 5) return false;
    const std::size_t letters = s.size() - 4;
    for (std::size_t i = 0; i < letters; ++i) {
        const char c = s[i];
        if (!((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'))) return false;
    }
    for (std::size_t i = letters; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
}

NameSplit split_name(std::string_view local_name) {
    const auto us = local_name.rfind('_');
    if (us != std::string_view::npos && us > 0) {
        const auto tail = local_name.substr(us + 1);
        if (is_context_tag(tail)) {
            return {std::string(local_name.substr(0, us)), std::string(tail)};
        }
    }
    return {std::string(local_name), std::nullopt};
}

} // namespace sesforge::normalize
