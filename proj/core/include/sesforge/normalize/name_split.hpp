#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace sesforge::normalize {

// A node name split into its context-free base and its author-year context tag.
// When context is present, original == base + "_" + *context.
struct NameSplit {
    std::string base;
    std::optional<std::string> context;

    friend bool operator==(const NameSplit&, const NameSplit&) = default;
};

// [A-Za-z]+[0-9]{4}, e.g. Ostrom2009, Cox2014, McGinnisOstrom2014.
bool is_context_tag(std::string_view s) noexcept;

// "RS9_Location_Ostrom2007" -> {"RS9_Location", "Ostrom2007"}; "Water" -> {"Water"}.
NameSplit split_name(std::string_view local_name);

} // namespace sesforge::normalize
