#pragma once

#include <string>
#include <string_view>

namespace mccool {

/// Which basis-conjugating group: all c[k,i] (full) or only i < k (plus).
enum class Variant { full, plus };

inline std::string to_string(Variant v) { return v == Variant::plus ? "plus" : "full"; }
Variant parse_variant(std::string_view text);

}  // namespace mccool
