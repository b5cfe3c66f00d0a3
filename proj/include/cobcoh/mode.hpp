#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace cobcoh {

/// Language variant. SMCB has `-o` and whiskering; CCB replaces them with a
/// unary dual and the unit/counit eta_a, eps_a; DCCB adds the dagger.
enum class Mode { Smcb, Ccb, Dccb };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

inline bool is_compact(Mode mode) { return mode != Mode::Smcb; }

}  // namespace cobcoh
