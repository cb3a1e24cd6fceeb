#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace odcode {

enum class CodeKind { OD, OTD, ID, ITD, LD, LTD };

enum class Domination { Closed, Open };
enum class Separation { Open, Closed, Locating };

inline constexpr std::array<CodeKind, 6> kAllKinds = {CodeKind::OD, CodeKind::OTD, CodeKind::ID,
                                                      CodeKind::ITD, CodeKind::LD, CodeKind::LTD};

constexpr Domination domination(CodeKind k) {
  switch (k) {
    case CodeKind::OD:
    case CodeKind::ID:
    case CodeKind::LD:
      return Domination::Closed;
    default:
      return Domination::Open;
  }
}

constexpr Separation separation(CodeKind k) {
  switch (k) {
    case CodeKind::OD:
    case CodeKind::OTD:
      return Separation::Open;
    case CodeKind::ID:
    case CodeKind::ITD:
      return Separation::Closed;
    default:
      return Separation::Locating;
  }
}

std::string_view to_string(CodeKind k);
// Case-insensitive; returns nullopt on unknown tags.
std::optional<CodeKind> parse_kind(std::string_view tag);

}  // namespace odcode
