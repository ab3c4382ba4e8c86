#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace abstain {

enum class Label : std::int8_t { minus = -1, plus = 1 };

constexpr Label operator-(Label y) noexcept {
    return y == Label::plus ? Label::minus : Label::plus;
}

constexpr int to_int(Label y) noexcept { return static_cast<int>(y); }

// A prediction is a label or an abstention.
enum class Prediction : std::int8_t { minus = -1, abstain = 0, plus = 1 };

constexpr Prediction predict(Label y) noexcept {
    return y == Label::plus ? Prediction::plus : Prediction::minus;
}

constexpr std::optional<Label> as_label(Prediction p) noexcept {
    if (p == Prediction::plus) return Label::plus;
    if (p == Prediction::minus) return Label::minus;
    return std::nullopt;
}

std::string_view to_string(Label y) noexcept;
std::string_view to_string(Prediction p) noexcept;

// Accepts "+1", "1", "-1" and the unicode minus form.
std::optional<Label> parse_label(std::string_view s) noexcept;

}  // namespace abstain
