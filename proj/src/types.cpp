#include "abstain/types.hpp"

namespace abstain {

std::string_view to_string(Label y) noexcept {
    return y == Label::plus ? "+1" : "-1";
}

std::string_view to_string(Prediction p) noexcept {
    switch (p) {
        case Prediction::plus: return "+1";
        case Prediction::minus: return "-1";
        case Prediction::abstain: break;
    }
    return "abstain";
}

std::optional<Label> parse_label(std::string_view s) noexcept {
    if (s == "+1" || s == "1") return Label::plus;
    if (s == "-1" || s == "\xE2\x88\x92" "1") return Label::minus;
    return std::nullopt;
}

}  // namespace abstain
