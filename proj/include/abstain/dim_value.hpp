#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace abstain {

// Extended integer in {-inf} ∪ {0,1,2,...}.
class DimValue {
public:
    constexpr DimValue() = default;  // -inf
    constexpr explicit DimValue(int v) : v_(v) {
        if (v < 0) throw std::invalid_argument("negative dimension value");
    }
    static constexpr DimValue neg_inf() { return DimValue(); }

    constexpr bool is_neg_inf() const noexcept { return !v_.has_value(); }
    constexpr int value() const {
        if (!v_) throw std::logic_error("value() on -inf");
        return *v_;
    }
    // 1 + v, with 1 + (-inf) = -inf.
    constexpr DimValue succ() const { return v_ ? DimValue(*v_ + 1) : DimValue(); }

    friend constexpr bool operator==(const DimValue&, const DimValue&) = default;
    friend constexpr std::strong_ordering operator<=>(const DimValue& a, const DimValue& b) {
        if (!a.v_ || !b.v_) return a.v_.has_value() <=> b.v_.has_value();
        return *a.v_ <=> *b.v_;
    }
    friend constexpr bool operator==(const DimValue& a, int b) { return a.v_ && *a.v_ == b; }

    std::string to_string() const { return v_ ? std::to_string(*v_) : "-inf"; }

private:
    std::optional<int> v_;
};

}  // namespace abstain
