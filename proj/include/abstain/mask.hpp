#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace abstain {

// Fixed-width bitset over hypothesis indices. Bits past size() are always zero.
class Mask {
public:
    Mask() = default;
    explicit Mask(std::size_t size, bool filled = false);

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const;
    void set(std::size_t i, bool value = true);

    std::size_t count() const noexcept;
    bool none() const noexcept;
    std::optional<std::size_t> first() const noexcept;
    std::vector<std::size_t> indices() const;

    Mask& operator&=(const Mask& o);
    Mask& operator|=(const Mask& o);
    friend Mask operator&(Mask a, const Mask& b) { return a &= b; }
    friend Mask operator|(Mask a, const Mask& b) { return a |= b; }
    // this & ~o
    Mask without(const Mask& o) const;

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::size_t hash() const noexcept;
    friend bool operator==(const Mask& a, const Mask& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

private:
    std::size_t size_ = 0;
    boost::container::small_vector<std::uint64_t, 4> words_;
};

}  // namespace abstain

template <>
struct std::hash<abstain::Mask> {
    std::size_t operator()(const abstain::Mask& m) const noexcept { return m.hash(); }
};
