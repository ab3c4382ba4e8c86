#include "abstain/mask.hpp"

#include <stdexcept>

namespace abstain {

Mask::Mask(std::size_t size, bool filled) : size_(size), words_((size + 63) / 64, 0) {
    if (!filled) return;
    for (auto& w : words_) w = ~std::uint64_t{0};
    if (size % 64 != 0) words_.back() = (std::uint64_t{1} << (size % 64)) - 1;
}

bool Mask::test(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("mask index out of range");
    return (words_[i / 64] >> (i % 64)) & 1u;
}

void Mask::set(std::size_t i, bool value) {
    if (i >= size_) throw std::out_of_range("mask index out of range");
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value)
        words_[i / 64] |= bit;
    else
        words_[i / 64] &= ~bit;
}

std::size_t Mask::count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool Mask::none() const noexcept {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::optional<std::size_t> Mask::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return std::nullopt;
}

std::vector<std::size_t> Mask::indices() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

Mask& Mask::operator&=(const Mask& o) {
    if (o.size_ != size_) throw std::invalid_argument("mask size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
}

Mask& Mask::operator|=(const Mask& o) {
    if (o.size_ != size_) throw std::invalid_argument("mask size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
}

Mask Mask::without(const Mask& o) const {
    if (o.size_ != size_) throw std::invalid_argument("mask size mismatch");
    Mask r = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= ~o.words_[w];
    return r;
}

std::size_t Mask::hash() const noexcept {
    // splitmix-style mixing per word
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ size_;
    for (auto w : words_) {
        std::uint64_t z = w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        h ^= z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
}

}  // namespace abstain
