#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "abstain/dim_value.hpp"
#include "abstain/hypothesis.hpp"

namespace abstain {

enum class Measure : std::uint8_t { ldim, eldim, eldim_alg, shatter };

// Memo table keyed by (measure, budget or depth, version-space mask), bound to one class.
// Not synchronized: give each worker its own cache and merge afterwards.
class DimCache {
public:
    std::optional<DimValue> find_dim(const HypothesisClass& cls, Measure m, int param, const Mask& mask);
    void store_dim(const HypothesisClass& cls, Measure m, int param, const Mask& mask, DimValue v);
    std::optional<std::uint64_t> find_count(const HypothesisClass& cls, int t, const Mask& mask);
    void store_count(const HypothesisClass& cls, int t, const Mask& mask, std::uint64_t v);

    std::uint64_t hits() const noexcept { return hits_; }
    std::uint64_t misses() const noexcept { return misses_; }
    std::size_t size() const noexcept { return dims_.size() + counts_.size(); }
    void clear();
    // Adds entries from another cache bound to the same class.
    void merge(const DimCache& other);

private:
    struct Key {
        Measure measure;
        int param;
        Mask mask;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return k.mask.hash() ^ (static_cast<std::size_t>(k.param) * 0x9e3779b97f4a7c15ull) ^
                   (static_cast<std::size_t>(k.measure) << 56);
        }
    };
    void bind(const HypothesisClass& cls);

    std::optional<std::uint64_t> class_id_;
    std::unordered_map<Key, DimValue, KeyHash> dims_;
    std::unordered_map<Key, std::uint64_t, KeyHash> counts_;
    std::uint64_t hits_ = 0, misses_ = 0;
};

}  // namespace abstain
