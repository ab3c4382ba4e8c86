#include "abstain/dim_cache.hpp"

#include <stdexcept>

namespace abstain {

void DimCache::bind(const HypothesisClass& cls) {
    if (!class_id_)
        class_id_ = cls.id();
    else if (*class_id_ != cls.id())
        throw std::invalid_argument("DimCache used with a different hypothesis class");
}

std::optional<DimValue> DimCache::find_dim(const HypothesisClass& cls, Measure m, int param, const Mask& mask) {
    bind(cls);
    auto it = dims_.find(Key{m, param, mask});
    if (it == dims_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void DimCache::store_dim(const HypothesisClass& cls, Measure m, int param, const Mask& mask, DimValue v) {
    bind(cls);
    dims_.insert_or_assign(Key{m, param, mask}, v);
}

std::optional<std::uint64_t> DimCache::find_count(const HypothesisClass& cls, int t, const Mask& mask) {
    bind(cls);
    auto it = counts_.find(Key{Measure::shatter, t, mask});
    if (it == counts_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void DimCache::store_count(const HypothesisClass& cls, int t, const Mask& mask, std::uint64_t v) {
    bind(cls);
    counts_.insert_or_assign(Key{Measure::shatter, t, mask}, v);
}

void DimCache::clear() {
    dims_.clear();
    counts_.clear();
    class_id_.reset();
    hits_ = misses_ = 0;
}

void DimCache::merge(const DimCache& other) {
    if (!other.class_id_) return;
    if (class_id_ && *class_id_ != *other.class_id_)
        throw std::invalid_argument("cannot merge caches of different classes");
    class_id_ = other.class_id_;
    dims_.insert(other.dims_.begin(), other.dims_.end());
    counts_.insert(other.counts_.begin(), other.counts_.end());
}

}  // namespace abstain
