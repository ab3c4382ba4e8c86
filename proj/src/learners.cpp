#include "abstain/learners.hpp"

#include <algorithm>
#include <stdexcept>

#include "abstain/dimensions.hpp"

namespace abstain {

namespace {

std::shared_ptr<DimCache> or_fresh(std::shared_ptr<DimCache> c) {
    return c ? std::move(c) : std::make_shared<DimCache>();
}

}  // namespace

Soa::Soa(VersionSpace v, std::shared_ptr<DimCache> cache) : v_(std::move(v)), cache_(or_fresh(std::move(cache))) {}

Prediction Soa::predict(std::size_t x) {
    if (v_.empty()) throw std::logic_error("soa: empty version space");
    const DimValue if_plus = ldim(v_.restrict(x, Label::minus), *cache_);
    const DimValue if_minus = ldim(v_.restrict(x, Label::plus), *cache_);
    return if_minus < if_plus ? Prediction::minus : Prediction::plus;
}

void Soa::observe(std::size_t x, Prediction yhat, Label y) {
    if (yhat != abstain::predict(y)) v_ = v_.restrict(x, y);
}

SoaDk::SoaDk(VersionSpace v, int budget, std::shared_ptr<DimCache> cache)
    : state_{std::move(v), budget}, cache_(or_fresh(std::move(cache))) {
    if (budget < 0) throw std::invalid_argument("soadk: budget must be >= 0");
}

SoaDk::Scores SoaDk::scores(std::size_t x) {
    const VersionSpace& v = state_.version_space;
    const int k = state_.budget;
    if (k < 1) throw std::logic_error("soadk: scores need budget >= 1");
    const VersionSpace neg = v.restrict(x, Label::minus), pos = v.restrict(x, Label::plus);
    return Scores{eldim(neg, k - 1, *cache_), eldim(pos, k - 1, *cache_),
                  std::max(eldim(neg, k, *cache_), eldim(pos, k, *cache_))};
}

Prediction SoaDk::predict(std::size_t x) {
    const VersionSpace& v = state_.version_space;
    if (v.empty()) throw std::logic_error("soadk: empty version space");
    if (auto y = v.unanimous(x)) return abstain::predict(*y);
    if (state_.budget == 0) return Prediction::abstain;
    const Scores s = scores(x);
    if (s.plus <= s.minus && s.plus <= s.abstain) return Prediction::plus;
    if (s.minus <= s.abstain) return Prediction::minus;
    return Prediction::abstain;
}

void SoaDk::observe(std::size_t x, Prediction yhat, Label y) {
    if (yhat == abstain::predict(y)) return;
    state_.version_space = state_.version_space.restrict(x, y);
    if (yhat != Prediction::abstain && state_.budget > 0) --state_.budget;
}

}  // namespace abstain
