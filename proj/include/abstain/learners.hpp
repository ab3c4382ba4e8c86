#pragma once

#include <memory>
#include <string>

#include "abstain/dim_cache.hpp"
#include "abstain/dim_value.hpp"
#include "abstain/hypothesis.hpp"

namespace abstain {

// Deterministic online learner over a fixed domain.
class OnlineLearner {
public:
    virtual ~OnlineLearner() = default;
    virtual const Domain& domain() const = 0;
    virtual Prediction predict(std::size_t x) = 0;
    virtual void observe(std::size_t x, Prediction yhat, Label y) = 0;
    virtual std::string name() const = 0;
};

struct LearnerState {
    VersionSpace version_space;
    int budget;
};

// Never abstains; moves to the restricted version space on mistakes only.
class Soa : public OnlineLearner {
public:
    explicit Soa(VersionSpace v, std::shared_ptr<DimCache> cache = nullptr);
    explicit Soa(const HypothesisClass& h, std::shared_ptr<DimCache> cache = nullptr) : Soa(h.full(), std::move(cache)) {}

    const Domain& domain() const override { return v_.hypothesis_class().domain(); }
    Prediction predict(std::size_t x) override;
    void observe(std::size_t x, Prediction yhat, Label y) override;
    std::string name() const override { return "soa"; }
    const VersionSpace& version_space() const noexcept { return v_; }

private:
    VersionSpace v_;
    std::shared_ptr<DimCache> cache_;
};

class SoaDk : public OnlineLearner {
public:
    SoaDk(VersionSpace v, int budget, std::shared_ptr<DimCache> cache = nullptr);
    SoaDk(const HypothesisClass& h, int budget, std::shared_ptr<DimCache> cache = nullptr)
        : SoaDk(h.full(), budget, std::move(cache)) {}

    const Domain& domain() const override { return state_.version_space.hypothesis_class().domain(); }
    Prediction predict(std::size_t x) override;
    void observe(std::size_t x, Prediction yhat, Label y) override;
    std::string name() const override { return "soadk"; }

    const LearnerState& state() const noexcept { return state_; }
    DimCache& cache() noexcept { return *cache_; }

    // The three scores compared at a disagreement point with budget >= 1.
    struct Scores {
        DimValue plus, minus, abstain;
    };
    Scores scores(std::size_t x);

private:
    LearnerState state_;
    std::shared_ptr<DimCache> cache_;
};

}  // namespace abstain
