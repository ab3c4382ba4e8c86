#pragma once

#include <memory>
#include <optional>

#include "abstain/dim_cache.hpp"
#include "abstain/hypothesis.hpp"
#include "abstain/trees.hpp"

namespace abstain {

class Adversary {
public:
    virtual ~Adversary() = default;
    virtual const Domain& domain() const = 0;
    // Next query point, or nullopt once the interaction is over.
    virtual std::optional<std::size_t> next() = 0;
    // Reveals the label for the point returned by the last next().
    virtual Label respond(Prediction yhat) = 0;
};

// Walks an extended mistake tree: a label prediction is answered with the opposite label,
// an abstention with the dashed label.
class TreeAdversary : public Adversary {
public:
    // Throws std::invalid_argument when the tree does not validate against h.
    TreeAdversary(ExtendedMistakeTree tree, const HypothesisClass& h);

    const Domain& domain() const override { return domain_; }
    std::optional<std::size_t> next() override;
    Label respond(Prediction yhat) override;

    const ExtendedMistakeTree& cursor() const noexcept { return cursor_; }
    // Hypothesis at the reached leaf, once done.
    std::optional<std::string> reached_leaf() const;
    const Sequence& revealed() const noexcept { return revealed_; }

private:
    Domain domain_;
    ExtendedMistakeTree cursor_;
    std::optional<std::size_t> pending_;
    Sequence revealed_;
};

// Plays the recurrence's argmax for the current version space on the fly. The budget model
// drops only when play moves to the non-dashed child, which keeps it trace-equivalent to
// TreeAdversary over witness(v,k).
class MinimaxAdversary : public Adversary {
public:
    MinimaxAdversary(VersionSpace v, int k, std::shared_ptr<DimCache> cache = nullptr);

    const Domain& domain() const override { return v_.hypothesis_class().domain(); }
    std::optional<std::size_t> next() override;
    Label respond(Prediction yhat) override;

    const VersionSpace& version_space() const noexcept { return v_; }
    int budget_model() const noexcept { return k_; }
    const Sequence& revealed() const noexcept { return revealed_; }

private:
    VersionSpace v_;
    int k_;
    std::shared_ptr<DimCache> cache_;
    std::optional<std::pair<std::size_t, Label>> pending_;
    bool done_ = false;
    Sequence revealed_;
};

// Tree adversary over witness(bias_expand(base, l), k_assumed).
TreeAdversary bias_adversary(const HypothesisClass& base, std::size_t l, int k_assumed);

struct FractionalPrediction {
    double p_minus = 0;
    double p_plus = 0;
    // Throws std::invalid_argument unless both are >= 0 and the sum is <= 1.
    void check() const;
};

// Threshold rule on p_plus over a singleton_tree whose dashed edges are all +1.
class RandomizedAdversary {
public:
    RandomizedAdversary(std::size_t l, double k, ExtendedMistakeTree tree, Domain domain);

    const Domain& domain() const noexcept { return domain_; }
    double epsilon() const noexcept { return eps_; }
    std::optional<std::size_t> next();
    Label respond(const FractionalPrediction& f);
    const Sequence& revealed() const noexcept { return revealed_; }

private:
    std::size_t l_;
    double k_;
    double eps_;
    Domain domain_;
    ExtendedMistakeTree cursor_;
    std::optional<std::size_t> pending_;
    Sequence revealed_;
};

}  // namespace abstain
