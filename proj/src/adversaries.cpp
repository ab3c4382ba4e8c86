#include "abstain/adversaries.hpp"

#include <stdexcept>

#include "abstain/dimensions.hpp"

namespace abstain {

TreeAdversary::TreeAdversary(ExtendedMistakeTree tree, const HypothesisClass& h)
    : domain_(h.domain()), cursor_(std::move(tree)) {
    auto report = validate(cursor_, h);
    if (!report.valid) throw std::invalid_argument("tree adversary: " + report.message);
}

std::optional<std::size_t> TreeAdversary::next() {
    if (cursor_.is_leaf()) return std::nullopt;
    pending_ = domain_.index_of(cursor_.point());
    return pending_;
}

Label TreeAdversary::respond(Prediction yhat) {
    if (cursor_.is_leaf()) throw std::logic_error("tree adversary: respond after Done");
    if (!pending_) throw std::logic_error("tree adversary: respond before next");
    const Label y = yhat == Prediction::abstain ? cursor_.dashed_side() : -*as_label(yhat);
    revealed_.push_back({*pending_, y});
    pending_.reset();
    ExtendedMistakeTree child = cursor_.child(y);
    cursor_ = std::move(child);
    return y;
}

std::optional<std::string> TreeAdversary::reached_leaf() const {
    if (!cursor_.is_leaf()) return std::nullopt;
    return cursor_.hypothesis();
}

MinimaxAdversary::MinimaxAdversary(VersionSpace v, int k, std::shared_ptr<DimCache> cache)
    : v_(std::move(v)), k_(k), cache_(cache ? std::move(cache) : std::make_shared<DimCache>()) {
    if (v_.empty()) throw std::invalid_argument("minimax adversary: empty version space");
    if (k < 0) throw std::invalid_argument("minimax adversary: budget must be >= 0");
}

std::optional<std::size_t> MinimaxAdversary::next() {
    if (done_) return std::nullopt;
    if (!pending_) {
        auto c = eldim_argmax(v_, k_, *cache_);
        if (!c) {
            done_ = true;
            return std::nullopt;
        }
        pending_ = {c->point, c->dashed};
    }
    return pending_->first;
}

Label MinimaxAdversary::respond(Prediction yhat) {
    if (done_) throw std::logic_error("minimax adversary: respond after Done");
    if (!pending_) throw std::logic_error("minimax adversary: respond before next");
    const auto [x, dashed] = *pending_;
    pending_.reset();
    const Label y = yhat == Prediction::abstain ? dashed : -*as_label(yhat);
    v_ = v_.restrict(x, y);
    revealed_.push_back({x, y});
    if (y != dashed) {
        // budget-0 node: the other side is a leaf in the witness tree
        if (k_ == 0)
            done_ = true;
        else
            --k_;
    }
    return y;
}

TreeAdversary bias_adversary(const HypothesisClass& base, std::size_t l, int k_assumed) {
    if (k_assumed < 0) throw std::invalid_argument("bias adversary: budget must be >= 0");
    const HypothesisClass expanded = bias_expand(base, l);
    if (expanded.empty()) throw std::invalid_argument("bias adversary: empty base class");
    DimCache cache;
    return TreeAdversary(witness(expanded.full(), k_assumed, cache), expanded);
}

void FractionalPrediction::check() const {
    if (!(p_minus >= 0) || !(p_plus >= 0) || p_minus + p_plus > 1 + 1e-12)
        throw std::invalid_argument("fractional prediction needs p_minus, p_plus >= 0 and p_minus + p_plus <= 1");
}

RandomizedAdversary::RandomizedAdversary(std::size_t l, double k, ExtendedMistakeTree tree, Domain domain)
    : l_(l), k_(k), eps_(l == 0 ? 0.0 : 1.0 - k / static_cast<double>(l)), domain_(std::move(domain)),
      cursor_(std::move(tree)) {
    if (l_ == 0 || !(k_ >= 0) || !(eps_ > 0)) throw std::invalid_argument("randomized adversary needs 0 <= k < l");
    auto report = validate_singleton_unions(cursor_, domain_, l_);
    if (!report.valid) throw std::invalid_argument("randomized adversary: " + report.message);
    std::function<bool(const ExtendedMistakeTree&)> plus_dashed = [&](const ExtendedMistakeTree& t) {
        return t.is_leaf() || (t.dashed_side() == Label::plus && plus_dashed(t.left()) && plus_dashed(t.right()));
    };
    if (!plus_dashed(cursor_)) throw std::invalid_argument("randomized adversary: every dashed edge must be +1");
}

std::optional<std::size_t> RandomizedAdversary::next() {
    if (cursor_.is_leaf()) return std::nullopt;
    pending_ = domain_.index_of(cursor_.point());
    return pending_;
}

Label RandomizedAdversary::respond(const FractionalPrediction& f) {
    if (cursor_.is_leaf()) throw std::logic_error("randomized adversary: respond after Done");
    if (!pending_) throw std::logic_error("randomized adversary: respond before next");
    f.check();
    const Label y = f.p_plus > 1.0 - eps_ ? Label::minus : Label::plus;
    revealed_.push_back({*pending_, y});
    pending_.reset();
    ExtendedMistakeTree child = cursor_.child(y);
    cursor_ = std::move(child);
    return y;
}

}  // namespace abstain
