#include "abstain/dimensions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace abstain {

std::uint64_t binom_leq(std::uint64_t t, std::uint64_t k) {
    using u128 = unsigned __int128;
    constexpr u128 cap = std::numeric_limits<std::uint64_t>::max();
    u128 term = 1, sum = 1;
    const std::uint64_t top = std::min(k, t);
    for (std::uint64_t i = 1; i <= top; ++i) {
        term = term * (t - i + 1) / i;  // exact: term is C(t,i)
        sum += term;
        if (term > cap || sum > cap) throw std::overflow_error("binom_leq exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(sum);
}

namespace {

Mask side(const HypothesisClass& cls, const Mask& m, std::size_t x, Label y) {
    return y == Label::plus ? (m & cls.positive_on(x)) : m.without(cls.positive_on(x));
}

void require_budget(int k) {
    if (k < 0) throw std::invalid_argument("mistake budget must be >= 0");
}

DimValue ldim_rec(const HypothesisClass& cls, const Mask& m, DimCache& cache) {
    const std::size_t n = m.count();
    if (n == 0) return DimValue::neg_inf();
    if (n == 1) return DimValue(0);
    if (auto hit = cache.find_dim(cls, Measure::ldim, 0, m)) return *hit;
    DimValue best;
    bool any = false;
    for (auto x : dis(cls, m)) {
        any = true;
        best = std::max(best, std::min(ldim_rec(cls, side(cls, m, x, Label::plus), cache),
                                       ldim_rec(cls, side(cls, m, x, Label::minus), cache)));
    }
    const DimValue r = any ? best.succ() : DimValue(0);
    cache.store_dim(cls, Measure::ldim, 0, m, r);
    return r;
}

DimValue eldim_rec(const HypothesisClass& cls, const Mask& m, int k, DimCache& cache);

// Max over (x, dashed label) of the recurrence's inner term, before the +1.
std::optional<EldimChoice> best_choice(const HypothesisClass& cls, const Mask& m, int k, DimCache& cache) {
    std::optional<EldimChoice> best;
    for (auto x : dis(cls, m)) {
        const Mask pos = side(cls, m, x, Label::plus);
        const Mask neg = side(cls, m, x, Label::minus);
        for (Label d : {Label::plus, Label::minus}) {
            const Mask& dashed = d == Label::plus ? pos : neg;
            const Mask& solid = d == Label::plus ? neg : pos;
            DimValue v = eldim_rec(cls, dashed, k, cache);
            if (k > 0) v = std::min(v, eldim_rec(cls, solid, k - 1, cache));
            if (!best || v > best->value) best = EldimChoice{x, d, v};
        }
    }
    return best;
}

DimValue eldim_rec(const HypothesisClass& cls, const Mask& m, int k, DimCache& cache) {
    const std::size_t n = m.count();
    if (n == 0) return DimValue::neg_inf();
    if (n == 1) return DimValue(0);
    if (auto hit = cache.find_dim(cls, Measure::eldim, k, m)) return *hit;
    auto c = best_choice(cls, m, k, cache);
    const DimValue r = c ? c->value.succ() : DimValue(0);
    cache.store_dim(cls, Measure::eldim, k, m, r);
    return r;
}

DimValue alg_rec(const HypothesisClass& cls, const Mask& m, int k, DimCache& cache) {
    const std::size_t n = m.count();
    if (n == 0) return DimValue::neg_inf();
    if (n == 1) return DimValue(0);
    if (auto hit = cache.find_dim(cls, Measure::eldim_alg, k, m)) return *hit;
    DimValue best;
    bool any = false;
    for (auto x : dis(cls, m)) {
        any = true;
        const Mask pos = side(cls, m, x, Label::plus);
        const Mask neg = side(cls, m, x, Label::minus);
        // budget 0 forces an abstention, so only the abstain branch remains
        DimValue term = std::max(alg_rec(cls, pos, k, cache), alg_rec(cls, neg, k, cache));
        if (k > 0)
            term = std::min(std::min(alg_rec(cls, neg, k - 1, cache), alg_rec(cls, pos, k - 1, cache)), term);
        best = std::max(best, term);
    }
    const DimValue r = any ? best.succ() : DimValue(0);
    cache.store_dim(cls, Measure::eldim_alg, k, m, r);
    return r;
}

std::uint64_t shatter_rec(const HypothesisClass& cls, const Mask& m, int t, DimCache& cache) {
    const std::size_t n = m.count();
    if (n == 0) return 0;
    if (t == 0 || n == 1) return 1;
    if (auto hit = cache.find_count(cls, t, m)) return *hit;
    std::uint64_t best = 0;
    for (std::size_t x = 0; x < cls.domain().size(); ++x)
        best = std::max(best, shatter_rec(cls, side(cls, m, x, Label::minus), t - 1, cache) +
                                  shatter_rec(cls, side(cls, m, x, Label::plus), t - 1, cache));
    cache.store_count(cls, t, m, best);
    return best;
}

}  // namespace

DimValue ldim(const VersionSpace& v, DimCache& cache) {
    return ldim_rec(v.hypothesis_class(), v.mask(), cache);
}

DimValue ldim(const HypothesisClass& h) {
    DimCache cache;
    return ldim(h.full(), cache);
}

DimValue eldim(const VersionSpace& v, int k, DimCache& cache) {
    require_budget(k);
    return eldim_rec(v.hypothesis_class(), v.mask(), k, cache);
}

DimValue eldim(const HypothesisClass& h, int k) {
    DimCache cache;
    return eldim(h.full(), k, cache);
}

DimValue eldim_alg_form(const VersionSpace& v, int k, DimCache& cache) {
    if (k < 1) throw std::invalid_argument("eldim_alg_form needs k >= 1");
    return alg_rec(v.hypothesis_class(), v.mask(), k, cache);
}

DimValue eldim_alg_form(const HypothesisClass& h, int k) {
    DimCache cache;
    return eldim_alg_form(h.full(), k, cache);
}

std::optional<EldimChoice> eldim_argmax(const VersionSpace& v, int k, DimCache& cache) {
    require_budget(k);
    if (v.size() < 2) return std::nullopt;
    auto c = best_choice(v.hypothesis_class(), v.mask(), k, cache);
    if (c) c->value = c->value.succ();
    return c;
}

int eldim_upper_finite(const HypothesisClass& h, int k) {
    require_budget(k);
    if (h.empty()) throw std::invalid_argument("eldim_upper_finite needs a nonempty class");
    int t = 0;
    while (binom_leq(static_cast<std::uint64_t>(t) + 1, static_cast<std::uint64_t>(k) + 1) <= h.size()) ++t;
    return t;
}

DimValue eldim_upper_growth(const HypothesisClass& h, int k, std::optional<int> t_max) {
    require_budget(k);
    if (h.empty()) return DimValue::neg_inf();
    const int cap = t_max ? *t_max : eldim_upper_finite(h, k) + 1;
    DimCache cache;
    const VersionSpace full = h.full();
    int best = 0;
    for (int t = 0;; ++t) {
        const std::uint64_t need = binom_leq(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(k) + 1);
        // shatter never exceeds |h|, so nothing past this t can satisfy the inequality
        if (need > h.size()) return DimValue(best);
        if (t > cap) throw std::range_error("eldim_upper_growth: t_max reached before the bound was settled");
        if (need <= shatter_recursive(full, t, cache)) best = t;
    }
}

double bound_finiteub(std::uint64_t h_size, int k, int l) {
    if (l < 0 || k < l) throw std::invalid_argument("bound_finiteub needs k >= l >= 0");
    if (h_size < 1) throw std::invalid_argument("bound_finiteub needs |H| >= 1");
    return std::exp(1.0) * (k + 1) * std::pow(static_cast<double>(h_size), 1.0 / (k + 1 - l));
}

double bound_infiniteub(int d, int k, int l) {
    if (d < 0 || l < 0 || k < l + d) throw std::invalid_argument("bound_infiniteub needs k >= l + d");
    return (k + 1) * std::exp((2.0 * k + 2.0) / (k + 1 - l - d));
}

std::uint64_t shatter_recursive(const VersionSpace& v, int t, DimCache& cache) {
    if (t < 0) throw std::invalid_argument("depth must be >= 0");
    if (t > 0 && v.hypothesis_class().domain().size() == 0 && !v.empty())
        throw std::invalid_argument("shatter needs a nonempty domain for t >= 1");
    return shatter_rec(v.hypothesis_class(), v.mask(), t, cache);
}

std::uint64_t shatter_recursive(const HypothesisClass& h, int t) {
    DimCache cache;
    return shatter_recursive(h.full(), t, cache);
}

std::uint64_t shatter_paths(const HypothesisClass& h, const PointTree& tree) {
    std::size_t depth = 0;
    while ((std::size_t{1} << depth) - 1 < tree.size()) ++depth;
    if ((std::size_t{1} << depth) - 1 != tree.size())
        throw std::invalid_argument("point tree size must be 2^t - 1");
    std::unordered_set<std::size_t> leaves;
    for (std::size_t i = 0; i < h.size(); ++i) {
        std::size_t node = 0;
        for (std::size_t level = 0; level < depth; ++level)
            node = 2 * node + (h.label(i, tree[node]) == Label::plus ? 2 : 1);
        leaves.insert(node);
    }
    return leaves.size();
}

std::uint64_t shatter_enumerative(const HypothesisClass& h, int t) {
    if (t < 0) throw std::invalid_argument("depth must be >= 0");
    if (t > 5) throw std::length_error("shatter_enumerative: depth too large");
    const std::size_t nodes = (std::size_t{1} << t) - 1;
    const std::size_t D = h.domain().size();
    if (nodes > 0 && D == 0) throw std::invalid_argument("shatter needs a nonempty domain for t >= 1");
    double trees = std::pow(static_cast<double>(D), static_cast<double>(nodes));
    if (trees > 2e5) throw std::length_error("shatter_enumerative: more than 2e5 candidate trees");
    PointTree tree(nodes, 0);
    std::uint64_t best = 0;
    while (true) {
        best = std::max(best, shatter_paths(h, tree));
        std::size_t i = 0;
        while (i < nodes && ++tree[i] == D) tree[i++] = 0;
        if (i == nodes) break;
    }
    return best;
}

int egg_drop(int n, int k) {
    if (n < 1 || k < 0) throw std::invalid_argument("egg_drop needs n >= 1, k >= 0");
    // g[j][b] for j candidates and budget b
    std::vector<std::vector<int>> g(n + 1, std::vector<int>(k + 1, 0));
    for (int j = 1; j <= n; ++j) g[j][0] = j - 1;
    for (int b = 1; b <= k; ++b)
        for (int j = 2; j <= n; ++j) {
            int best = 0;
            for (int a = 1; a <= j / 2; ++a) best = std::max(best, std::min(g[a][b - 1], g[j - a][b]));
            g[j][b] = 1 + best;
        }
    return g[n][k];
}

}  // namespace abstain
