#include "abstain/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "abstain/dimensions.hpp"

namespace abstain {

struct ExtendedMistakeTree::Node {
    std::string label;  // hypothesis for leaves, point for internal nodes
    Label dashed = Label::plus;
    std::optional<ExtendedMistakeTree> left, right;
};

ExtendedMistakeTree ExtendedMistakeTree::leaf(std::string hypothesis) {
    auto n = std::make_shared<Node>();
    n->label = std::move(hypothesis);
    return ExtendedMistakeTree(std::move(n));
}

ExtendedMistakeTree ExtendedMistakeTree::node(std::string point, Label dashed, ExtendedMistakeTree left,
                                              ExtendedMistakeTree right) {
    auto n = std::make_shared<Node>();
    n->label = std::move(point);
    n->dashed = dashed;
    n->left = std::move(left);
    n->right = std::move(right);
    return ExtendedMistakeTree(std::move(n));
}

bool ExtendedMistakeTree::is_leaf() const noexcept { return !node_->left.has_value(); }

const std::string& ExtendedMistakeTree::hypothesis() const {
    if (!is_leaf()) throw std::logic_error("hypothesis() on an internal node");
    return node_->label;
}

const std::string& ExtendedMistakeTree::point() const {
    if (is_leaf()) throw std::logic_error("point() on a leaf");
    return node_->label;
}

Label ExtendedMistakeTree::dashed_side() const {
    if (is_leaf()) throw std::logic_error("dashed_side() on a leaf");
    return node_->dashed;
}

const ExtendedMistakeTree& ExtendedMistakeTree::left() const {
    if (is_leaf()) throw std::logic_error("left() on a leaf");
    return *node_->left;
}

const ExtendedMistakeTree& ExtendedMistakeTree::right() const {
    if (is_leaf()) throw std::logic_error("right() on a leaf");
    return *node_->right;
}

std::size_t ExtendedMistakeTree::depth() const {
    return is_leaf() ? 0 : 1 + std::max(left().depth(), right().depth());
}

std::size_t ExtendedMistakeTree::leaf_count() const {
    return is_leaf() ? 1 : left().leaf_count() + right().leaf_count();
}

std::size_t ExtendedMistakeTree::internal_count() const {
    return is_leaf() ? 0 : 1 + left().internal_count() + right().internal_count();
}

bool operator==(const ExtendedMistakeTree& a, const ExtendedMistakeTree& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_leaf() != b.is_leaf() || a.node_->label != b.node_->label) return false;
    if (a.is_leaf()) return true;
    return a.node_->dashed == b.node_->dashed && a.left() == b.left() && a.right() == b.right();
}

MistakeTree MistakeTree::leaf(std::string hypothesis) {
    return MistakeTree(ExtendedMistakeTree::leaf(std::move(hypothesis)));
}

MistakeTree MistakeTree::node(std::string point, MistakeTree left, MistakeTree right) {
    return MistakeTree(
        ExtendedMistakeTree::node(std::move(point), Label::plus, std::move(left.tree_), std::move(right.tree_)));
}

bool MistakeTree::is_complete() const {
    const std::size_t d = tree_.depth();
    std::function<bool(const ExtendedMistakeTree&, std::size_t)> rec = [&](const ExtendedMistakeTree& t,
                                                                            std::size_t level) {
        if (t.is_leaf()) return level == d;
        return rec(t.left(), level + 1) && rec(t.right(), level + 1);
    };
    return rec(tree_, 0);
}

namespace {

struct Validator {
    const Domain& domain;
    const LeafEvaluator& eval;
    std::vector<Label> path;
    std::vector<Example> constraints;
    ValidationReport report;

    bool fail(std::string msg) {
        report.valid = false;
        report.message = std::move(msg);
        report.path = path;
        return false;
    }

    bool walk(const ExtendedMistakeTree& t) {
        if (t.is_leaf()) {
            for (const auto& c : constraints) {
                auto y = eval(t.hypothesis(), c.point);
                if (!y) return fail("leaf '" + t.hypothesis() + "' is not a member of the class");
                if (*y != c.label)
                    return fail("leaf '" + t.hypothesis() + "' labels point '" + domain.point(c.point) + "' as " +
                                std::string(to_string(*y)) + " but its path says " +
                                std::string(to_string(c.label)));
            }
            if (!eval(t.hypothesis(), membership_probe))
                return fail("leaf '" + t.hypothesis() + "' is not a member of the class");
            return true;
        }
        auto x = domain.find(t.point());
        if (!x) return fail("unknown point '" + t.point() + "'");
        for (Label y : {Label::minus, Label::plus}) {
            path.push_back(y);
            constraints.push_back({*x, y});
            const bool ok = walk(t.child(y));
            constraints.pop_back();
            path.pop_back();
            if (!ok) return false;
        }
        return true;
    }
};

}  // namespace

ValidationReport validate(const ExtendedMistakeTree& t, const Domain& domain, const LeafEvaluator& eval) {
    Validator v{domain, eval, {}, {}, {}};
    v.walk(t);
    return v.report;
}

ValidationReport validate(const ExtendedMistakeTree& t, const HypothesisClass& h) {
    LeafEvaluator eval = [&](const std::string& name, std::size_t x) -> std::optional<Label> {
        auto i = h.find(name);
        if (!i) return std::nullopt;
        return x == membership_probe ? Label::plus : h.label(*i, x);
    };
    return validate(t, h.domain(), eval);
}

ValidationReport validate_singleton_unions(const ExtendedMistakeTree& t, const Domain& domain, std::size_t l) {
    LeafEvaluator eval = [&](const std::string& name, std::size_t x) -> std::optional<Label> {
        if (name.size() < 2 || name.front() != '{' || name.back() != '}') return std::nullopt;
        std::set<std::size_t> flips;
        const std::string body = name.substr(1, name.size() - 2);
        std::size_t start = 0;
        while (!body.empty() && start <= body.size()) {
            std::size_t end = body.find('|', start);
            if (end == std::string::npos) end = body.size();
            auto p = domain.find(body.substr(start, end - start));
            if (!p) return std::nullopt;
            flips.insert(*p);
            start = end + 1;
        }
        if (flips.size() > l) return std::nullopt;
        return x != membership_probe && flips.count(x) ? Label::minus : Label::plus;
    };
    return validate(t, domain, eval);
}

namespace {

template <class F>
void for_each_leaf(const ExtendedMistakeTree& t, std::vector<Label>& path, std::size_t cost, F&& f) {
    if (t.is_leaf()) {
        f(path, cost);
        return;
    }
    for (Label y : {Label::minus, Label::plus}) {
        path.push_back(y);
        for_each_leaf(t.child(y), path, cost + (y == t.dashed_side() ? 0 : 1), f);
        path.pop_back();
    }
}

}  // namespace

DifficultyReport check_difficulty(const ExtendedMistakeTree& t, int k, int m) {
    if (k < 0) throw std::invalid_argument("mistake budget must be >= 0");
    DifficultyReport r;
    std::vector<Label> path;
    for_each_leaf(t, path, 0, [&](const std::vector<Label>& p, std::size_t cost) {
        if (r.violating_leaf) return;
        if (static_cast<long>(p.size()) < m && cost <= static_cast<std::size_t>(k)) {
            r.is_difficult = false;
            r.violating_leaf = ViolatingLeaf{p, p.size(), cost};
        }
    });
    return r;
}

std::size_t max_difficulty(const ExtendedMistakeTree& t, int k) {
    if (k < 0) throw std::invalid_argument("mistake budget must be >= 0");
    std::size_t best = t.depth();
    std::vector<Label> path;
    for_each_leaf(t, path, 0, [&](const std::vector<Label>& p, std::size_t cost) {
        if (cost <= static_cast<std::size_t>(k)) best = std::min(best, p.size());
    });
    return best;
}

ExtendedMistakeTree witness(const VersionSpace& v, int k, DimCache& cache) {
    if (v.empty()) throw std::invalid_argument("witness needs a nonempty version space");
    const HypothesisClass& h = v.hypothesis_class();
    auto c = eldim_argmax(v, k, cache);
    if (!c) return ExtendedMistakeTree::leaf(h.name(*v.mask().first()));
    ExtendedMistakeTree dashed = witness(v.restrict(c->point, c->dashed), k, cache);
    const VersionSpace other = v.restrict(c->point, -c->dashed);
    ExtendedMistakeTree solid =
        k == 0 ? ExtendedMistakeTree::leaf(h.name(*other.mask().first())) : witness(other, k - 1, cache);
    const std::string& x = h.domain().point(c->point);
    return c->dashed == Label::plus ? ExtendedMistakeTree::node(x, c->dashed, std::move(solid), std::move(dashed))
                                    : ExtendedMistakeTree::node(x, c->dashed, std::move(dashed), std::move(solid));
}

MistakeTree mistake_tree(const VersionSpace& v, int depth, DimCache& cache) {
    if (v.empty()) throw std::invalid_argument("mistake_tree needs a nonempty version space");
    const HypothesisClass& h = v.hypothesis_class();
    if (depth == 0) return MistakeTree::leaf(h.name(*v.mask().first()));
    for (auto x : dis(v)) {
        const VersionSpace neg = v.restrict(x, Label::minus), pos = v.restrict(x, Label::plus);
        if (std::min(ldim(neg, cache), ldim(pos, cache)) >= DimValue(depth - 1))
            return MistakeTree::node(h.domain().point(x), mistake_tree(neg, depth - 1, cache),
                                     mistake_tree(pos, depth - 1, cache));
    }
    throw std::invalid_argument("mistake_tree: depth exceeds the Littlestone dimension");
}

namespace {

// Every tree of depth <= budget over the version space m.
std::vector<ExtendedMistakeTree> all_trees(const HypothesisClass& h, const Mask& m, int budget) {
    std::vector<ExtendedMistakeTree> out;
    m.for_each([&](std::size_t i) { out.push_back(ExtendedMistakeTree::leaf(h.name(i))); });
    if (budget == 0) return out;
    for (std::size_t x = 0; x < h.domain().size(); ++x) {
        const Mask pos = m & h.positive_on(x);
        const Mask neg = m.without(h.positive_on(x));
        if (pos.none() || neg.none()) continue;  // a full tree needs a consistent leaf on both sides
        const auto lefts = all_trees(h, neg, budget - 1);
        const auto rights = all_trees(h, pos, budget - 1);
        for (Label d : {Label::minus, Label::plus})
            for (const auto& l : lefts)
                for (const auto& r : rights) out.push_back(ExtendedMistakeTree::node(h.domain().point(x), d, l, r));
    }
    return out;
}

}  // namespace

DimValue exhaustive_max_difficulty(const HypothesisClass& h, int k, int depth_cap) {
    if (k < 0) throw std::invalid_argument("mistake budget must be >= 0");
    if (h.size() > 4 || h.domain().size() > 3 || depth_cap > 3 || depth_cap < 0)
        throw std::length_error("exhaustive_max_difficulty guard: needs |H| <= 4, D <= 3, depth_cap <= 3");
    DimValue best;
    for (const auto& t : all_trees(h, Mask(h.size(), true), depth_cap)) {
        if (!validate(t, h).valid) throw std::logic_error("enumerated an invalid tree");
        int m = 0;
        while (check_difficulty(t, k, m + 1).is_difficult) ++m;
        best = std::max(best, DimValue(m));
    }
    return best;
}

namespace {

ExtendedMistakeTree threshold_rec(std::size_t offset, int k, int m) {
    auto h = [](std::size_t i) { return "h" + std::to_string(i); };
    if (m == 0) return ExtendedMistakeTree::leaf(h(offset + 1));
    if (k == 0) {
        // dashed chain over offset+1 .. offset+m+1
        ExtendedMistakeTree t = ExtendedMistakeTree::leaf(h(offset + m + 1));
        for (int i = m; i >= 1; --i)
            t = ExtendedMistakeTree::node(std::to_string(offset + i + 1), Label::plus,
                                          ExtendedMistakeTree::leaf(h(offset + i)), t);
        return t;
    }
    const std::uint64_t r_minus = binom_leq(m - 1, k);
    return ExtendedMistakeTree::node(std::to_string(offset + r_minus + 1), Label::plus,
                                     threshold_rec(offset, k - 1, m - 1),
                                     threshold_rec(offset + r_minus, k, m - 1));
}

}  // namespace

ExtendedMistakeTree threshold_tree(std::size_t n, int k, int m) {
    if (k < 0 || m < 0) throw std::invalid_argument("threshold_tree needs k, m >= 0");
    if (binom_leq(m, static_cast<std::uint64_t>(k) + 1) > n)
        throw std::invalid_argument("threshold_tree needs binom_leq(m, k+1) <= n");
    return threshold_rec(0, k, m);
}

std::uint64_t singleton_tree_points(std::size_t l, std::size_t m) {
    if (l == 0 || m == 0) return 0;
    return 1 + singleton_tree_points(l - 1, m - 1) + singleton_tree_points(l, m - 1);
}

namespace {

ExtendedMistakeTree singleton_rec(const Domain& d, std::size_t l, std::size_t m, std::vector<std::size_t>& flips,
                                  std::size_t& next) {
    auto name = [&](std::vector<std::size_t> f) {
        std::sort(f.begin(), f.end());
        return singleton_union_name(d, f);
    };
    if (m == 0) return ExtendedMistakeTree::leaf(name(flips));
    const std::size_t x = next++;
    flips.push_back(x);
    ExtendedMistakeTree left = l == 1 ? ExtendedMistakeTree::leaf(name(flips)) : singleton_rec(d, l - 1, m - 1, flips, next);
    flips.pop_back();
    ExtendedMistakeTree right = singleton_rec(d, l, m - 1, flips, next);
    return ExtendedMistakeTree::node(d.point(x), Label::plus, std::move(left), std::move(right));
}

}  // namespace

ExtendedMistakeTree singleton_tree(const Domain& domain, std::size_t l, std::size_t m) {
    if (l == 0) throw std::invalid_argument("singleton_tree needs l >= 1");
    const std::uint64_t need = singleton_tree_points(l, m);
    if (need > domain.size())
        throw std::invalid_argument("singleton_tree needs " + std::to_string(need) + " points, domain has " +
                                    std::to_string(domain.size()));
    std::vector<std::size_t> flips;
    std::size_t next = 0;
    return singleton_rec(domain, l, m, flips, next);
}

}  // namespace abstain
