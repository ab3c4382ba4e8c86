#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "abstain/dim_cache.hpp"
#include "abstain/dim_value.hpp"
#include "abstain/hypothesis.hpp"

namespace abstain {

// Full binary tree: internal nodes carry a point and the side holding the dashed edge,
// leaves carry a hypothesis name. Left child is label -1, right child +1. Immutable.
class ExtendedMistakeTree {
public:
    static ExtendedMistakeTree leaf(std::string hypothesis);
    static ExtendedMistakeTree node(std::string point, Label dashed, ExtendedMistakeTree left,
                                    ExtendedMistakeTree right);

    bool is_leaf() const noexcept;
    // Leaf name or point id.
    const std::string& hypothesis() const;
    const std::string& point() const;
    Label dashed_side() const;
    const ExtendedMistakeTree& left() const;
    const ExtendedMistakeTree& right() const;
    const ExtendedMistakeTree& child(Label y) const { return y == Label::plus ? right() : left(); }

    std::size_t depth() const;
    std::size_t leaf_count() const;
    std::size_t internal_count() const;

    friend bool operator==(const ExtendedMistakeTree& a, const ExtendedMistakeTree& b);

private:
    struct Node;
    explicit ExtendedMistakeTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Complete binary tree without dashed edges.
class MistakeTree {
public:
    static MistakeTree leaf(std::string hypothesis);
    static MistakeTree node(std::string point, MistakeTree left, MistakeTree right);

    const ExtendedMistakeTree& shape() const noexcept { return tree_; }
    bool is_complete() const;
    std::size_t depth() const { return tree_.depth(); }
    // Adds a dashed edge toward every right child.
    ExtendedMistakeTree to_extended() const { return tree_; }

private:
    explicit MistakeTree(ExtendedMistakeTree t) : tree_(std::move(t)) {}
    ExtendedMistakeTree tree_;
};

struct ValidationReport {
    bool valid = true;
    std::string message;
    std::vector<Label> path;  // edge labels from the root to the offending node
};

// Label of the named hypothesis at a point; nullopt when the name is unknown.
// Called with membership_probe as the point to ask for membership only.
inline constexpr std::size_t membership_probe = static_cast<std::size_t>(-1);
using LeafEvaluator = std::function<std::optional<Label>(const std::string& hypothesis, std::size_t point)>;

ValidationReport validate(const ExtendedMistakeTree& t, const HypothesisClass& h);
ValidationReport validate(const ExtendedMistakeTree& t, const Domain& domain, const LeafEvaluator& eval);
// Leaves named as in singleton_union_name, checked for membership in C^l without materializing it.
ValidationReport validate_singleton_unions(const ExtendedMistakeTree& t, const Domain& domain, std::size_t l);

struct ViolatingLeaf {
    std::vector<Label> path;
    std::size_t depth;
    std::size_t min_solid;
};

struct DifficultyReport {
    bool is_difficult = true;
    std::optional<ViolatingLeaf> violating_leaf;
};

DifficultyReport check_difficulty(const ExtendedMistakeTree& t, int k, int m);
// Largest m for which t is (k,m)-difficult.
std::size_t max_difficulty(const ExtendedMistakeTree& t, int k);

ExtendedMistakeTree witness(const VersionSpace& v, int k, DimCache& cache);
// Complete mistake tree of the given depth; needs depth <= ldim(v).
MistakeTree mistake_tree(const VersionSpace& v, int depth, DimCache& cache);

// Largest m with a (k,m)-difficult tree of depth <= depth_cap, by enumerating every tree.
// Guarded to |h| <= 4, D <= 3, depth_cap <= 3.
DimValue exhaustive_max_difficulty(const HypothesisClass& h, int k, int depth_cap);

// Trees over thresholds(n) and over C^l.
ExtendedMistakeTree threshold_tree(std::size_t n, int k, int m);
// Points consumed by singleton_tree(., l, m).
std::uint64_t singleton_tree_points(std::size_t l, std::size_t m);
ExtendedMistakeTree singleton_tree(const Domain& domain, std::size_t l, std::size_t m);

}  // namespace abstain
