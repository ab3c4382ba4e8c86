#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "abstain/mask.hpp"
#include "abstain/types.hpp"

namespace abstain {

// Ordered list of distinct point identifiers.
class Domain {
public:
    Domain() = default;
    explicit Domain(std::vector<std::string> points);
    // Points "1".."n".
    static Domain numbered(std::size_t n);

    std::size_t size() const noexcept { return points_.size(); }
    const std::string& point(std::size_t i) const { return points_.at(i); }
    const std::vector<std::string>& points() const noexcept { return points_; }
    std::optional<std::size_t> find(std::string_view id) const;
    // Throws std::out_of_range for unknown identifiers.
    std::size_t index_of(std::string_view id) const;

    friend bool operator==(const Domain& a, const Domain& b) { return a.points_ == b.points_; }

private:
    std::vector<std::string> points_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct Example {
    std::size_t point;
    Label label;
    friend bool operator==(const Example&, const Example&) = default;
};
using Sequence = std::vector<Example>;

class VersionSpace;

// Immutable table of named ±1 labelings. Copies share storage.
class HypothesisClass {
public:
    using Row = std::pair<std::string, std::vector<Label>>;

    HypothesisClass();
    // Throws std::invalid_argument on wrong row length or duplicate names.
    static HypothesisClass from_table(Domain domain, std::vector<Row> rows, bool dedup = true);

    const Domain& domain() const noexcept;
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    const std::string& name(std::size_t h) const;
    std::optional<std::size_t> find(std::string_view name) const;
    Label label(std::size_t h, std::size_t x) const;
    std::span<const Label> row(std::size_t h) const;
    // Hypotheses labelling x with +1.
    const Mask& positive_on(std::size_t x) const;

    VersionSpace full() const;
    // Distinct per constructed table; copies keep it.
    std::uint64_t id() const noexcept;

private:
    struct Data;
    explicit HypothesisClass(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

class VersionSpace {
public:
    VersionSpace(HypothesisClass cls, Mask mask);

    const HypothesisClass& hypothesis_class() const noexcept { return cls_; }
    const Mask& mask() const noexcept { return mask_; }
    std::size_t size() const noexcept { return mask_.count(); }
    bool empty() const noexcept { return mask_.none(); }
    bool contains(std::size_t h) const { return mask_.test(h); }
    std::vector<std::size_t> members() const { return mask_.indices(); }

    VersionSpace restrict(std::size_t x, Label y) const;
    VersionSpace restrict(std::string_view point, Label y) const;
    // The shared label at x, or nullopt when members disagree or the space is empty.
    std::optional<Label> unanimous(std::size_t x) const;

    friend bool operator==(const VersionSpace& a, const VersionSpace& b) {
        return a.cls_.id() == b.cls_.id() && a.mask_ == b.mask_;
    }

private:
    HypothesisClass cls_;
    Mask mask_;
};

inline VersionSpace restrict(const VersionSpace& v, std::size_t x, Label y) { return v.restrict(x, y); }
std::vector<std::size_t> dis(const VersionSpace& v);
std::vector<std::size_t> dis(const HypothesisClass& cls, const Mask& m);

HypothesisClass thresholds(std::size_t n);
HypothesisClass singleton_unions(const Domain& domain, std::size_t l);
HypothesisClass product(const HypothesisClass& a, const HypothesisClass& b);
HypothesisClass bias_expand(const HypothesisClass& h, std::size_t l);
// Name of the constant +1 member of singleton_unions, and the naming used for flip sets.
std::string singleton_union_name(const Domain& domain, const std::vector<std::size_t>& flips);

// Name of the first hypothesis agreeing with every example.
std::optional<std::string> realizable_check(const HypothesisClass& h, const Sequence& seq);
bool bias_check(const HypothesisClass& h, std::size_t l, const Sequence& seq);

Sequence to_sequence(const Domain& d, const std::vector<std::pair<std::string, Label>>& named);

}  // namespace abstain
