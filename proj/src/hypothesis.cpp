#include "abstain/hypothesis.hpp"

#include <atomic>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace abstain {

Domain::Domain(std::vector<std::string> points) : points_(std::move(points)) {
    index_.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (!index_.emplace(points_[i], i).second)
            throw std::invalid_argument("duplicate point identifier '" + points_[i] + "'");
}

Domain Domain::numbered(std::size_t n) {
    std::vector<std::string> pts;
    pts.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) pts.push_back(std::to_string(i));
    return Domain(std::move(pts));
}

std::optional<std::size_t> Domain::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t Domain::index_of(std::string_view id) const {
    if (auto i = find(id)) return *i;
    throw std::out_of_range("unknown point '" + std::string(id) + "'");
}

struct HypothesisClass::Data {
    Domain domain;
    std::vector<std::string> names;
    std::vector<Label> table;  // row-major, names.size() x domain.size()
    std::vector<Mask> positive;
    std::unordered_map<std::string, std::size_t> by_name;
    std::uint64_t id = 0;
};

namespace {

std::uint64_t next_class_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

struct RowHash {
    std::size_t operator()(const std::vector<Label>& r) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto y : r) h = (h ^ static_cast<std::size_t>(y == Label::plus)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

HypothesisClass::HypothesisClass() {
    auto d = std::make_shared<Data>();
    d->id = next_class_id();
    data_ = std::move(d);
}

HypothesisClass HypothesisClass::from_table(Domain domain, std::vector<Row> rows, bool dedup) {
    auto d = std::make_shared<Data>();
    const std::size_t D = domain.size();
    std::unordered_set<std::vector<Label>, RowHash> seen;
    for (auto& [name, labels] : rows) {
        if (labels.size() != D)
            throw std::invalid_argument("hypothesis '" + name + "' has " + std::to_string(labels.size()) +
                                        " labels, expected " + std::to_string(D));
        for (auto y : labels)
            if (y != Label::plus && y != Label::minus)
                throw std::invalid_argument("hypothesis '" + name + "' has a label outside {-1,+1}");
        if (d->by_name.count(name)) throw std::invalid_argument("duplicate hypothesis name '" + name + "'");
        if (dedup && !seen.insert(labels).second) continue;
        d->by_name.emplace(name, d->names.size());
        d->names.push_back(std::move(name));
        d->table.insert(d->table.end(), labels.begin(), labels.end());
    }
    const std::size_t n = d->names.size();
    d->positive.assign(D, Mask(n));
    for (std::size_t h = 0; h < n; ++h)
        for (std::size_t x = 0; x < D; ++x)
            if (d->table[h * D + x] == Label::plus) d->positive[x].set(h);
    d->domain = std::move(domain);
    d->id = next_class_id();
    return HypothesisClass(std::move(d));
}

const Domain& HypothesisClass::domain() const noexcept { return data_->domain; }
std::size_t HypothesisClass::size() const noexcept { return data_->names.size(); }
const std::string& HypothesisClass::name(std::size_t h) const { return data_->names.at(h); }

std::optional<std::size_t> HypothesisClass::find(std::string_view name) const {
    auto it = data_->by_name.find(std::string(name));
    if (it == data_->by_name.end()) return std::nullopt;
    return it->second;
}

Label HypothesisClass::label(std::size_t h, std::size_t x) const {
    if (h >= size() || x >= data_->domain.size()) throw std::out_of_range("label lookup out of range");
    return data_->table[h * data_->domain.size() + x];
}

std::span<const Label> HypothesisClass::row(std::size_t h) const {
    if (h >= size()) throw std::out_of_range("hypothesis index out of range");
    const std::size_t D = data_->domain.size();
    return {data_->table.data() + h * D, D};
}

const Mask& HypothesisClass::positive_on(std::size_t x) const {
    if (x >= data_->positive.size()) throw std::out_of_range("point index out of range");
    return data_->positive[x];
}

VersionSpace HypothesisClass::full() const { return VersionSpace(*this, Mask(size(), true)); }
std::uint64_t HypothesisClass::id() const noexcept { return data_->id; }

VersionSpace::VersionSpace(HypothesisClass cls, Mask mask) : cls_(std::move(cls)), mask_(std::move(mask)) {
    if (mask_.size() != cls_.size()) throw std::invalid_argument("mask does not match class size");
}

VersionSpace VersionSpace::restrict(std::size_t x, Label y) const {
    const Mask& pos = cls_.positive_on(x);
    return VersionSpace(cls_, y == Label::plus ? (mask_ & pos) : mask_.without(pos));
}

VersionSpace VersionSpace::restrict(std::string_view point, Label y) const {
    return restrict(cls_.domain().index_of(point), y);
}

std::optional<Label> VersionSpace::unanimous(std::size_t x) const {
    if (empty()) return std::nullopt;
    const std::size_t pos = (mask_ & cls_.positive_on(x)).count();
    if (pos == 0) return Label::minus;
    if (pos == size()) return Label::plus;
    return std::nullopt;
}

std::vector<std::size_t> dis(const HypothesisClass& cls, const Mask& m) {
    std::vector<std::size_t> out;
    const std::size_t total = m.count();
    if (total < 2) return out;
    for (std::size_t x = 0; x < cls.domain().size(); ++x) {
        const std::size_t pos = (m & cls.positive_on(x)).count();
        if (pos > 0 && pos < total) out.push_back(x);
    }
    return out;
}

std::vector<std::size_t> dis(const VersionSpace& v) { return dis(v.hypothesis_class(), v.mask()); }

HypothesisClass thresholds(std::size_t n) {
    if (n == 0) throw std::invalid_argument("thresholds needs n >= 1");
    std::vector<HypothesisClass::Row> rows;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Label> r(n);
        for (std::size_t x = 1; x <= n; ++x) r[x - 1] = x <= i ? Label::plus : Label::minus;
        rows.emplace_back("h" + std::to_string(i), std::move(r));
    }
    return HypothesisClass::from_table(Domain::numbered(n), std::move(rows));
}

std::string singleton_union_name(const Domain& domain, const std::vector<std::size_t>& flips) {
    std::string s = "{";
    for (std::size_t i = 0; i < flips.size(); ++i) {
        if (i) s += '|';
        s += domain.point(flips[i]);
    }
    return s + "}";
}

HypothesisClass singleton_unions(const Domain& domain, std::size_t l) {
    const std::size_t D = domain.size();
    if (l > D) throw std::invalid_argument("singleton_unions needs l <= domain size");
    std::vector<HypothesisClass::Row> rows;
    std::vector<std::size_t> pick;
    // subsets by size, lexicographic within a size
    for (std::size_t s = 0; s <= l; ++s) {
        pick.resize(s);
        for (std::size_t i = 0; i < s; ++i) pick[i] = i;
        while (true) {
            std::vector<Label> r(D, Label::plus);
            for (auto x : pick) r[x] = Label::minus;
            rows.emplace_back(singleton_union_name(domain, pick), std::move(r));
            std::size_t i = s;
            while (i > 0 && pick[i - 1] == D - s + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return HypothesisClass::from_table(domain, std::move(rows));
}

HypothesisClass product(const HypothesisClass& a, const HypothesisClass& b) {
    if (!(a.domain() == b.domain())) throw std::invalid_argument("product needs a shared domain");
    const std::size_t D = a.domain().size();
    std::vector<HypothesisClass::Row> rows;
    std::unordered_set<std::vector<Label>, RowHash> seen;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto ra = a.row(i);
        for (std::size_t j = 0; j < b.size(); ++j) {
            auto rb = b.row(j);
            std::vector<Label> r(D);
            for (std::size_t x = 0; x < D; ++x) r[x] = ra[x] == rb[x] ? Label::plus : Label::minus;
            if (!seen.insert(r).second) continue;
            rows.emplace_back(a.name(i) + "\xC2\xB7" + b.name(j), std::move(r));
        }
    }
    return HypothesisClass::from_table(a.domain(), std::move(rows));
}

HypothesisClass bias_expand(const HypothesisClass& h, std::size_t l) {
    return product(h, singleton_unions(h.domain(), l));
}

std::optional<std::string> realizable_check(const HypothesisClass& h, const Sequence& seq) {
    for (std::size_t i = 0; i < h.size(); ++i) {
        bool ok = true;
        for (const auto& e : seq)
            if (h.label(i, e.point) != e.label) {
                ok = false;
                break;
            }
        if (ok) return h.name(i);
    }
    return std::nullopt;
}

bool bias_check(const HypothesisClass& h, std::size_t l, const Sequence& seq) {
    std::map<std::size_t, Label> labels;
    for (const auto& e : seq) {
        auto [it, fresh] = labels.emplace(e.point, e.label);
        if (!fresh && it->second != e.label) return false;
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
        std::size_t wrong = 0;
        for (auto [x, y] : labels)
            if (h.label(i, x) != y && ++wrong > l) break;
        if (wrong <= l) return true;
    }
    return false;
}

Sequence to_sequence(const Domain& d, const std::vector<std::pair<std::string, Label>>& named) {
    Sequence s;
    s.reserve(named.size());
    for (const auto& [p, y] : named) s.push_back({d.index_of(p), y});
    return s;
}

}  // namespace abstain
