#include "support/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gen {

using abstain::Domain;
using abstain::Label;

namespace {

std::vector<Label> labeling(std::uint64_t bits, std::size_t D) {
    std::vector<Label> r(D);
    for (std::size_t x = 0; x < D; ++x) r[x] = (bits >> x) & 1 ? Label::plus : Label::minus;
    return r;
}

}  // namespace

HypothesisClass random_class_over(std::mt19937_64& rng, const Domain& d, std::size_t size) {
    const std::size_t D = d.size();
    const std::uint64_t space = std::uint64_t{1} << D;
    size = std::min<std::uint64_t>(size, space);
    std::set<std::uint64_t> picked;
    std::uniform_int_distribution<std::uint64_t> pick(0, space - 1);
    while (picked.size() < size) picked.insert(pick(rng));
    std::vector<HypothesisClass::Row> rows;
    std::size_t i = 0;
    // shuffle order so index order is not sorted by bit pattern
    std::vector<std::uint64_t> order(picked.begin(), picked.end());
    std::shuffle(order.begin(), order.end(), rng);
    for (auto b : order) rows.emplace_back("g" + std::to_string(i++), labeling(b, D));
    return HypothesisClass::from_table(d, std::move(rows));
}

HypothesisClass random_class(std::mt19937_64& rng, std::size_t max_h, std::size_t max_d) {
    const std::size_t D = std::uniform_int_distribution<std::size_t>(1, max_d)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_h)(rng);
    return random_class_over(rng, Domain::numbered(D), n);
}

std::vector<HypothesisClass> all_classes(std::size_t D, std::size_t max_h) {
    const std::size_t space = std::size_t{1} << D;
    if (space > 16) throw std::invalid_argument("all_classes: domain too large");
    std::vector<HypothesisClass> out;
    const Domain d = Domain::numbered(D);
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << space); ++subset) {
        if (static_cast<std::size_t>(__builtin_popcountll(subset)) > max_h) continue;
        std::vector<HypothesisClass::Row> rows;
        for (std::size_t b = 0; b < space; ++b)
            if ((subset >> b) & 1) rows.emplace_back("g" + std::to_string(b), labeling(b, D));
        out.push_back(HypothesisClass::from_table(d, std::move(rows)));
    }
    return out;
}

HypothesisClass from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_strings: no rows");
    const Domain d = Domain::numbered(rows[0].size());
    std::vector<HypothesisClass::Row> table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Label> r;
        for (char c : rows[i]) r.push_back(c == '+' ? Label::plus : Label::minus);
        table.emplace_back("r" + std::to_string(i), std::move(r));
    }
    return HypothesisClass::from_table(d, std::move(table));
}

abstain::Sequence random_sequence(std::mt19937_64& rng, std::size_t D, std::size_t len) {
    abstain::Sequence s;
    std::uniform_int_distribution<std::size_t> px(0, D - 1);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < len; ++i) s.push_back({px(rng), coin(rng) ? Label::plus : Label::minus});
    return s;
}

abstain::AdviceStream random_advice(std::mt19937_64& rng, std::size_t max_n, std::size_t max_t) {
    abstain::AdviceStream s;
    s.n_experts = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
    const std::size_t T = std::uniform_int_distribution<std::size_t>(0, max_t)(rng);
    // bias toward streams where some expert is nearly right, so both verdicts occur
    std::bernoulli_distribution coin(0.5);
    std::uniform_real_distribution<double> u(0, 1);
    const double noise = u(rng) * 0.5;
    for (std::size_t t = 0; t < T; ++t) {
        abstain::AdviceRound r;
        r.label = coin(rng) ? Label::plus : Label::minus;
        for (std::size_t i = 0; i < s.n_experts; ++i) {
            if (i == 0)
                r.advice.push_back(u(rng) < noise ? -r.label : r.label);
            else
                r.advice.push_back(coin(rng) ? Label::plus : Label::minus);
        }
        std::shuffle(r.advice.begin(), r.advice.end(), rng);
        s.rounds.push_back(std::move(r));
    }
    return s;
}

Suite standard_suite(std::uint64_t seed) {
    Suite s;
    for (std::size_t n = 1; n <= 16; ++n) {
        s.names.push_back("thresholds(" + std::to_string(n) + ")");
        s.classes.push_back(abstain::thresholds(n));
    }
    for (std::size_t D = 1; D <= 6; ++D)
        for (std::size_t l = 0; l <= std::min<std::size_t>(2, D); ++l) {
            s.names.push_back("C^" + std::to_string(l) + "(D=" + std::to_string(D) + ")");
            s.classes.push_back(abstain::singleton_unions(Domain::numbered(D), l));
        }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 200; ++i) {
        s.names.push_back("random#" + std::to_string(i));
        s.classes.push_back(random_class(rng, 10, 6));
    }
    return s;
}

}  // namespace gen
