#include "support/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace oracle {

std::uint64_t binom_leq_count(unsigned t, unsigned k) {
    if (t > 24) throw std::invalid_argument("binom_leq_count: t too large");
    std::uint64_t n = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << t); ++s)
        if (static_cast<unsigned>(__builtin_popcountll(s)) <= k) ++n;
    return n;
}

int thresholds_closed_form(int n, int k) {
    // Pascal's triangle up to a generous row
    const int rows = 200;
    std::vector<std::vector<unsigned __int128>> c(rows + 1);
    for (int i = 0; i <= rows; ++i) {
        c[i].assign(i + 1, 1);
        for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
    }
    auto leq = [&](int t, int kk) {
        unsigned __int128 s = 0;
        for (int i = 0; i <= std::min(t, kk); ++i) s += c[t][i];
        return s;
    };
    int t = 0;
    while (t + 1 <= rows && leq(t + 1, k + 1) <= static_cast<unsigned __int128>(n)) ++t;
    return t;
}

std::set<std::vector<Label>> rows_of(const HypothesisClass& h) {
    std::set<std::vector<Label>> out;
    for (std::size_t i = 0; i < h.size(); ++i) out.emplace(h.row(i).begin(), h.row(i).end());
    return out;
}

std::set<std::vector<Label>> hamming_ball_union(const HypothesisClass& h, unsigned l) {
    const std::size_t D = h.domain().size();
    if (D > 12) throw std::invalid_argument("hamming_ball_union: domain too large");
    std::set<std::vector<Label>> out;
    for (std::uint64_t g = 0; g < (std::uint64_t{1} << D); ++g) {
        std::vector<Label> row(D);
        for (std::size_t x = 0; x < D; ++x) row[x] = (g >> x) & 1 ? Label::minus : Label::plus;
        for (std::size_t i = 0; i < h.size(); ++i) {
            unsigned dist = 0;
            for (std::size_t x = 0; x < D; ++x) dist += h.label(i, x) != row[x];
            if (dist <= l) {
                out.insert(row);
                break;
            }
        }
    }
    return out;
}

namespace {

struct Game {
    const HypothesisClass& h;
    std::vector<std::uint64_t> pos;  // members labelling x with +1
    std::unordered_map<std::uint64_t, int> memo;

    explicit Game(const HypothesisClass& cls) : h(cls) {
        if (h.size() > 56) throw std::invalid_argument("game oracle: class too large");
        for (std::size_t x = 0; x < h.domain().size(); ++x) {
            std::uint64_t m = 0;
            for (std::size_t i = 0; i < h.size(); ++i)
                if (h.label(i, x) == Label::plus) m |= std::uint64_t{1} << i;
            pos.push_back(m);
        }
    }

    // k < 0 encodes the no-abstention game
    int value(std::uint64_t s, int k) {
        const std::uint64_t key = (s << 7) | static_cast<std::uint64_t>(k + 1);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        int best = 0;
        for (std::size_t x = 0; x < pos.size(); ++x) {
            const std::uint64_t p = s & pos[x], n = s & ~pos[x];
            if (!p || !n) continue;
            int learner;
            if (k < 0) {
                learner = std::min(std::max(value(p, k), 1 + value(n, k)), std::max(value(n, k), 1 + value(p, k)));
            } else {
                learner = 1 + std::max(value(p, k), value(n, k));
                if (k >= 1) {
                    learner = std::min(learner, std::max(value(p, k), 1 + value(n, k - 1)));
                    learner = std::min(learner, std::max(value(n, k), 1 + value(p, k - 1)));
                }
            }
            best = std::max(best, learner);
        }
        memo[key] = best;
        return best;
    }
};

}  // namespace

int game_value(const HypothesisClass& h, int k) {
    if (h.empty()) throw std::invalid_argument("game oracle: empty class");
    if (k > 100) throw std::invalid_argument("game oracle: budget too large");
    Game g(h);
    return g.value((h.size() == 64 ? ~0ull : (std::uint64_t{1} << h.size()) - 1), k);
}

int mistake_game_value(const HypothesisClass& h) {
    if (h.empty()) throw std::invalid_argument("game oracle: empty class");
    Game g(h);
    return g.value((std::uint64_t{1} << h.size()) - 1, -1);
}

int min_disagreements(const HypothesisClass& h, const abstain::Sequence& seq) {
    std::map<std::size_t, Label> forced;
    for (const auto& e : seq) {
        auto [it, fresh] = forced.emplace(e.point, e.label);
        if (!fresh && it->second != e.label) return -1;
    }
    int best = -1;
    for (std::size_t i = 0; i < h.size(); ++i) {
        int d = 0;
        for (auto [x, y] : forced) d += h.label(i, x) != y;
        if (best < 0 || d < best) best = d;
    }
    return best;
}

}  // namespace oracle
