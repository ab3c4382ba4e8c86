#include "abstain/experts.hpp"

#include <istream>
#include <stdexcept>

#include "abstain/class_io.hpp"

namespace abstain {

std::optional<std::size_t> l_mistake_check(const AdviceStream& s, std::size_t l) {
    for (std::size_t i = 0; i < s.n_experts; ++i) {
        std::size_t wrong = 0;
        for (const auto& r : s.rounds) wrong += r.advice.at(i) != r.label;
        if (wrong <= l) return i;
    }
    return std::nullopt;
}

Reduction reduce(const AdviceStream& s) {
    std::vector<std::string> points;
    for (std::size_t t = 0; t < s.rounds.size(); ++t) {
        const auto& r = s.rounds[t];
        if (r.advice.size() != s.n_experts) throw std::invalid_argument("advice vector has the wrong length");
        std::string id = "t" + std::to_string(t + 1) + ":";
        for (auto y : r.advice) id += y == Label::plus ? '+' : '-';
        points.push_back(std::move(id));
    }
    std::vector<HypothesisClass::Row> rows;
    for (std::size_t i = 0; i < s.n_experts; ++i) {
        std::vector<Label> labels;
        for (const auto& r : s.rounds) labels.push_back(r.advice[i]);
        rows.emplace_back("e" + std::to_string(i + 1), std::move(labels));
    }
    Reduction out{HypothesisClass::from_table(Domain(std::move(points)), std::move(rows)), {}};
    for (std::size_t t = 0; t < s.rounds.size(); ++t) out.sequence.push_back({t, s.rounds[t].label});
    return out;
}

AdviceStream read_advice_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    AdviceStream s;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cells = split_csv_line(line);
        if (!header) {
            if (cells[0] != "y") throw ParseError(lineno, 1, "header must start with 'y'");
            s.n_experts = cells.size() - 1;
            header = true;
            continue;
        }
        if (cells.size() != s.n_experts + 1)
            throw ParseError(lineno, 1,
                             "expected " + std::to_string(s.n_experts + 1) + " fields, got " + std::to_string(cells.size()));
        AdviceRound r;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            auto y = parse_label(cells[c]);
            if (!y) throw ParseError(lineno, c + 1, "label '" + cells[c] + "' is not -1 or +1");
            if (c == 0)
                r.label = *y;
            else
                r.advice.push_back(*y);
        }
        s.rounds.push_back(std::move(r));
    }
    if (!header) throw ParseError(1, 1, "missing header line");
    return s;
}

}  // namespace abstain
