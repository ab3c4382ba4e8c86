#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "abstain/hypothesis.hpp"

namespace abstain {

struct AdviceRound {
    std::vector<Label> advice;
    Label label;
};

struct AdviceStream {
    std::size_t n_experts = 0;
    std::vector<AdviceRound> rounds;
};

// First expert wrong on at most l rounds.
std::optional<std::size_t> l_mistake_check(const AdviceStream& s, std::size_t l);

struct Reduction {
    HypothesisClass experts;  // h_i = i-th advice coordinate
    Sequence sequence;
};

// One fresh point per round, named "t<round>:<advice signs>".
Reduction reduce(const AdviceStream& s);

// Header `y,e1,...,eN`, rows label first.
AdviceStream read_advice_csv(std::istream& in);

}  // namespace abstain
