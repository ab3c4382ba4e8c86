#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "abstain/adversaries.hpp"
#include "abstain/learners.hpp"

namespace abstain {

enum class RunStatus { completed, truncated };

struct Round {
    std::size_t t;
    std::size_t point;
    std::string point_id;
    Prediction prediction;
    Label label;
    bool nontrivial;
};

struct Transcript {
    std::vector<Round> rounds;
    std::size_t mistakes = 0;
    std::size_t abstentions = 0;
    std::size_t nontrivial_rounds = 0;
    RunStatus status = RunStatus::completed;

    void record(std::size_t point, std::string point_id, Prediction yhat, Label y);
    // Totals agree with a recount over rounds.
    bool consistent() const;
};

Transcript run(OnlineLearner& learner, Adversary& adversary, std::size_t max_rounds);
// Feeds a fixed sequence; trivial rounds are kept.
Transcript stream_run(OnlineLearner& learner, const Sequence& seq);
// mistakes <= k and nontrivial rounds <= m; no verdict for truncated runs.
std::optional<bool> check_szb(const Transcript& tr, int k, int m);

void write_transcript_jsonl(std::ostream& out, const Transcript& tr);

struct PenaltyLedger {
    double mistake_penalty = 0;
    double abstention_penalty = 0;
};

class FractionalLearner {
public:
    virtual ~FractionalLearner() = default;
    virtual FractionalPrediction predict(std::size_t x) = 0;
    virtual void observe(std::size_t x, const FractionalPrediction& f, Label y) = 0;
};

// Same prediction every round.
class ConstantFractionalLearner : public FractionalLearner {
public:
    explicit ConstantFractionalLearner(FractionalPrediction f) : f_(f) { f_.check(); }
    FractionalPrediction predict(std::size_t) override { return f_; }
    void observe(std::size_t, const FractionalPrediction&, Label) override {}

private:
    FractionalPrediction f_;
};

// Integral wrapper around a deterministic learner.
class IntegralLearner : public FractionalLearner {
public:
    explicit IntegralLearner(OnlineLearner& inner) : inner_(inner) {}
    FractionalPrediction predict(std::size_t x) override;
    void observe(std::size_t x, const FractionalPrediction& f, Label y) override;

private:
    OnlineLearner& inner_;
    Prediction last_ = Prediction::abstain;
};

struct SoftRound {
    std::size_t t;
    std::size_t point;
    FractionalPrediction prediction;
    Label label;
    double mistake_penalty;
    double abstention_penalty;
};

struct RandomizedTranscript {
    std::vector<SoftRound> rounds;
    PenaltyLedger ledger;
    RunStatus status = RunStatus::completed;
    // Deterministic transcript when every prediction was integral.
    std::optional<Transcript> integral(const Domain& d) const;
};

// Mistake and abstention penalty of one round.
std::pair<double, double> round_penalties(const FractionalPrediction& f, Label y);

RandomizedTranscript run_randomized(FractionalLearner& learner, RandomizedAdversary& adversary,
                                    std::size_t max_rounds);

}  // namespace abstain
