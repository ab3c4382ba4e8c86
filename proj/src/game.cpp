#include "abstain/game.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace abstain {

void Transcript::record(std::size_t point, std::string point_id, Prediction yhat, Label y) {
    const bool mistake = yhat == predict(-y);
    const bool abstained = yhat == Prediction::abstain;
    rounds.push_back({rounds.size() + 1, point, std::move(point_id), yhat, y, mistake || abstained});
    mistakes += mistake;
    abstentions += abstained;
    nontrivial_rounds += mistake || abstained;
}

bool Transcript::consistent() const {
    std::size_t m = 0, a = 0, n = 0;
    for (std::size_t i = 0; i < rounds.size(); ++i) {
        const auto& r = rounds[i];
        const bool mistake = r.prediction == predict(-r.label);
        const bool abstained = r.prediction == Prediction::abstain;
        if (r.t != i + 1 || r.nontrivial != (mistake || abstained)) return false;
        m += mistake;
        a += abstained;
        n += r.nontrivial;
    }
    return m == mistakes && a == abstentions && n == nontrivial_rounds;
}

Transcript run(OnlineLearner& learner, Adversary& adversary, std::size_t max_rounds) {
    if (!(learner.domain() == adversary.domain()))
        throw std::invalid_argument("learner and adversary use different domains");
    Transcript tr;
    const Domain& d = adversary.domain();
    while (true) {
        auto x = adversary.next();
        if (!x) break;
        if (tr.rounds.size() == max_rounds) {
            tr.status = RunStatus::truncated;
            break;
        }
        const Prediction yhat = learner.predict(*x);
        const Label y = adversary.respond(yhat);
        learner.observe(*x, yhat, y);
        tr.record(*x, d.point(*x), yhat, y);
    }
    return tr;
}

Transcript stream_run(OnlineLearner& learner, const Sequence& seq) {
    Transcript tr;
    const Domain& d = learner.domain();
    for (const auto& e : seq) {
        if (e.point >= d.size()) throw std::out_of_range("stream point outside the learner's domain");
        const Prediction yhat = learner.predict(e.point);
        learner.observe(e.point, yhat, e.label);
        tr.record(e.point, d.point(e.point), yhat, e.label);
    }
    return tr;
}

std::optional<bool> check_szb(const Transcript& tr, int k, int m) {
    if (tr.status == RunStatus::truncated) return std::nullopt;
    return static_cast<long>(tr.mistakes) <= k && static_cast<long>(tr.nontrivial_rounds) <= m;
}

void write_transcript_jsonl(std::ostream& out, const Transcript& tr) {
    using ojson = nlohmann::ordered_json;
    for (const auto& r : tr.rounds) {
        ojson j;
        j["t"] = r.t;
        j["x"] = r.point_id;
        j["pred"] = std::string(to_string(r.prediction));
        j["y"] = std::string(to_string(r.label));
        j["nontrivial"] = r.nontrivial;
        out << j.dump() << '\n';
    }
    ojson s;
    s["summary"]["rounds"] = tr.rounds.size();
    s["summary"]["mistakes"] = tr.mistakes;
    s["summary"]["abstentions"] = tr.abstentions;
    s["summary"]["nontrivial"] = tr.nontrivial_rounds;
    s["summary"]["status"] = tr.status == RunStatus::completed ? "completed" : "truncated";
    out << s.dump() << '\n';
}

FractionalPrediction IntegralLearner::predict(std::size_t x) {
    last_ = inner_.predict(x);
    if (last_ == Prediction::plus) return {0, 1};
    if (last_ == Prediction::minus) return {1, 0};
    return {0, 0};
}

void IntegralLearner::observe(std::size_t x, const FractionalPrediction&, Label y) { inner_.observe(x, last_, y); }

std::pair<double, double> round_penalties(const FractionalPrediction& f, Label y) {
    f.check();
    const double mistake = y == Label::minus ? f.p_plus : f.p_minus;
    return {mistake, std::max(0.0, 1.0 - f.p_plus - f.p_minus)};
}

std::optional<Transcript> RandomizedTranscript::integral(const Domain& d) const {
    Transcript tr;
    tr.status = status;
    for (const auto& r : rounds) {
        Prediction p;
        if (r.prediction.p_plus == 1 && r.prediction.p_minus == 0)
            p = Prediction::plus;
        else if (r.prediction.p_minus == 1 && r.prediction.p_plus == 0)
            p = Prediction::minus;
        else if (r.prediction.p_minus == 0 && r.prediction.p_plus == 0)
            p = Prediction::abstain;
        else
            return std::nullopt;
        tr.record(r.point, d.point(r.point), p, r.label);
    }
    return tr;
}

RandomizedTranscript run_randomized(FractionalLearner& learner, RandomizedAdversary& adversary,
                                    std::size_t max_rounds) {
    RandomizedTranscript tr;
    while (true) {
        auto x = adversary.next();
        if (!x) break;
        if (tr.rounds.size() == max_rounds) {
            tr.status = RunStatus::truncated;
            break;
        }
        const FractionalPrediction f = learner.predict(*x);
        f.check();
        const Label y = adversary.respond(f);
        learner.observe(*x, f, y);
        const auto [mp, ap] = round_penalties(f, y);
        tr.ledger.mistake_penalty += mp;
        tr.ledger.abstention_penalty += ap;
        tr.rounds.push_back({tr.rounds.size() + 1, *x, f, y, mp, ap});
    }
    return tr;
}

}  // namespace abstain
