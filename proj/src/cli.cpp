#include "abstain/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "abstain/adversaries.hpp"
#include "abstain/class_io.hpp"
#include "abstain/dimensions.hpp"
#include "abstain/experts.hpp"
#include "abstain/game.hpp"
#include "abstain/learners.hpp"
#include "abstain/tree_io.hpp"
#include "abstain/trees.hpp"

namespace abstain {

namespace {

// Input problems that should exit with the usage code.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string path_str(const std::vector<Label>& path) {
    if (path.empty()) return "(root)";
    std::string s;
    for (std::size_t i = 0; i < path.size(); ++i) s += (i ? "," : "") + std::string(to_string(path[i]));
    return s;
}

unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ABSTAIN_DIM_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

int closed_form_thresholds(int n, int k) {
    int t = 0;
    while (binom_leq(t + 1, k + 1) <= static_cast<std::uint64_t>(n)) ++t;
    return t;
}

int cmd_table(std::ostream& out, std::ostream& err, int n_max, int k_max, bool check) {
    const std::size_t cells = static_cast<std::size_t>(n_max) * (k_max + 1);
    std::vector<int> values(cells, 0);
    std::atomic<int> next_n{1};
    auto work = [&] {
        // each n is its own class, so each worker keeps its own caches
        for (int n = next_n++; n <= n_max; n = next_n++) {
            const HypothesisClass h = thresholds(n);
            DimCache cache;
            for (int k = 0; k <= k_max; ++k)
                values[static_cast<std::size_t>(n - 1) * (k_max + 1) + k] = eldim(h.full(), k, cache).value();
        }
    };
    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(n_max));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    out << 'n';
    for (int k = 0; k <= k_max; ++k) out << ",k=" << k;
    out << '\n';
    int status = 0;
    for (int n = 1; n <= n_max; ++n) {
        out << n;
        for (int k = 0; k <= k_max; ++k) {
            const int v = values[static_cast<std::size_t>(n - 1) * (k_max + 1) + k];
            out << ',' << v;
            if (check && v != closed_form_thresholds(n, k)) {
                err << "closed form mismatch at (n=" << n << ", k=" << k << "): eldim " << v << ", closed form "
                    << closed_form_thresholds(n, k) << '\n';
                status = 1;
            }
        }
        out << '\n';
    }
    return status;
}

struct SimulateArgs {
    std::string learner, adversary, class_path, transcript_path;
    int k = 0;
    std::optional<std::size_t> max_rounds;
    std::optional<std::size_t> l, depth;
    std::optional<double> adversary_k;
};

std::unique_ptr<OnlineLearner> make_learner(const std::string& kind, const HypothesisClass& h, int k,
                                            std::shared_ptr<DimCache> cache) {
    if (kind == "soa") return std::make_unique<Soa>(h, std::move(cache));
    return std::make_unique<SoaDk>(h, k, std::move(cache));
}

void print_summary(std::ostream& out, const Transcript& tr) {
    out << "rounds=" << tr.rounds.size() << " mistakes=" << tr.mistakes << " abstentions=" << tr.abstentions
        << " nontrivial=" << tr.nontrivial_rounds
        << " status=" << (tr.status == RunStatus::completed ? "completed" : "truncated") << '\n';
}

int cmd_simulate(std::ostream& out, std::ostream& err, const SimulateArgs& a) {
    const HypothesisClass base = load_class(a.class_path);
    if (base.empty()) throw UsageError("class is empty");
    const bool expanded = a.adversary == "bias" || a.adversary == "randomized";
    if (expanded && !a.l) throw UsageError("--adversary " + a.adversary + " needs -l");
    const HypothesisClass h =
        expanded ? bias_expand(base, std::min(*a.l, base.domain().size())) : base;
    auto cache = std::make_shared<DimCache>();
    auto learner = make_learner(a.learner, h, a.k, cache);
    const std::size_t default_cap = 4 * static_cast<std::size_t>(std::max(1, eldim_upper_finite(h, a.k)));

    if (a.adversary == "randomized") {
        if (!a.depth) throw UsageError("--adversary randomized needs --depth");
        const double adv_k = a.adversary_k.value_or(a.k);
        RandomizedAdversary adv(*a.l, adv_k, singleton_tree(base.domain(), *a.l, *a.depth), base.domain());
        IntegralLearner wrapped(*learner);
        const auto rt = run_randomized(wrapped, adv, a.max_rounds.value_or(4 * std::max<std::size_t>(1, *a.depth)));
        const auto tr = rt.integral(h.domain());
        if (!a.transcript_path.empty()) {
            std::ofstream f(a.transcript_path);
            write_transcript_jsonl(f, *tr);
        }
        print_summary(out, *tr);
        std::ostringstream pen;
        pen.precision(12);
        pen << "mistake_penalty=" << rt.ledger.mistake_penalty << " abstention_penalty=" << rt.ledger.abstention_penalty
            << " epsilon=" << adv.epsilon() << '\n';
        out << pen.str();
        return 0;
    }

    std::unique_ptr<Adversary> adv;
    if (a.adversary == "minimax") {
        adv = std::make_unique<MinimaxAdversary>(h.full(), a.k, cache);
    } else if (a.adversary == "bias") {
        adv = std::make_unique<TreeAdversary>(bias_adversary(base, std::min(*a.l, base.domain().size()), a.k));
    } else if (a.adversary.rfind("tree:", 0) == 0) {
        auto tree = load_tree(a.adversary.substr(5));
        auto report = validate(tree, h);
        if (!report.valid) throw UsageError("tree does not validate: " + report.message + " at " + path_str(report.path));
        adv = std::make_unique<TreeAdversary>(tree, h);
    } else {
        throw UsageError("unknown adversary '" + a.adversary + "'");
    }
    const Transcript tr = run(*learner, *adv, a.max_rounds.value_or(default_cap));
    if (!a.transcript_path.empty()) {
        std::ofstream f(a.transcript_path);
        if (!f) throw UsageError("cannot write '" + a.transcript_path + "'");
        write_transcript_jsonl(f, tr);
    }
    print_summary(out, tr);
    if (a.learner == "soadk") {
        const DimValue m = eldim(h.full(), a.k, *cache);
        auto verdict = check_szb(tr, a.k, m.value());
        out << "eldim=" << m.to_string() << " szb=" << (!verdict ? "n/a" : *verdict ? "pass" : "fail") << '\n';
        if (verdict && !*verdict) {
            err << "SOA.DK exceeded its (k, eldim) bound\n";
            return 1;
        }
    }
    return 0;
}

int cmd_experts(std::ostream& out, std::ostream& err, const std::string& path, std::size_t l, std::optional<int> k,
                bool simulate) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    const AdviceStream s = read_advice_csv(in);
    const Reduction r = reduce(s);
    const auto expert = l_mistake_check(s, l);
    const bool biased = bias_check(r.experts, l, r.sequence);
    out << "experts=" << s.n_experts << " rounds=" << s.rounds.size() << '\n';
    out << "l_mistake=" << (expert ? "true" : "false");
    if (expert) out << " expert=e" << (*expert + 1);
    out << '\n' << "bias_check=" << (biased ? "true" : "false") << '\n';
    if (expert.has_value() != biased) {
        err << "reduction mismatch: l-mistake and l-bias verdicts differ\n";
        return 1;
    }
    if (!simulate) return 0;
    if (!k) throw UsageError("--simulate needs -k");
    if (*k < static_cast<int>(l)) throw UsageError("--simulate needs k >= l");
    if (!expert) {
        out << "simulation skipped: stream violates the l-mistake assumption\n";
        return 0;
    }
    const HypothesisClass h = bias_expand(r.experts, std::min(l, r.experts.domain().size()));
    auto cache = std::make_shared<DimCache>();
    SoaDk learner(h, *k, cache);
    const Transcript tr = stream_run(learner, r.sequence);
    print_summary(out, tr);
    const DimValue m = eldim(h.full(), *k, *cache);
    const bool ok = *check_szb(tr, *k, m.value());
    out << "eldim=" << m.to_string() << " szb=" << (ok ? "pass" : "fail") << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Mistake/abstention tradeoffs for finite hypothesis classes"};
    app.require_subcommand(1);

    std::string class_path, tree_path, out_path, witness_path;
    int k = 0, m = 0, t = 0;
    std::size_t l = 0;
    bool alg_form = false, exact = false;

    auto* c_ldim = app.add_subcommand("ldim", "Littlestone dimension");
    c_ldim->add_option("class", class_path, "class file (.csv or .json)")->required();

    auto* c_eldim = app.add_subcommand("eldim", "Extended Littlestone dimension");
    c_eldim->add_option("class", class_path)->required();
    c_eldim->add_option("-k", k, "mistake budget")->required()->check(CLI::NonNegativeNumber);
    c_eldim->add_option("--witness", witness_path, "write a witness tree (.dot or .json)");
    c_eldim->add_flag("--alg-form", alg_form, "cross-check against the alternative recurrence");

    auto* c_shatter = app.add_subcommand("shatter", "tree shattering coefficient");
    c_shatter->add_option("class", class_path)->required();
    c_shatter->add_option("-t", t, "depth")->required()->check(CLI::NonNegativeNumber);
    c_shatter->add_flag("--exact", exact, "also enumerate every tree (small inputs only)");

    auto* c_witness = app.add_subcommand("witness", "export a (k, eldim)-difficult tree");
    c_witness->add_option("class", class_path)->required();
    c_witness->add_option("-k", k)->required()->check(CLI::NonNegativeNumber);
    c_witness->add_option("-o", out_path, "output (.dot or .json)")->required();

    auto* c_verify = app.add_subcommand("verify-tree", "check validity and (k,m)-difficulty");
    c_verify->add_option("tree", tree_path, "tree file (.json or .dot)")->required();
    c_verify->add_option("class", class_path)->required();
    c_verify->add_option("-k", k)->required()->check(CLI::NonNegativeNumber);
    c_verify->add_option("-m", m)->required()->check(CLI::NonNegativeNumber);

    auto* c_bias = app.add_subcommand("bias-expand", "write H times C^l");
    c_bias->add_option("class", class_path)->required();
    c_bias->add_option("-l", l)->required();
    c_bias->add_option("-o", out_path)->required();

    SimulateArgs sim;
    std::size_t sim_l = 0, sim_depth = 0, sim_rounds = 0;
    double sim_adv_k = 0;
    auto* c_sim = app.add_subcommand("simulate", "play a learner against an adversary");
    c_sim->add_option("--learner", sim.learner)->required()->check(CLI::IsMember({"soa", "soadk"}));
    c_sim->add_option("--adversary", sim.adversary, "minimax | tree:<file> | bias | randomized")->required();
    c_sim->add_option("--class", sim.class_path)->required();
    c_sim->add_option("-k", sim.k)->required()->check(CLI::NonNegativeNumber);
    auto* o_rounds = c_sim->add_option("--max-rounds", sim_rounds);
    c_sim->add_option("--transcript", sim.transcript_path, "JSON lines output");
    auto* o_l = c_sim->add_option("-l", sim_l, "bias level for bias/randomized adversaries");
    auto* o_depth = c_sim->add_option("--depth", sim_depth, "tree depth for the randomized adversary");
    auto* o_adv_k = c_sim->add_option("--adversary-k", sim_adv_k, "real budget for the randomized adversary");

    std::string family;
    int n_max = 0, k_max = 0;
    bool check = false;
    auto* c_table = app.add_subcommand("table", "eldim table for a class family");
    c_table->add_option("family", family)->required()->check(CLI::IsMember({"thresholds"}));
    c_table->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
    c_table->add_option("--k-max", k_max)->required()->check(CLI::NonNegativeNumber);
    c_table->add_flag("--check-closed-form", check);

    std::string advice_path;
    int ek = 0;
    bool simulate = false;
    auto* c_exp = app.add_subcommand("experts-reduce", "reduce expert advice to l-bias classification");
    c_exp->add_option("advice", advice_path)->required();
    c_exp->add_option("-l", l)->required();
    auto* o_ek = c_exp->add_option("-k", ek)->check(CLI::NonNegativeNumber);
    c_exp->add_flag("--simulate", simulate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (*c_ldim) {
            out << ldim(load_class(class_path)).to_string() << '\n';
            return 0;
        }
        if (*c_eldim) {
            const HypothesisClass h = load_class(class_path);
            DimCache cache;
            const DimValue v = eldim(h.full(), k, cache);
            out << v.to_string() << '\n';
            if (!witness_path.empty()) {
                if (h.empty()) throw UsageError("no witness for an empty class");
                save_tree(witness_path, witness(h.full(), k, cache));
            }
            if (alg_form) {
                if (k < 1) throw UsageError("--alg-form needs k >= 1");
                DimCache alg_cache;
                const DimValue a = eldim_alg_form(h.full(), k, alg_cache);
                out << "alg-form " << a.to_string() << '\n';
                if (a != v) {
                    err << "alternative recurrence disagrees: " << a.to_string() << " vs " << v.to_string() << '\n';
                    return 1;
                }
            }
            return 0;
        }
        if (*c_shatter) {
            const HypothesisClass h = load_class(class_path);
            const auto s = shatter_recursive(h, t);
            out << s << '\n';
            if (exact) {
                std::uint64_t e = 0;
                try {
                    e = shatter_enumerative(h, t);
                } catch (const std::length_error& ex) {
                    throw UsageError(ex.what());
                }
                out << "exact " << e << '\n';
                if (e != s) {
                    err << "enumeration disagrees with the recursion\n";
                    return 1;
                }
            }
            return 0;
        }
        if (*c_witness) {
            const HypothesisClass h = load_class(class_path);
            if (h.empty()) throw UsageError("no witness for an empty class");
            DimCache cache;
            const auto tree = witness(h.full(), k, cache);
            save_tree(out_path, tree);
            out << "eldim=" << eldim(h.full(), k, cache).to_string() << " depth=" << tree.depth()
                << " leaves=" << tree.leaf_count() << '\n';
            return 0;
        }
        if (*c_verify) {
            const HypothesisClass h = load_class(class_path);
            const auto tree = load_tree(tree_path);
            auto report = validate(tree, h);
            if (!report.valid) {
                out << "invalid: " << report.message << " at " << path_str(report.path) << '\n';
                return 1;
            }
            auto d = check_difficulty(tree, k, m);
            if (d.is_difficult) {
                out << "valid, (" << k << "," << m << ")-difficult\n";
                return 0;
            }
            out << "valid, not (" << k << "," << m << ")-difficult: leaf at " << path_str(d.violating_leaf->path)
                << " has depth " << d.violating_leaf->depth << " with " << d.violating_leaf->min_solid
                << " solid edges\n";
            return 1;
        }
        if (*c_bias) {
            const HypothesisClass h = load_class(class_path);
            if (l > h.domain().size()) throw UsageError("-l exceeds the domain size");
            const HypothesisClass e = bias_expand(h, l);
            std::ofstream f(out_path);
            if (!f) throw UsageError("cannot write '" + out_path + "'");
            write_class_csv(f, e);
            out << "hypotheses=" << e.size() << '\n';
            return 0;
        }
        if (*c_sim) {
            if (*o_rounds) sim.max_rounds = sim_rounds;
            if (*o_l) sim.l = sim_l;
            if (*o_depth) sim.depth = sim_depth;
            if (*o_adv_k) sim.adversary_k = sim_adv_k;
            return cmd_simulate(out, err, sim);
        }
        if (*c_table) return cmd_table(out, err, n_max, k_max, check);
        if (*c_exp) return cmd_experts(out, err, advice_path, l, *o_ek ? std::optional<int>(ek) : std::nullopt, simulate);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace abstain
