#include "swapsensus/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "swapsensus/disentangle.hpp"
#include "swapsensus/hamming.hpp"
#include "swapsensus/oracle.hpp"
#include "swapsensus/report.hpp"
#include "swapsensus/sh_metric.hpp"
#include "swapsensus/sh_radius.hpp"
#include "swapsensus/sh_sum.hpp"
#include "swapsensus/swap_algebra.hpp"
#include "swapsensus/swap_pipeline.hpp"

namespace swapsensus::cli {

namespace {

using json = nlohmann::ordered_json;

/// A usage problem reported with exit code 2.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path, std::istream& in)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

std::vector<std::string> utf8_words(const std::vector<Word>& words)
{
    std::vector<std::string> out;
    for (const auto& w : words)
        out.push_back(w.to_utf8());
    return out;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& positions)
{
    std::vector<std::size_t> out;
    for (std::size_t p : positions)
        out.push_back(p + 1);
    return out;
}

std::string join(const std::vector<std::size_t>& values)
{
    std::string out;
    for (std::size_t v : values)
        out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

json stats_json(const SearchStats& s)
{
    return json{{"nodes_expanded", s.nodes_expanded},
                {"dp_states", s.dp_states},
                {"oracle_enumerated", s.oracle_enumerated},
                {"max_depth", s.max_depth},
                {"elapsed_ms", std::chrono::duration<double, std::milli>(s.elapsed).count()}};
}

json answer_json(const ConsensusAnswer& a, const RunConfig& c)
{
    json j;
    j["status"] = a.feasible() ? "feasible" : "infeasible";
    j["metric"] = to_string(c.metric);
    j["objective"] = to_string(c.objective);
    j["witness"] = a.solution ? json(a.solution->to_utf8()) : json(nullptr);
    j["distances"] = a.distances;
    j["max"] = a.feasible() ? json(a.max_distance) : json(nullptr);
    j["sum"] = a.feasible() ? json(a.sum_distance) : json(nullptr);
    j["reason"] = a.reason;
    j["stats"] = stats_json(a.stats);
    return j;
}

void print_answer(const ConsensusAnswer& a, std::ostream& out)
{
    out << "status: " << (a.feasible() ? "feasible" : "infeasible") << '\n';
    if (a.feasible()) {
        out << "witness: " << a.solution->to_utf8() << '\n';
        out << "distances: " << join(a.distances) << '\n';
        out << "max: " << a.max_distance << '\n';
        out << "sum: " << a.sum_distance << '\n';
    } else {
        out << "reason: " << a.reason << '\n';
    }
}

json intervals_json(const Disentanglement& dis)
{
    json out = json::array();
    for (const auto& iv : dis.tangled_intervals)
        out.push_back({iv.first + 1, iv.last + 1});
    return out;
}

/// The pipeline in the order it runs: input, tangled intervals, forced
/// letters, disentangled words, swap strings, h*, decoded witness,
/// distances.
json trace_json(const Instance& inst, const SwapPipelineTrace& t, const ConsensusAnswer& a)
{
    json j;
    j["input"] = utf8_words(inst.words());
    if (t.disentanglement) {
        const auto& dis = *t.disentanglement;
        j["tangled_intervals"] = intervals_json(dis);
        j["forced_pattern"] = dis.forced_pattern();
        j["disentangled"] = utf8_words(dis.strings_prime);
        j["budgets"] = dis.budgets;
        j["delta"] = dis.total;
        json enc = json::array();
        for (const auto& h : t.encoded)
            enc.push_back(h.bits());
        j["encoded"] = enc;
    }
    j["h_star"] = t.h_star ? json(t.h_star->bits()) : json(nullptr);
    j["witness"] = t.decoded ? json(t.decoded->to_utf8()) : json(nullptr);
    j["distances"] = a.distances;
    return j;
}

void print_trace(const SwapPipelineTrace& t, std::ostream& out)
{
    if (!t.disentanglement)
        return;
    const auto& dis = *t.disentanglement;
    out << "tangled intervals:";
    for (const auto& iv : dis.tangled_intervals)
        out << " [" << iv.first + 1 << ", " << iv.last + 1 << "]";
    out << "\nforced pattern: " << dis.forced_pattern() << '\n';
    for (std::size_t i = 0; i < dis.strings_prime.size(); ++i)
        out << "s'" << i + 1 << " = " << dis.strings_prime[i].to_utf8() << "  budget "
            << dis.budgets[i] << '\n';
    out << "delta: " << dis.total << '\n';
    for (std::size_t i = 0; i < t.encoded.size(); ++i)
        out << "h" << i + 1 << " = " << t.encoded[i].bits() << '\n';
    if (t.h_star)
        out << "h* = " << t.h_star->bits() << '\n';
}

json table_json(const ShSumTable& table)
{
    json rows = json::array();
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        for (const auto& e : table.rows[r])
            rows.push_back({{"i", r}, {"W", one_based(e.set)}, {"prefix", e.prefix.to_utf8()},
                            {"cost", e.cost}});
    return rows;
}

std::string set_label(const std::vector<std::size_t>& set)
{
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i)
        out += (i ? "," : "") + std::to_string(set[i] + 1);
    return out + "}";
}

/// One line per swap set, one column per row of the table.
void print_table(const ShSumTable& table, std::ostream& out)
{
    std::vector<std::vector<std::size_t>> sets;
    for (const auto& row : table.rows)
        for (const auto& e : row)
            if (std::find(sets.begin(), sets.end(), e.set) == sets.end())
                sets.push_back(e.set);
    std::size_t k = 0;
    for (const auto& set : sets)
        for (std::size_t j : set)
            k = std::max(k, j + 1);
    auto indicator = [k](const std::vector<std::size_t>& set) {
        std::string bits(k, '0');
        for (std::size_t j : set)
            bits[j] = '1';
        return bits;
    };
    auto indicator_less = [&](const auto& a, const auto& b) { return indicator(a) < indicator(b); };
    std::sort(sets.begin(), sets.end(), indicator_less);

    out << "W";
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        out << '\t' << "i=" << r;
    out << '\n';
    for (const auto& set : sets) {
        out << set_label(set);
        for (const auto& row : table.rows) {
            auto it = std::find_if(row.begin(), row.end(), [&](const auto& e) { return e.set == set; });
            out << '\t' << (it == row.end() ? std::string("-") : it->prefix.to_utf8());
        }
        out << '\n';
    }
}

std::size_t require_d(const RunConfig& c)
{
    if (!c.d)
        throw UsageError("-d is required for objective " + std::string(to_string(c.objective)));
    return *c.d;
}

int emit(const ConsensusAnswer& a, const RunConfig& c, json extra, std::ostream& out)
{
    if (c.output == Output::json) {
        json j = answer_json(a, c);
        for (auto& [key, value] : extra.items())
            j[key] = value;
        out << j.dump(2) << '\n';
    } else {
        print_answer(a, out);
    }
    return a.feasible() ? exit_feasible : exit_infeasible;
}

int run_consensus(const RunConfig& c, std::istream& in, std::ostream& out)
{
    const Instance inst = parse_instance(read_text(c.input_path, in));
    std::optional<std::vector<std::size_t>> budgets;
    if (c.budgets_path) {
        if (c.metric != Metric::hamming || c.objective == Objective::sum)
            throw UsageError("--budgets applies to hamming radius and radius-sum only");
        budgets = parse_budgets(read_text(*c.budgets_path, in));
    }
    const auto budgeted = [&] {
        return BudgetedInstance(inst, budgets.value_or(std::vector<std::size_t>(inst.size(), 0)));
    };
    json extra = json::object();

    switch (c.metric) {
    case Metric::hamming: {
        ConsensusAnswer a;
        if (c.objective == Objective::sum) {
            a = sum_consensus_ham(inst);
            if (c.D && a.sum_distance > *c.D)
                a = make_infeasible_answer("minimum sum " + std::to_string(a.sum_distance)
                                               + " exceeds D = " + std::to_string(*c.D),
                                           a.stats);
        } else if (c.objective == Objective::radius) {
            a = radius_consensus_ham_mixed({budgeted(), require_d(c)});
        } else {
            a = rs_consensus_ham_mixed({budgeted(), require_d(c), c.D});
        }
        return emit(a, c, extra, out);
    }
    case Metric::swap: {
        SwapPipelineTrace trace;
        ConsensusAnswer a;
        if (c.objective == Objective::sum)
            a = sum_consensus_swap(inst, c.D, &trace);
        else if (c.objective == Objective::radius)
            a = radius_consensus_swap(inst, require_d(c), &trace);
        else
            a = rs_consensus_swap(inst, require_d(c), c.D, &trace);
        if (c.trace) {
            if (c.output == Output::json)
                extra["trace"] = trace_json(inst, trace, a);
            else
                print_trace(trace, out);
        }
        return emit(a, c, extra, out);
    }
    case Metric::swap_hamming: {
        if (c.objective == Objective::radius_sum)
            throw UsageError("unsupported: open problem (radius-sum under swap-hamming)");
        if (c.objective == Objective::radius)
            return emit(radius_consensus_sh(inst, require_d(c), ShRadiusOptions{c.all_roots}), c,
                        extra, out);
        ShSumTable table;
        auto a = sum_consensus_sh(inst, c.D, &table);
        if (c.dump_table) {
            if (c.output == Output::json)
                extra["table"] = table_json(table);
            else
                print_table(table, out);
        }
        return emit(a, c, extra, out);
    }
    }
    return exit_error;
}

int run_distance(const RunConfig& c, std::ostream& out)
{
    const Word s = Word::from_utf8(c.word1);
    const Word t = Word::from_utf8(c.word2);
    json j;
    j["metric"] = to_string(c.metric);
    std::optional<std::size_t> cost;
    std::string human;
    switch (c.metric) {
    case Metric::hamming: {
        cost = hamming_distance(s, t);
        std::vector<std::size_t> miss;
        for (std::size_t p = 0; p < s.size(); ++p)
            if (s[p] != t[p])
                miss.push_back(p + 1);
        j["substitutions"] = miss;
        human = "substitutions: " + join(miss);
        break;
    }
    case Metric::swap: {
        auto m = swap_string(s, t);
        if (const auto* h = std::get_if<SwapStr>(&m)) {
            cost = h->popcount();
            j["swap_string"] = h->bits();
            j["swaps"] = one_based(h->ones());
            human = "swap string: " + h->bits() + "\nswaps: " + join(one_based(h->ones()));
        } else {
            const auto p = std::get<NotMatching>(m).position + 1;
            j["not_matching_at"] = p;
            human = "not matching at position " + std::to_string(p);
        }
        break;
    }
    case Metric::swap_hamming: {
        const auto r = sh_distance(s, t);
        cost = r.cost;
        j["swaps"] = one_based(r.witness.swaps);
        j["substitutions"] = one_based(r.witness.substitutions);
        human = "swaps: " + join(one_based(r.witness.swaps))
                + "\nsubstitutions: " + join(one_based(r.witness.substitutions));
        break;
    }
    }
    j["distance"] = cost ? json(*cost) : json("inf");
    if (c.output == Output::json)
        out << j.dump(2) << '\n';
    else
        out << "distance: " << (cost ? std::to_string(*cost) : "inf") << '\n' << human << '\n';
    return cost ? exit_feasible : exit_infeasible;
}

int run_disentangle(const RunConfig& c, std::istream& in, std::ostream& out)
{
    const Instance inst = parse_instance(read_text(c.input_path, in));
    auto result = disentangle(inst);
    json j;
    if (const auto* f = std::get_if<DisentangleFailure>(&result)) {
        j = {{"status", "infeasible"}, {"reason", "no common matching word: " + f->reason}};
        if (c.output == Output::json)
            out << j.dump(2) << '\n';
        else
            out << "status: infeasible\nreason: no common matching word: " << f->reason << '\n';
        return exit_infeasible;
    }
    const auto& dis = std::get<Disentanglement>(result);
    if (c.output == Output::json) {
        j = {{"status", "feasible"},
             {"disentangled", utf8_words(dis.strings_prime)},
             {"budgets", dis.budgets},
             {"delta", dis.total},
             {"tangled_intervals", intervals_json(dis)},
             {"forced_pattern", dis.forced_pattern()}};
        out << j.dump(2) << '\n';
    } else {
        out << "status: feasible\n";
        SwapPipelineTrace t;
        t.disentanglement = dis;
        print_trace(t, out);
    }
    return exit_feasible;
}

int run_oracle(const RunConfig& c, std::istream& in, std::ostream& out)
{
    OracleQuery q{parse_instance(read_text(c.input_path, in)), c.metric, c.objective, c.d, c.D,
                  std::nullopt, std::nullopt};
    if (c.budgets_path)
        q.budgets = parse_budgets(read_text(*c.budgets_path, in));
    if (c.objective == Objective::radius)
        require_d(c);
    return emit(brute_force(q), c, json::object(), out);
}

int run_gen(const RunConfig& c, std::ostream& out)
{
    if (!c.seed)
        throw UsageError("--seed is required");
    const auto planted = gen_planted(*c.seed, c.n, c.k, c.sigma, c.ops);
    const std::string text = format_instance(planted.instance);
    if (!c.output_path) {
        out << text;
        return exit_feasible;
    }
    std::ofstream file(*c.output_path, std::ios::binary);
    if (!file)
        throw UsageError("cannot write " + *c.output_path);
    file << text;
    std::ofstream sidecar(*c.output_path + ".json", std::ios::binary);
    if (!sidecar)
        throw UsageError("cannot write " + *c.output_path + ".json");
    sidecar << json{{"seed", *c.seed}, {"n", c.n},         {"k", c.k},
                    {"sigma", c.sigma}, {"ops", c.ops}, {"center", planted.center.to_utf8()}}
                   .dump(2)
            << '\n';
    return exit_feasible;
}

} // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err)
{
    try {
        switch (config.command) {
        case Command::distance: return run_distance(config, out);
        case Command::consensus: return run_consensus(config, in, out);
        case Command::disentangle: return run_disentangle(config, in, out);
        case Command::oracle: return run_oracle(config, in, out);
        case Command::gen: return run_gen(config, out);
        }
    } catch (const InstanceError& e) {
        err << "error: ";
        if (e.line() > 0)
            err << "line " << e.line() << ": ";
        err << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_error;
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err)
{
    CLI::App app{"Consensus strings under swap, Swap+Hamming and Hamming distances", "swapsensus"};
    app.require_subcommand(1);
    RunConfig c;
    std::string metric = "hamming";
    std::string objective = "sum";
    std::string output = "human";

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", output, "human or json")
            ->check(CLI::IsMember({"human", "json"}));
    };
    auto add_metric = [&](CLI::App* sub) {
        sub->add_option("--distance,--metric", metric, "hamming, swap or swap-hamming")
            ->check(CLI::IsMember({"hamming", "swap", "swap-hamming"}));
    };
    auto add_problem = [&](CLI::App* sub) {
        add_metric(sub);
        sub->add_option("--objective", objective, "radius, sum or radius-sum")
            ->check(CLI::IsMember({"radius", "sum", "radius-sum"}));
        sub->add_option("-d", c.d, "radius bound");
        sub->add_option("-D", c.D, "sum bound");
        sub->add_option("--budgets", c.budgets_path, "file with one budget per word");
        sub->add_option("input", c.input_path, "instance file, - for stdin");
        add_output(sub);
    };

    auto* distance = app.add_subcommand("distance", "distance between two words");
    add_metric(distance);
    distance->add_option("w1", c.word1)->required();
    distance->add_option("w2", c.word2)->required();
    add_output(distance);

    auto* consensus = app.add_subcommand("consensus", "solve a consensus problem");
    add_problem(consensus);
    consensus->add_flag("--trace", c.trace, "include the swap pipeline trace");
    consensus->add_flag("--dump-table", c.dump_table, "print the Swap+Hamming sum table");
    consensus->add_flag("--all-roots", c.all_roots, "restart the radius search from every word");

    auto* dis = app.add_subcommand("disentangle", "apply the necessary swaps");
    dis->add_option("input", c.input_path, "instance file, - for stdin");
    add_output(dis);

    auto* oracle = app.add_subcommand("oracle", "exhaustive reference answer");
    add_problem(oracle);

    auto* gen = app.add_subcommand("gen", "planted random instance");
    gen->add_option("--seed", c.seed, "random seed")->required();
    gen->add_option("-n", c.n, "word length");
    gen->add_option("-k", c.k, "number of words");
    gen->add_option("--sigma", c.sigma, "alphabet size");
    gen->add_option("--ops", c.ops, "operations per word");
    gen->add_option("-o", c.output_path, "instance file; a .json sidecar is written next to it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_feasible : exit_error;
    }

    if (distance->parsed())
        c.command = Command::distance;
    else if (consensus->parsed())
        c.command = Command::consensus;
    else if (dis->parsed())
        c.command = Command::disentangle;
    else if (oracle->parsed())
        c.command = Command::oracle;
    else
        c.command = Command::gen;
    c.metric = *parse_metric(metric);
    c.objective = *parse_objective(objective);
    c.output = output == "json" ? Output::json : Output::human;
    return run(c, in, out, err);
}

} // namespace swapsensus::cli
