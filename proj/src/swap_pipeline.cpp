#include "swapsensus/swap_pipeline.hpp"

#include <functional>
#include <string>

#include "swapsensus/hamming.hpp"
#include "swapsensus/report.hpp"

namespace swapsensus {

namespace {

struct Encoded
{
    Disentanglement dis;
    std::vector<SwapStr> h;
    std::string union_ones;
};

/// Binary consensus solver on the encoded words with their budgets.
using HamSolver = std::function<ConsensusAnswer(const BudgetedInstance&)>;

std::variant<Encoded, std::string> encode(const Instance& inst, SwapPipelineTrace* trace)
{
    auto result = disentangle(inst);
    if (auto* f = std::get_if<DisentangleFailure>(&result))
        return "no common matching word: " + f->reason;
    Encoded e{std::get<Disentanglement>(std::move(result)), {}, {}};
    const Word& base = e.dis.strings_prime.front();
    e.union_ones.assign(base.size() - 1, '0');
    for (const auto& w : e.dis.strings_prime) {
        auto m = swap_string(base, w);
        const auto* h = std::get_if<SwapStr>(&m);
        if (h == nullptr)
            throw CertificationFailure("disentangled words do not match");
        for (std::size_t p : h->ones())
            e.union_ones[p] = '1';
        e.h.push_back(*h);
    }
    if (e.union_ones.find("11") != std::string::npos)
        throw CertificationFailure("encoded swap strings overlap at adjacent positions");
    if (trace != nullptr) {
        trace->disentanglement = e.dis;
        trace->encoded = e.h;
    }
    return e;
}

/// Decodes a binary Hamming witness and certifies every swap distance
/// against budget plus Hamming distance.
ConsensusAnswer decode(const Instance& inst, const Encoded& e, const Word& h_word,
                       SearchStats stats, SwapPipelineTrace* trace)
{
    std::string bits;
    for (std::size_t p = 0; p < h_word.size(); ++p)
        bits += h_word[p] == U'1' && e.union_ones[p] == '1' ? '1' : '0';
    const SwapStr h_star = SwapStr::parse(bits);
    Word t = apply_swaps(e.dis.strings_prime.front(), h_star);
    if (trace != nullptr) {
        trace->h_star = h_star;
        trace->decoded = t;
    }
    auto answer = make_feasible_answer(inst, std::move(t), Metric::swap, stats);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const std::size_t expected = e.dis.budgets[i] + popcount(xor_compose(e.h[i].bits(), bits));
        if (answer.distances[i] != expected)
            throw CertificationFailure("swap distance of word " + std::to_string(i + 1)
                                       + " is not budget plus Hamming distance");
    }
    return answer;
}

Instance encoded_instance(const Encoded& e)
{
    std::vector<Word> words;
    for (const auto& h : e.h)
        words.push_back(h.to_word());
    return Instance(std::move(words));
}

ConsensusAnswer run(const Instance& inst, const HamSolver& solve, SwapPipelineTrace* trace)
{
    Stopwatch watch;
    auto encoded = encode(inst, trace);
    if (auto* why = std::get_if<std::string>(&encoded))
        return make_infeasible_answer(*why, SearchStats{});
    const auto& e = std::get<Encoded>(encoded);

    if (inst.length() == 1) {
        // every input is the same single letter; no swap string has a bit
        auto answer = decode(inst, e, Word(), SearchStats{}, trace);
        answer.stats.elapsed = watch.elapsed();
        return answer;
    }
    auto ham = solve(BudgetedInstance(encoded_instance(e), e.dis.budgets));
    if (!ham.feasible())
        return ham;
    SearchStats stats = ham.stats;
    auto answer = decode(inst, e, *ham.solution, stats, trace);
    answer.stats.elapsed = watch.elapsed();
    return answer;
}

} // namespace

ConsensusAnswer sum_consensus_swap(const Instance& inst, std::optional<std::size_t> D,
                                   SwapPipelineTrace* trace)
{
    auto answer = run(
        inst,
        [](const BudgetedInstance& b) { return sum_consensus_ham(b.instance); },
        trace);
    if (answer.feasible() && D && answer.sum_distance > *D)
        return make_infeasible_answer("minimum sum " + std::to_string(answer.sum_distance)
                                          + " exceeds D = " + std::to_string(*D),
                                      answer.stats);
    return answer;
}

ConsensusAnswer radius_consensus_swap(const Instance& inst, std::size_t d, SwapPipelineTrace* trace)
{
    auto answer = run(
        inst,
        [d](const BudgetedInstance& b) { return radius_consensus_ham_mixed({b, d}); },
        trace);
    if (answer.feasible() && answer.max_distance > d)
        throw CertificationFailure("swap radius witness exceeds d");
    return answer;
}

ConsensusAnswer rs_consensus_swap(const Instance& inst, std::size_t d,
                                  std::optional<std::size_t> D, SwapPipelineTrace* trace)
{
    auto answer = run(
        inst,
        [d, D](const BudgetedInstance& b) { return rs_consensus_ham_mixed({b, d, D}); },
        trace);
    if (answer.feasible()) {
        if (answer.max_distance > d)
            throw CertificationFailure("swap radius+sum witness exceeds d");
        if (D && answer.sum_distance > *D)
            throw CertificationFailure("swap radius+sum witness exceeds D");
    }
    return answer;
}

} // namespace swapsensus
