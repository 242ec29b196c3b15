#include "swapsensus/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace swapsensus {

namespace {

[[noreturn]] void bad_utf8(std::size_t offset)
{
    throw InstanceError(InstanceError::Kind::invalid_symbol, 0,
                        "malformed UTF-8 at byte " + std::to_string(offset));
}

bool is_blank(std::string_view line)
{
    return line.find_first_not_of(" \t\r\v\f") == std::string_view::npos;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\v\f");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\v\f");
    return s.substr(first, last - first + 1);
}

} // namespace

std::u32string decode_utf8(std::string_view text)
{
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const auto lead = static_cast<unsigned char>(text[i]);
        std::size_t extra = 0;
        char32_t cp = 0;
        if (lead < 0x80) {
            cp = lead;
        } else if ((lead & 0xE0) == 0xC0) {
            extra = 1;
            cp = lead & 0x1F;
        } else if ((lead & 0xF0) == 0xE0) {
            extra = 2;
            cp = lead & 0x0F;
        } else if ((lead & 0xF8) == 0xF0) {
            extra = 3;
            cp = lead & 0x07;
        } else {
            bad_utf8(i);
        }
        if (i + extra >= text.size() && extra > 0)
            bad_utf8(i);
        for (std::size_t b = 1; b <= extra; ++b) {
            const auto cont = static_cast<unsigned char>(text[i + b]);
            if ((cont & 0xC0) != 0x80)
                bad_utf8(i + b);
            cp = (cp << 6) | (cont & 0x3F);
        }
        // overlong forms, surrogates and out-of-range values
        static constexpr char32_t min_for_length[] = {0, 0x80, 0x800, 0x10000};
        if (cp < min_for_length[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            bad_utf8(i);
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

std::string encode_utf8(std::u32string_view symbols)
{
    std::string out;
    out.reserve(symbols.size());
    for (char32_t cp : symbols) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::map<Symbol, std::size_t> multiset_signature(const Word& w)
{
    std::map<Symbol, std::size_t> counts;
    for (Symbol s : w.symbols())
        ++counts[s];
    return counts;
}

Instance::Instance(std::vector<Word> words) : _words(std::move(words))
{
    if (_words.empty())
        throw InstanceError(InstanceError::Kind::empty_instance, 0, "instance has no words");
    const std::size_t n = _words.front().size();
    if (n == 0)
        throw InstanceError(InstanceError::Kind::empty_instance, 0, "words must be non-empty");
    for (std::size_t i = 1; i < _words.size(); ++i) {
        if (_words[i].size() != n)
            throw InstanceError(InstanceError::Kind::unequal_lengths, 0,
                                "word " + std::to_string(i + 1) + " has length "
                                    + std::to_string(_words[i].size()) + ", expected "
                                    + std::to_string(n));
    }
    std::set<Symbol> seen;
    for (const auto& w : _words)
        seen.insert(w.symbols().begin(), w.symbols().end());
    _alphabet.assign(seen.begin(), seen.end());
}

std::vector<Symbol> Instance::column(std::size_t p) const
{
    std::vector<Symbol> col;
    col.reserve(_words.size());
    for (const auto& w : _words)
        col.push_back(w[p]);
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
    return col;
}

bool Instance::contains_symbol(Symbol s) const
{
    return std::binary_search(_alphabet.begin(), _alphabet.end(), s);
}

Instance parse_instance(std::string_view text)
{
    std::vector<Word> words;
    std::size_t expected = 0;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const auto line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;

        if (is_blank(line) || line.front() == '#')
            continue;
        const auto body = trim(line);
        std::u32string symbols;
        try {
            symbols = decode_utf8(body);
        } catch (const InstanceError& e) {
            throw InstanceError(InstanceError::Kind::invalid_symbol, line_no,
                                "line " + std::to_string(line_no) + ": " + e.what());
        }
        for (char32_t cp : symbols) {
            if (cp == U' ' || cp == U'\t' || cp < 0x20)
                throw InstanceError(InstanceError::Kind::invalid_symbol, line_no,
                                    "line " + std::to_string(line_no)
                                        + ": whitespace or control character inside a word");
        }
        if (words.empty()) {
            expected = symbols.size();
        } else if (symbols.size() != expected) {
            throw InstanceError(InstanceError::Kind::unequal_lengths, line_no,
                                "line " + std::to_string(line_no) + ": word has length "
                                    + std::to_string(symbols.size()) + ", expected "
                                    + std::to_string(expected));
        }
        words.emplace_back(std::move(symbols));
    }
    if (words.empty())
        throw InstanceError(InstanceError::Kind::empty_instance, 0, "instance has no words");
    return Instance(std::move(words));
}

std::string format_instance(const Instance& inst)
{
    std::string out;
    for (const auto& w : inst.words()) {
        out += w.to_utf8();
        out += '\n';
    }
    return out;
}

BudgetedInstance::BudgetedInstance(Instance inst, std::vector<std::size_t> b)
  : instance(std::move(inst)), budgets(std::move(b))
{
    if (budgets.size() != instance.size())
        throw LengthMismatch("expected " + std::to_string(instance.size()) + " budgets, got "
                             + std::to_string(budgets.size()));
}

std::size_t BudgetedInstance::total_budget() const
{
    return std::accumulate(budgets.begin(), budgets.end(), std::size_t{0});
}

std::size_t BudgetedInstance::max_budget() const
{
    return budgets.empty() ? 0 : *std::max_element(budgets.begin(), budgets.end());
}

std::vector<std::size_t> parse_budgets(std::string_view text)
{
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n')
                ++i;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',') {
            ++i;
        } else {
            std::size_t value = 0;
            const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc() || ptr == text.data() + i)
                throw Error("budgets: expected a non-negative integer at offset " + std::to_string(i));
            out.push_back(value);
            i = static_cast<std::size_t>(ptr - text.data());
        }
    }
    return out;
}

std::string_view to_string(Metric m)
{
    switch (m) {
    case Metric::hamming: return "hamming";
    case Metric::swap: return "swap";
    case Metric::swap_hamming: return "swap-hamming";
    }
    return "?";
}

std::string_view to_string(Objective o)
{
    switch (o) {
    case Objective::radius: return "radius";
    case Objective::sum: return "sum";
    case Objective::radius_sum: return "radius-sum";
    }
    return "?";
}

std::optional<Metric> parse_metric(std::string_view s)
{
    if (s == "hamming")
        return Metric::hamming;
    if (s == "swap")
        return Metric::swap;
    if (s == "swap-hamming")
        return Metric::swap_hamming;
    return std::nullopt;
}

std::optional<Objective> parse_objective(std::string_view s)
{
    if (s == "radius")
        return Objective::radius;
    if (s == "sum")
        return Objective::sum;
    if (s == "radius-sum")
        return Objective::radius_sum;
    return std::nullopt;
}

} // namespace swapsensus
