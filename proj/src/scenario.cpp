#include "ptrans/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <vector>

namespace ptrans {

namespace {

struct Token {
    std::string value;
    int line = 0;
    int column = 0;
};

const std::array<std::string_view, 14> kKnownKeys = {
    "mode",        "L1_plus",      "L1_minus",     "L2_plus",      "L2_minus",
    "theta1_plus", "theta1_minus", "theta2_plus",  "theta2_minus", "a",
    "k_min",       "k_max",        "samples",      "outputs",
};

std::string_view trim(std::string_view s, int& column) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
        ++column;
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_number(const Token& tok) {
    double value = 0.0;
    const char* begin = tok.value.data();
    const char* end = begin + tok.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(tok.line, tok.column, "expected a number, got '" + tok.value + "'");
    return value;
}

ExtendedLength parse_length(const Token& tok) {
    if (tok.value == "inf" || tok.value == "+inf" || tok.value == "-inf")
        return ExtendedLength::infinite();
    return ExtendedLength::from_value(parse_number(tok));
}

int parse_int(const Token& tok) {
    int value = 0;
    const char* begin = tok.value.data();
    const char* end = begin + tok.value.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw ParseError(tok.line, tok.column, "expected an integer, got '" + tok.value + "'");
    return value;
}

} // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

Scenario parse_scenario(std::string_view text) {
    std::map<std::string, Token, std::less<>> entries;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        int col = 1;
        line = trim(line, col);
        if (line.empty())
            continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, col, "expected 'key = value'");
        int key_col = col;
        std::string_view key = trim(line.substr(0, eq), key_col);
        int value_col = col + static_cast<int>(eq) + 1;
        std::string_view value = trim(line.substr(eq + 1), value_col);

        if (key.empty())
            throw ParseError(line_no, key_col, "missing key before '='");
        if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
            throw ParseError(line_no, key_col, "unknown key '" + std::string(key) + "'");
        if (value.empty())
            throw ParseError(line_no, value_col, "missing value for '" + std::string(key) + "'");
        if (entries.count(key))
            throw ParseError(line_no, key_col, "duplicate key '" + std::string(key) + "'");
        entries.emplace(std::string(key),
                        Token{std::string(value), line_no, value_col});
    }

    const auto get = [&](std::string_view key) -> const Token* {
        auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };

    // Per-junction parameter source: lengths or angles, never both.
    struct JunctionSpec {
        const Token* plus = nullptr;
        const Token* minus = nullptr;
        bool angles = false;
        bool present = false;
    };
    const auto junction_spec = [&](int index) {
        const std::string l = "L" + std::to_string(index);
        const std::string t = "theta" + std::to_string(index);
        const Token* lp = get(l + "_plus");
        const Token* lm = get(l + "_minus");
        const Token* tp = get(t + "_plus");
        const Token* tm = get(t + "_minus");
        JunctionSpec spec;
        if ((lp || lm) && (tp || tm)) {
            const Token* offending = tp ? tp : tm;
            throw ParseError(offending->line, offending->column,
                             "length and angle keys are mutually exclusive for junction " +
                                 std::to_string(index));
        }
        if (lp || lm) {
            if (!lp || !lm)
                throw ParseError((lp ? lp : lm)->line, (lp ? lp : lm)->column,
                                 l + "_plus and " + l + "_minus must both be given");
            spec = {lp, lm, false, true};
        } else if (tp || tm) {
            if (!tp || !tm)
                throw ParseError((tp ? tp : tm)->line, (tp ? tp : tm)->column,
                                 t + "_plus and " + t + "_minus must both be given");
            spec = {tp, tm, true, true};
        }
        return spec;
    };

    const JunctionSpec spec1 = junction_spec(1);
    const JunctionSpec spec2 = junction_spec(2);

    Scenario scenario;

    const Token* mode_tok = get("mode");
    if (mode_tok) {
        if (mode_tok->value == "single")
            scenario.mode = ScanMode::Single;
        else if (mode_tok->value == "double")
            scenario.mode = ScanMode::Double;
        else
            throw ParseError(mode_tok->line, mode_tok->column,
                             "mode must be 'single' or 'double', got '" + mode_tok->value + "'");
    } else {
        scenario.mode = (spec2.present || get("a")) ? ScanMode::Double : ScanMode::Single;
    }

    const auto build = [&](const JunctionSpec& spec) {
        try {
            if (spec.angles)
                return Junction::from_angles(parse_number(*spec.plus), parse_number(*spec.minus));
            return Junction::from_lengths(parse_length(*spec.plus), parse_length(*spec.minus));
        } catch (const InvalidParameter& err) {
            throw ParseError(spec.plus->line, spec.plus->column, err.what());
        }
    };

    if (!spec1.present)
        throw ParseError(1, 1, "junction 1 parameters are required");
    scenario.j1 = build(spec1);

    if (scenario.mode == ScanMode::Double) {
        if (!spec2.present)
            throw ParseError(1, 1, "mode double requires junction 2 parameters");
        const Token* a_tok = get("a");
        if (!a_tok)
            throw ParseError(1, 1, "mode double requires the separation key 'a'");
        const double a = parse_number(*a_tok);
        if (!(a > 0.0) || !std::isfinite(a))
            throw ParseError(a_tok->line, a_tok->column, "separation a must be positive");
        scenario.j2 = build(spec2);
        scenario.separation = a;
    } else {
        if (spec2.present)
            throw ParseError(spec2.plus->line, spec2.plus->column,
                             "junction 2 keys are not allowed in single mode");
        if (const Token* a_tok = get("a"))
            throw ParseError(a_tok->line, a_tok->column, "key 'a' is not allowed in single mode");
    }

    if (const Token* t = get("k_min")) {
        scenario.k_range.k_min = parse_number(*t);
        if (!(scenario.k_range.k_min > 0.0))
            throw ParseError(t->line, t->column, "k_min must be positive");
    }
    if (const Token* t = get("k_max"))
        scenario.k_range.k_max = parse_number(*t);
    if (!(scenario.k_range.k_max > scenario.k_range.k_min)) {
        const Token* t = get("k_max") ? get("k_max") : get("k_min");
        throw ParseError(t ? t->line : 1, t ? t->column : 1, "k_min must be below k_max");
    }
    if (const Token* t = get("samples")) {
        scenario.k_range.samples = parse_int(*t);
        if (scenario.k_range.samples < 2)
            throw ParseError(t->line, t->column, "samples must be at least 2");
    }

    if (const Token* t = get("outputs")) {
        scenario.outputs.clear();
        std::string_view rest = t->value;
        int col = t->column;
        while (!rest.empty()) {
            const std::size_t comma = rest.find(',');
            int item_col = col;
            std::string_view item = trim(rest.substr(0, comma), item_col);
            if (item == "csv")
                scenario.outputs.insert(OutputKind::Csv);
            else if (item == "plotscript")
                scenario.outputs.insert(OutputKind::PlotScript);
            else if (item == "report")
                scenario.outputs.insert(OutputKind::Report);
            else
                throw ParseError(t->line, item_col,
                                 "unknown output '" + std::string(item) + "'");
            if (comma == std::string_view::npos)
                break;
            col += static_cast<int>(comma) + 1;
            rest = rest.substr(comma + 1);
        }
        if (scenario.outputs.empty())
            throw ParseError(t->line, t->column, "outputs must not be empty");
    }

    return scenario;
}

} // namespace ptrans
