#include "azi/report.hpp"

#include "azi/errors.hpp"
#include "azi/graph6.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <sstream>

namespace azi {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string six_places(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string value_float_field(const ExtremalReport& r) {
    return r.value_exact ? to_decimal_string(*r.value_exact, 6) : six_places(r.value_float);
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

[[noreturn]] void reject_graph6(const char* what) {
    throw Error(ErrorKind::UsageError,
                std::string("graph6 format is only valid for graph output, not for ") + what);
}

OrderedJson check_json(const TheoremCheck& c) {
    OrderedJson j;
    j["n"] = c.n;
    j["k"] = c.k;
    j["passed"] = c.passed;
    j["detail"] = c.detail;
    j["witness"] = c.witness;
    j["outside_hypothesis"] = c.outside_hypothesis;
    return j;
}

} // namespace

OutputFormat parse_output_format(const std::string& text) {
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "graph6") return OutputFormat::Graph6;
    throw Error(ErrorKind::UsageError, "unknown format '" + text + "' (expected json|csv|graph6)");
}

const char* direction_name(Direction d) {
    return d == Direction::Min ? "min" : "max";
}

const char* conjecture_outcome_name(ConjectureOutcome v) {
    switch (v) {
    case ConjectureOutcome::Agree: return "Agree";
    case ConjectureOutcome::Disagree: return "Disagree";
    case ConjectureOutcome::NearTie: return "NearTie";
    }
    return "?";
}

std::string repr_double(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    std::string out(buf, end);
    if (out.find_first_of(".eni") == std::string::npos) out += ".0"; // inf/nan keep as-is
    return out;
}

std::string format_report(const ExtremalReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        OrderedJson j;
        j["n"] = report.n;
        j["k"] = report.k;
        j["index"] = report.index;
        j["direction"] = direction_name(report.direction);
        if (report.value_exact)
            j["value_exact"] = to_fraction_string(*report.value_exact);
        else
            j["value_exact"] = nullptr;
        j["value_float"] = value_float_field(report);
        j["attaining"] = report.attaining;
        j["class_size"] = report.class_size;
        j["outside_hypothesis"] = report.outside_hypothesis;
        j["near_tie_flag"] = report.near_tie_flag;
        return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
        std::ostringstream out;
        out << "n,k,index,direction,value_exact,value_float,attaining,class_size,"
               "outside_hypothesis,near_tie_flag\n";
        for (const auto& code : report.attaining) {
            out << report.n << ',' << report.k << ',' << report.index << ','
                << direction_name(report.direction) << ','
                << (report.value_exact ? to_fraction_string(*report.value_exact) : "") << ','
                << value_float_field(report) << ',' << csv_field(code) << ','
                << report.class_size << ',' << (report.outside_hypothesis ? "true" : "false")
                << ',' << (report.near_tie_flag ? "true" : "false") << '\n';
        }
        return out.str();
    }
    case OutputFormat::Graph6:
        return join(report.attaining, "\n") + (report.attaining.empty() ? "" : "\n");
    }
    throw Error(ErrorKind::UsageError, "unknown output format");
}

std::string format_report(const std::vector<TheoremCheck>& checks, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        OrderedJson j = OrderedJson::array();
        for (const auto& c : checks) j.push_back(check_json(c));
        return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
        std::ostringstream out;
        out << "n,k,passed,detail,witness,outside_hypothesis\n";
        for (const auto& c : checks) {
            out << c.n << ',' << c.k << ',' << (c.passed ? "true" : "false") << ','
                << csv_field(c.detail) << ',' << csv_field(join(c.witness, ";")) << ','
                << (c.outside_hypothesis ? "true" : "false") << '\n';
        }
        return out.str();
    }
    case OutputFormat::Graph6:
        reject_graph6("check tables");
    }
    throw Error(ErrorKind::UsageError, "unknown output format");
}

std::string format_report(const ConjectureVerdict& verdict, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        OrderedJson j;
        j["n"] = verdict.n;
        j["verdict"] = conjecture_outcome_name(verdict.verdict);
        j["max_azi_exact"] = to_fraction_string(verdict.max_azi);
        j["max_azi_float"] = to_decimal_string(verdict.max_azi, 6);
        j["min_abc"] = six_places(verdict.min_abc);
        j["max_azi_set"] = verdict.max_azi_set;
        j["min_abc_set"] = verdict.min_abc_set;
        j["near_tie_flag"] = verdict.near_tie_flag;
        j["outside_hypothesis"] = verdict.outside_hypothesis;
        return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
        std::ostringstream out;
        out << "n,verdict,max_azi_exact,max_azi_float,min_abc,max_azi_set,min_abc_set,"
               "near_tie_flag,outside_hypothesis\n";
        out << verdict.n << ',' << conjecture_outcome_name(verdict.verdict) << ','
            << to_fraction_string(verdict.max_azi) << ',' << to_decimal_string(verdict.max_azi, 6)
            << ',' << six_places(verdict.min_abc) << ',' << csv_field(join(verdict.max_azi_set, ";"))
            << ',' << csv_field(join(verdict.min_abc_set, ";")) << ','
            << (verdict.near_tie_flag ? "true" : "false") << ','
            << (verdict.outside_hypothesis ? "true" : "false") << '\n';
        return out.str();
    }
    case OutputFormat::Graph6:
        reject_graph6("conjecture verdicts");
    }
    throw Error(ErrorKind::UsageError, "unknown output format");
}

std::string format_report(const ClimbTrace& trace, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        OrderedJson j;
        j["moves_applied"] = trace.moves_applied;
        j["best_azi_exact"] = to_fraction_string(trace.best_azi);
        j["best_azi_float"] = to_decimal_string(trace.best_azi, 6);
        j["best_graph6"] = graph6_encode(trace.best);
        OrderedJson steps = OrderedJson::array();
        for (const auto& s : trace.steps) {
            OrderedJson step;
            step["move"] = s.move;
            step["azi_exact"] = to_fraction_string(s.azi_after);
            step["azi_float"] = to_decimal_string(s.azi_after, 6);
            step["graph6"] = s.graph6_after;
            steps.push_back(std::move(step));
        }
        j["steps"] = std::move(steps);
        return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
        std::ostringstream out;
        out << "step,move,azi_exact,azi_float,graph6\n";
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const auto& s = trace.steps[i];
            out << i << ',' << csv_field(s.move) << ',' << to_fraction_string(s.azi_after) << ','
                << to_decimal_string(s.azi_after, 6) << ',' << csv_field(s.graph6_after) << '\n';
        }
        return out.str();
    }
    case OutputFormat::Graph6:
        return graph6_encode(trace.best) + "\n";
    }
    throw Error(ErrorKind::UsageError, "unknown output format");
}

std::string format_check_table(const std::vector<TheoremCheck>& checks) {
    std::ostringstream out;
    out << "  n  k  status  detail\n";
    for (const auto& c : checks) {
        char head[32];
        std::snprintf(head, sizeof(head), "%3d %2d  %-6s  ", c.n, c.k,
                      c.passed ? "PASS" : "FAIL");
        out << head << c.detail;
        if (c.outside_hypothesis) out << "  [outside theorem hypotheses]";
        out << '\n';
        for (const auto& w : c.witness) out << "            witness: " << w << '\n';
    }
    return out.str();
}

} // namespace azi
