#ifndef AZI_REPORT_HPP
#define AZI_REPORT_HPP

#include "azi/transform.hpp"
#include "azi/verify.hpp"

#include <string>
#include <vector>

namespace azi {

enum class OutputFormat { Json, Csv, Graph6 };

OutputFormat parse_output_format(const std::string& text);

const char* direction_name(Direction d);
const char* conjecture_outcome_name(ConjectureOutcome v);

// Shortest round-trip decimal, always with a fractional part ("48.0", not
// "48"), so float output is unambiguous and byte-stable.
std::string repr_double(double value);

// Stable field order; rationals rendered as "p/q" plus decimal to 6 places.
// Graph6 is only valid for reports that are graphs; requesting it for a
// tabular report throws Error{UsageError}.
std::string format_report(const ExtremalReport& report, OutputFormat format);
std::string format_report(const std::vector<TheoremCheck>& checks, OutputFormat format);
std::string format_report(const ConjectureVerdict& verdict, OutputFormat format);
std::string format_report(const ClimbTrace& trace, OutputFormat format);

// Human-readable aligned table for verify subcommands.
std::string format_check_table(const std::vector<TheoremCheck>& checks);

} // namespace azi

#endif
