#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "ptrans/junction.hpp"

namespace ptrans {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ScanMode { Single, Double };
enum class OutputKind { Csv, PlotScript, Report };

struct KRange {
    double k_min = 1e-3;
    double k_max = 10.0;
    int samples = 2000;
};

/// One run description, parsed from a `key = value` config document.
struct Scenario {
    ScanMode mode = ScanMode::Single;
    Junction j1 = Junction::from_lengths(0.0, 0.0);
    std::optional<Junction> j2;
    std::optional<double> separation;
    KRange k_range;
    std::set<OutputKind> outputs = {OutputKind::Csv};
};

/// Config syntax error with 1-based position of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Parses a UTF-8 `key = value` document (# starts a comment). Keys:
///   mode              single | double (inferred from the keys below if absent)
///   L1_plus, L1_minus, L2_plus, L2_minus      lengths; the token inf is the
///                                             infinite point (-inf likewise)
///   theta1_plus, theta1_minus, theta2_plus, theta2_minus   angles (radians)
///   a                 junction separation (double mode)
///   k_min, k_max, samples                     scan window, defaults 1e-3/10/2000
///   outputs           comma list of csv, plotscript, report
/// Angle keys and length keys are mutually exclusive per junction.
Scenario parse_scenario(std::string_view text);

} // namespace ptrans
