#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "twistlcd/analysis.hpp"
#include "twistlcd/reference_examples.hpp"

namespace twistlcd::cli {

enum class OutputFormat { Table, Json };

/// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitGuard = 3;
/// A certified construction failed its LCD check, or the LCD criteria disagreed.
inline constexpr int kExitCounterexample = 4;

/// Outcome of re-deriving one reference example.
struct ExampleOutcome {
    std::string name;
    std::vector<std::string> alphas;
    std::vector<std::string> twist_sums;
    std::vector<std::string> twist_headers;
    std::vector<std::string> scaled_headers;
    std::optional<AnalysisReport> report;
    std::vector<Theorem> certified;
    /// Condition value at the stated r, when the example states one.
    std::optional<std::string> condition;
    /// "field: got X expected Y" for every disagreement, in checking order.
    std::vector<std::string> mismatches;

    bool passed() const { return mismatches.empty(); }
};

ExampleOutcome reproduce_example(const ReferenceExample& example);

/// Runs every example and prints one PASS/FAIL row each. Exit 0 iff all pass.
int cmd_reproduce(const std::vector<ReferenceExample>& examples, OutputFormat format, std::ostream& out,
                  std::ostream& err);

/// Full command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistlcd::cli
