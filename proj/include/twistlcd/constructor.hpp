#pragma once

// LCD constructions for twisted codes whose points are the roots of
// x^n - lambda. Four hypothesis families:
//
//   T41  2 <= k <= (n-2l-1)/2,  v_i in {-1,1} for i >= k,      v_i not in {-1,0,1} for i < k
//   T42  n = 2k+l+r, 0<=r<=l,   same v pattern as T41,          condition value != 0
//   T43  2 <= k <= (n-2l-1)/2,  v_i in {-1,1} for i <= n-k+1,  v_i not in {-1,0,1} for i > n-k+1
//   T44  n = 2k+l+r, 0<=r<=l,   same v pattern as T43,          condition value != 0
//
// The condition value is 1 + sum_{t=r}^{l} eta_t Phi_{l+1+r-t}.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistlcd/analysis.hpp"
#include "twistlcd/twisted.hpp"

namespace twistlcd {

enum class Theorem { T41, T42, T43, T44 };

std::string_view to_string(Theorem t);
/// Accepts "t41".."t44" in any case.
std::optional<Theorem> parse_theorem(std::string_view text);
bool needs_r(Theorem t);

/// Raw, unvalidated inputs for one construction.
struct TheoremInput {
    Theorem which = Theorem::T41;
    Field field;
    std::size_t n = 0;
    std::size_t k = 0;
    Fe lambda;
    std::vector<Fe> eta;
    std::vector<Fe> v;
    std::optional<std::int64_t> r;
};

/// A construction whose hypotheses have all been checked.
struct TheoremSpec {
    Theorem which;
    std::optional<std::int64_t> r;
    TwistedParams params;
    std::optional<Fe> condition_value;
};

TheoremSpec validate(const TheoremInput& input);

/// Every theorem whose hypotheses hold for these parameters. For T42/T44 the
/// r is taken from n = 2k+l+r.
std::vector<Theorem> applicable_theorems(const Field& field, std::size_t n, std::size_t k, const Fe& lambda,
                                         const std::vector<Fe>& eta, const std::vector<Fe>& v);

/// Builds the code and checks that it is LCD; a non-LCD result throws
/// TheoremViolation with every input in the message.
LinearCode build(const TheoremSpec& spec);

struct SearchQuery {
    Field field;
    std::size_t n_min = 0;
    std::size_t n_max = 0;
    std::size_t k_min = 2;
    std::size_t k_max = 2;
    std::vector<Theorem> theorems;
    std::uint64_t budget = 100'000;
    std::uint64_t seed = 0;
};

struct SearchEntry {
    TheoremSpec spec;
    AnalysisReport report;
};

struct SearchResult {
    std::vector<SearchEntry> entries;
    /// Candidate space not covered within the budget.
    bool truncated = false;
    std::uint64_t evaluated = 0;
    /// Certified specs whose code failed the LCD check.
    std::vector<std::string> violations;
};

/// Bounded, deterministic search over lambda, eta and v. Entries are sorted by
/// (n, k, class) with MDS before NMDS before AMDS.
SearchResult search(const SearchQuery& query);

/// One-line JSON record of a spec and its report.
std::string entry_to_json(const SearchEntry& entry);

}  // namespace twistlcd
