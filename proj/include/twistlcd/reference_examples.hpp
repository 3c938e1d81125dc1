#pragma once

// Eight worked constructions with their hand-computed tables, generator
// matrices and final code parameters. Used as golden data by the
// `reproduce` subcommand and the test suites.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistlcd/analysis.hpp"
#include "twistlcd/constructor.hpp"

namespace twistlcd {

struct ReferenceExample {
    std::string name;
    Theorem theorem;
    std::uint64_t q;
    std::size_t n;
    std::size_t k;
    std::int64_t lambda;
    std::optional<std::int64_t> r;
    std::vector<std::int64_t> eta;
    std::vector<std::int64_t> v;

    // Expected values, as printed with the example.
    std::vector<std::int64_t> alphas;
    std::vector<std::int64_t> twist_sums;       // sum_t eta_t a_i^{k+t}
    std::vector<std::int64_t> twist_headers;    // 1 + sum_t eta_t a_i^{k+t}
    std::vector<std::int64_t> scaled_headers;   // v_i (1 + sum_t ...)
    std::vector<std::vector<std::int64_t>> generator;
    std::size_t d;
    MdsClass mds_class;
    bool lcd;
    /// Printed value of 1 + sum_{t=r}^{l} eta_t Phi_{l+1+r-t} (T42/T44 only).
    std::optional<std::int64_t> stated_condition;
};

const std::vector<ReferenceExample>& reference_examples();

}  // namespace twistlcd
