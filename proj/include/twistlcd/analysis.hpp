#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "twistlcd/twisted.hpp"

namespace twistlcd {

enum class MdsClass { MDS, AMDS, NMDS, NEITHER };

std::string_view to_string(MdsClass c);

/// The three equivalent LCD tests: rank [G; H] = n, G G^T nonsingular, and a
/// trivial hull.
struct LcdEvidence {
    bool stack_rank = false;
    bool gram_nonsingular = false;
    bool hull_trivial = false;
};

struct AnalysisReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::optional<std::size_t> d_dual;
    MdsClass mds_class = MdsClass::NEITHER;
    bool lcd = false;
    LcdEvidence lcd_evidence;
    std::size_t hull_dim = 0;

    /// Single-line JSON object with keys in a fixed order.
    std::string to_json() const;
};

/// Limit on scalar classes enumerated by min_distance (default 10^7).
std::uint64_t enumeration_guard();
/// Limit on column subsets per size examined by dual_distance (default 10^6).
std::uint64_t subset_guard();

/// Minimum Hamming weight of a nonzero codeword, enumerating one message per
/// scalar class ((q^k - 1)/(q - 1) encodings). Throws TooLargeToEnumerate past
/// the guard.
std::size_t min_distance(const LinearCode& code);

/// Minimum distance of the dual: the smallest w such that some w columns of G
/// are linearly dependent.
std::size_t dual_distance(const LinearCode& code);

MdsClass classify_mds(const LinearCode& code);

/// C-perp, generated by the canonical kernel basis of G.
LinearCode dual_code(const LinearCode& code);

std::size_t hull_dimension(const LinearCode& code);

/// Evaluates all three criteria and throws InternalInconsistency if they
/// disagree.
std::pair<bool, LcdEvidence> is_lcd(const LinearCode& code);

/// Full report. The dual distance is computed when the classification needs
/// it (d = n - k) or when `with_dual` is set.
AnalysisReport analyze(const LinearCode& code, bool with_dual = false);

}  // namespace twistlcd
