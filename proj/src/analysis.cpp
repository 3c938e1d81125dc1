#include "twistlcd/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <limits>
#include <thread>
#include <vector>

#include "json.hpp"

namespace twistlcd {

namespace {

std::uint64_t guard_from_env(std::uint64_t fallback) {
    const char* env = std::getenv("TWISTLCD_GUARD");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') return fallback;
    return v;
}

// q^e saturating at UINT64_MAX.
std::uint64_t sat_pow(std::uint64_t q, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
        r *= q;
    }
    return r;
}

std::uint64_t sat_binomial(std::size_t n, std::size_t w) {
    if (w > n) return 0;
    w = std::min(w, n - w);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= w; ++i) {
        r = r * (n - w + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

// Minimum codeword weight over class indices [begin, end). Class index i maps
// to a message whose leading nonzero symbol is 1: block p holds the q^{k-1-p}
// messages with lead at position p.
std::size_t scan_classes(const LinearCode& code, std::uint64_t begin, std::uint64_t end) {
    const FMatrix& g = code.generator();
    const FieldCtx& f = g.ctx();
    const std::size_t k = g.rows();
    const std::size_t n = g.cols();
    const std::uint64_t q = f.order();

    std::size_t best = n + 1;
    std::vector<std::uint32_t> word(n);
    std::vector<std::uint64_t> digits(k);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t rest = idx;
        std::size_t lead = 0;
        for (; lead < k; ++lead) {
            const std::uint64_t block = sat_pow(q, k - 1 - lead);
            if (rest < block) break;
            rest -= block;
        }
        std::fill(digits.begin(), digits.end(), 0);
        digits[lead] = 1;
        for (std::size_t pos = k; pos-- > lead + 1;) {
            digits[pos] = rest % q;
            rest /= q;
        }
        std::fill(word.begin(), word.end(), 0);
        for (std::size_t i = lead; i < k; ++i) {
            if (!digits[i]) continue;
            const auto c = static_cast<std::uint32_t>(digits[i]);
            for (std::size_t j = 0; j < n; ++j) word[j] = f.add_raw(word[j], f.mul_raw(c, g.raw(i, j)));
        }
        const auto w = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](std::uint32_t x) { return x != 0; }));
        best = std::min(best, w);
        if (best == 1) break;
    }
    return best;
}

std::size_t compute_min_distance(const LinearCode& code) {
    const std::uint64_t q = code.field()->order();
    const std::size_t k = code.dimension();
    const std::uint64_t total = sat_pow(q, k);
    const std::uint64_t guard = enumeration_guard();
    if (total == std::numeric_limits<std::uint64_t>::max() || (total - 1) / (q - 1) > guard) {
        throw Error(ErrorCode::TooLargeToEnumerate,
                    "q^k = " + std::to_string(q) + "^" + std::to_string(k) + " exceeds the enumeration guard " +
                        std::to_string(guard));
    }
    const std::uint64_t classes = (total - 1) / (q - 1);

    constexpr std::uint64_t kSerialLimit = 1u << 16;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (classes <= kSerialLimit || hw == 1) return scan_classes(code, 0, classes);

    const std::uint64_t chunk = (classes + hw - 1) / hw;
    std::vector<std::future<std::size_t>> parts;
    for (std::uint64_t begin = 0; begin < classes; begin += chunk) {
        const std::uint64_t end = std::min(classes, begin + chunk);
        parts.push_back(std::async(std::launch::async, scan_classes, std::cref(code), begin, end));
    }
    std::size_t best = code.length() + 1;
    for (auto& part : parts) best = std::min(best, part.get());
    return best;
}

std::size_t compute_dual_distance(const LinearCode& code) {
    const FMatrix& g = code.generator();
    const std::size_t n = g.cols();
    const std::size_t k = g.rows();
    if (k == n) throw Error(ErrorCode::InvalidParams, "the dual of a full-length code is trivial");
    const std::uint64_t guard = subset_guard();

    // Any k+1 columns are dependent, so the search ends by w = k+1.
    for (std::size_t w = 1; w <= k + 1; ++w) {
        if (sat_binomial(n, w) > guard) {
            throw Error(ErrorCode::TooLargeToEnumerate,
                        "C(" + std::to_string(n) + "," + std::to_string(w) + ") exceeds the subset guard " + std::to_string(guard));
        }
        std::vector<std::size_t> cols(w);
        for (std::size_t i = 0; i < w; ++i) cols[i] = i;
        while (true) {
            if (rank(g.select_columns(cols)) < w) return w;
            // next combination in lexicographic order
            std::size_t i = w;
            while (i > 0 && cols[i - 1] == n - w + (i - 1)) --i;
            if (i == 0) break;
            ++cols[i - 1];
            for (std::size_t j = i; j < w; ++j) cols[j] = cols[j - 1] + 1;
        }
    }
    throw Error(ErrorCode::InternalInconsistency, "no dependent column set of size <= k+1");
}

std::size_t stacked_rank(const LinearCode& code) { return rank(vstack(code.generator(), code.parity_check())); }

}  // namespace

std::string_view to_string(MdsClass c) {
    switch (c) {
        case MdsClass::MDS: return "MDS";
        case MdsClass::AMDS: return "AMDS";
        case MdsClass::NMDS: return "NMDS";
        case MdsClass::NEITHER: return "NEITHER";
    }
    return "NEITHER";
}

std::uint64_t enumeration_guard() { return guard_from_env(10'000'000); }
std::uint64_t subset_guard() { return guard_from_env(1'000'000); }

std::size_t min_distance(const LinearCode& code) {
    return code.cached_distance([&] { return compute_min_distance(code); });
}

std::size_t dual_distance(const LinearCode& code) {
    return code.cached_dual_distance([&] { return compute_dual_distance(code); });
}

MdsClass classify_mds(const LinearCode& code) {
    const std::size_t n = code.length();
    const std::size_t k = code.dimension();
    const std::size_t d = min_distance(code);
    if (d == n - k + 1) return MdsClass::MDS;
    if (d == n - k) return dual_distance(code) == k ? MdsClass::NMDS : MdsClass::AMDS;
    return MdsClass::NEITHER;
}

LinearCode dual_code(const LinearCode& code) {
    if (code.dimension() == code.length()) {
        throw Error(ErrorCode::RankDeficient, "the dual of a full-length code is the zero code");
    }
    return LinearCode(code.parity_check(), code.generator());
}

std::size_t hull_dimension(const LinearCode& code) {
    const std::size_t k = code.dimension();
    const std::size_t n = code.length();
    return k + (n - k) - stacked_rank(code);
}

std::pair<bool, LcdEvidence> is_lcd(const LinearCode& code) {
    const FMatrix& g = code.generator();
    LcdEvidence ev;
    const std::size_t stacked = stacked_rank(code);
    ev.stack_rank = stacked == code.length();
    ev.gram_nonsingular = !det(matmul(g, g.transpose())).is_zero();
    ev.hull_trivial = hull_dimension(code) == 0;
    if (ev.stack_rank != ev.gram_nonsingular || ev.stack_rank != ev.hull_trivial) {
        throw Error(ErrorCode::InternalInconsistency,
                    std::string("LCD criteria disagree: stack_rank=") + (ev.stack_rank ? "1" : "0") +
                        " gram=" + (ev.gram_nonsingular ? "1" : "0") + " hull=" + (ev.hull_trivial ? "1" : "0"));
    }
    return {ev.stack_rank, ev};
}

AnalysisReport analyze(const LinearCode& code, bool with_dual) {
    AnalysisReport r;
    r.n = code.length();
    r.k = code.dimension();
    r.d = min_distance(code);
    if (r.d > r.n - r.k + 1) throw Error(ErrorCode::InternalInconsistency, "Singleton bound violated");
    r.mds_class = classify_mds(code);
    if (r.d == r.n - r.k || (with_dual && r.k < r.n)) r.d_dual = dual_distance(code);
    std::tie(r.lcd, r.lcd_evidence) = is_lcd(code);
    r.hull_dim = hull_dimension(code);
    return r;
}

std::string AnalysisReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["k"] = k;
    j["d"] = d;
    if (d_dual) j["d_dual"] = *d_dual;
    j["class"] = std::string(to_string(mds_class));
    j["lcd"] = lcd;
    j["lcd_evidence"] = {lcd_evidence.stack_rank, lcd_evidence.gram_nonsingular, lcd_evidence.hull_trivial};
    j["hull_dim"] = hull_dim;
    return j.dump();
}

}  // namespace twistlcd
