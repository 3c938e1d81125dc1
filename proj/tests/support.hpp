#pragma once

// Shared helpers for the test binaries: seeded random objects and the
// brute-force oracles the library is checked against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "twistlcd/gf.hpp"
#include "twistlcd/linalg.hpp"
#include "twistlcd/constructor.hpp"
#include "twistlcd/symfun.hpp"
#include "twistlcd/twisted.hpp"

namespace testsupport {

using namespace twistlcd;
using Rng = std::mt19937_64;

inline Fe random_element(const FieldCtx& f, Rng& rng) {
    return f.from_canonical(std::uniform_int_distribution<std::uint64_t>(0, f.order() - 1)(rng));
}

inline Fe random_nonzero(const FieldCtx& f, Rng& rng) {
    return f.from_canonical(std::uniform_int_distribution<std::uint64_t>(1, f.order() - 1)(rng));
}

/// n distinct nonzero elements in random order.
inline std::vector<Fe> random_points(const FieldCtx& f, std::size_t n, Rng& rng) {
    std::vector<Fe> all = f.nonzero_elements();
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(n);
    return all;
}

inline FMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
    FMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_element(*f, rng));
    return m;
}

/// Random entries, redrawn until the matrix has full row rank.
inline FMatrix random_full_rank(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
    for (;;) {
        FMatrix m = random_matrix(f, rows, cols, rng);
        if (rank(m) == rows) return m;
    }
}

inline std::vector<Fe> ints(const FieldCtx& f, const std::vector<std::int64_t>& xs) {
    std::vector<Fe> out;
    for (auto x : xs) out.push_back(f.from_int(x));
    return out;
}

inline std::size_t weight(const std::vector<Fe>& w) {
    std::size_t c = 0;
    for (const Fe& x : w) c += !x.is_zero();
    return c;
}

/// Minimum weight over all q^k - 1 nonzero messages, with no scalar reduction.
inline std::size_t naive_min_distance(const FMatrix& g) {
    const FieldCtx& f = g.ctx();
    const std::size_t k = g.rows();
    std::vector<std::uint64_t> digits(k, 0);
    std::size_t best = g.cols() + 1;
    for (;;) {
        std::size_t pos = 0;
        while (pos < k && ++digits[pos] == f.order()) digits[pos++] = 0;
        if (pos == k) break;
        std::vector<Fe> msg;
        for (auto d : digits) msg.push_back(f.from_canonical(d));
        best = std::min(best, weight(vecmat(msg, g)));
    }
    return best;
}

/// S_t as the sum of all degree-t monomials, enumerated as nondecreasing
/// index tuples.
inline Fe monomial_sum(const std::vector<Fe>& xs, int t) {
    const FieldCtx& f = xs.front().field();
    Fe total = f.zero();
    std::vector<std::size_t> idx;
    std::function<void(std::size_t, Fe)> rec = [&](std::size_t start, Fe acc) {
        if (static_cast<int>(idx.size()) == t) {
            total += acc;
            return;
        }
        for (std::size_t i = start; i < xs.size(); ++i) {
            idx.push_back(i);
            rec(i, acc * xs[i]);
            idx.pop_back();
        }
    };
    rec(0, f.one());
    return total;
}

/// Random valid parameters with points drawn from the whole multiplicative
/// group. `force_edge` makes l + 1 = n - k.
inline TwistedParams random_params(const Field& field, Rng& rng, std::size_t n_max, bool force_edge = false) {
    const FieldCtx& f = *field;
    n_max = std::min<std::size_t>(n_max, f.order() - 1);
    std::size_t n = std::uniform_int_distribution<std::size_t>(4, n_max)(rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(2, n - 2)(rng);
    std::size_t ell = force_edge ? n - k - 1 : std::uniform_int_distribution<std::size_t>(0, n - k - 1)(rng);
    std::vector<Fe> eta(ell + 1);
    for (auto& e : eta) e = random_element(f, rng);
    eta[std::uniform_int_distribution<std::size_t>(0, ell)(rng)] = random_nonzero(f, rng);
    std::vector<Fe> v(n);
    for (auto& x : v) x = random_nonzero(f, rng);
    return TwistedParams(field, k, random_points(f, n, rng), v, eta);
}

/// Lambdas admissible for length n: ord(lambda) divides (q-1)/n.
inline std::vector<Fe> admissible_lambdas(const FieldCtx& f, std::uint64_t n) {
    std::vector<Fe> out;
    const std::uint64_t group = f.order() - 1;
    if (group % n) return out;
    for (const Fe& x : f.nonzero_elements())
        if ((group / n) % f.element_order(x) == 0) out.push_back(x);
    return out;
}

/// A v vector following the sign/generic layout of `which`.
inline std::vector<Fe> patterned_v(const FieldCtx& f, Theorem which, std::size_t n, std::size_t k, Rng& rng) {
    std::vector<Fe> generic;
    for (const Fe& x : f.nonzero_elements())
        if (!x.is_one() && !(-x).is_one()) generic.push_back(x);
    const bool signs_first = which == Theorem::T43 || which == Theorem::T44;
    const std::size_t signs = n - k + 1;
    std::vector<Fe> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool sign_slot = signs_first ? i < signs : i >= n - signs;
        v[i] = sign_slot ? ((rng() & 1) ? f.one() : -f.one()) : generic[rng() % generic.size()];
    }
    return v;
}

/// Random inputs satisfying every structural hypothesis of `which` (the
/// condition value may still vanish). nullopt if the field admits none.
inline std::optional<TheoremInput> random_theorem_input(const Field& field, Theorem which, Rng& rng) {
    const FieldCtx& f = *field;
    struct Shape {
        std::size_t n, k, ell;
        std::optional<std::int64_t> r;
    };
    std::vector<Shape> shapes;
    for (std::size_t n = 4; n <= f.order() - 1 && n <= 24; ++n) {
        if ((f.order() - 1) % n) continue;
        for (std::size_t k = 2; k < n; ++k)
            for (std::size_t ell = 0; ell + k + 1 <= n; ++ell) {
                if (needs_r(which)) {
                    auto r = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(2 * k + ell);
                    if (r >= 0 && r <= static_cast<std::int64_t>(ell)) shapes.push_back({n, k, ell, r});
                } else if (2 * k + 2 * ell + 1 <= n) {
                    shapes.push_back({n, k, ell, std::nullopt});
                }
            }
    }
    if (shapes.empty()) return std::nullopt;
    const Shape& s = shapes[rng() % shapes.size()];
    auto lambdas = admissible_lambdas(f, s.n);
    TheoremInput in;
    in.which = which;
    in.field = field;
    in.n = s.n;
    in.k = s.k;
    in.lambda = lambdas[rng() % lambdas.size()];
    in.eta.resize(s.ell + 1);
    for (auto& e : in.eta) e = random_element(f, rng);
    in.eta[rng() % in.eta.size()] = random_nonzero(f, rng);
    in.v = patterned_v(f, which, s.n, s.k, rng);
    in.r = s.r;
    return in;
}

}  // namespace testsupport
