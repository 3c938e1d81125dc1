#pragma once

// (*)-twisted generalized Reed-Solomon codes.
//
// The code is the evaluation of
//     f(x) = sum_{i<k} f_i x^i + f_0 sum_{j<=l} eta_j x^{k+j}
// at the points a_1..a_n, scaled column-wise by v_1..v_n. The twist rides on
// the constant coefficient f_0.

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "twistlcd/gf.hpp"
#include "twistlcd/linalg.hpp"
#include "twistlcd/symfun.hpp"

namespace twistlcd {

/// Validated parameter tuple (q, n, k, l, alphas, v, eta[, lambda]).
///
/// Construction checks 2 <= k <= n - (l+1), nonzero v, nonzero eta and the
/// EvalPoints invariants; with lambda present it also checks a_i^n = lambda.
class TwistedParams {
public:
    TwistedParams(Field field, std::size_t k, std::vector<Fe> alphas, std::vector<Fe> v, std::vector<Fe> eta,
                  std::optional<Fe> lambda = std::nullopt);

    /// Points taken as the roots of x^n - lambda in ascending order.
    static TwistedParams from_lambda(Field field, std::size_t n, std::size_t k, const Fe& lambda,
                                     std::vector<Fe> v, std::vector<Fe> eta);

    const Field& field() const noexcept { return field_; }
    const FieldCtx& ctx() const noexcept { return *field_; }
    std::size_t n() const noexcept { return points_.size(); }
    std::size_t k() const noexcept { return k_; }
    std::size_t ell() const noexcept { return eta_.size() - 1; }
    const EvalPoints& points() const noexcept { return points_; }
    const std::vector<Fe>& alphas() const noexcept { return points_.alphas(); }
    const std::vector<Fe>& v() const noexcept { return v_; }
    const std::vector<Fe>& eta() const noexcept { return eta_; }
    const std::optional<Fe>& lambda() const noexcept { return lambda_; }

private:
    Field field_;
    std::size_t k_;
    EvalPoints points_;
    std::vector<Fe> v_;
    std::vector<Fe> eta_;
    std::optional<Fe> lambda_;
};

/// Thread-safe write-once slot.
template <class T>
class OnceCell {
public:
    template <class F>
    const T& get_or_init(F&& init) const {
        std::call_once(flag_, [&] { value_.emplace(std::forward<F>(init)()); });
        return *value_;
    }

private:
    mutable std::once_flag flag_;
    mutable std::optional<T> value_;
};

/// A linear code given by a full-row-rank generator matrix. Derived objects
/// (parity-check matrix, distances) are computed at most once and shared
/// between copies.
class LinearCode {
public:
    explicit LinearCode(FMatrix generator);
    /// Attaches a known parity-check matrix after checking G H^T = 0 and
    /// rank(H) = n - k.
    LinearCode(FMatrix generator, FMatrix parity_check);

    const FMatrix& generator() const noexcept { return generator_; }
    const Field& field() const noexcept { return generator_.field(); }
    std::size_t length() const noexcept { return generator_.cols(); }
    std::size_t dimension() const noexcept { return generator_.rows(); }

    /// Given H, or the canonical kernel basis of G when none was supplied.
    const FMatrix& parity_check() const;

    template <class F>
    std::size_t cached_distance(F&& compute) const {
        return cache_->distance.get_or_init(std::forward<F>(compute));
    }
    template <class F>
    std::size_t cached_dual_distance(F&& compute) const {
        return cache_->dual_distance.get_or_init(std::forward<F>(compute));
    }

private:
    struct Cache {
        std::optional<FMatrix> given_h;
        OnceCell<FMatrix> h;
        OnceCell<std::size_t> distance;
        OnceCell<std::size_t> dual_distance;
    };

    FMatrix generator_;
    std::shared_ptr<Cache> cache_;
};

/// 1 + sum_t eta_t a_j^{k+t} for the 1-based column j.
Fe twist_column_header(const TwistedParams& params, std::size_t j);
/// sum_t eta_t a_j^{k+t} for the 1-based column j.
Fe twist_sum(const TwistedParams& params, std::size_t j);

/// k x n generator: row 1 is v_j (1 + sum_t eta_t a_j^{k+t}), row i+1 is v_j a_j^i.
FMatrix generator_matrix(const TwistedParams& params);

/// Closed-form (n-k) x n parity-check matrix. The first n-k-l-1 rows are
/// (u_j/v_j) a_j^i; the remaining l+1 rows, for r = l+1 down to 1, are
/// (u_j/v_j) (a_j^{n-k-r} - (-1)^{n-1} P_j Omega_r).
FMatrix parity_check_matrix(const TwistedParams& params);

/// Coefficients (lowest first, length k+l+1) of the polynomial f encoding `message`.
std::vector<Fe> twisted_polynomial(const TwistedParams& params, std::span<const Fe> message);

/// (v_1 f(a_1), ..., v_n f(a_n)); equal to message^T G.
std::vector<Fe> encode(const TwistedParams& params, std::span<const Fe> message);

/// Generator plus the closed-form parity-check matrix.
LinearCode twisted_code(const TwistedParams& params);

}  // namespace twistlcd
