#pragma once

// Symmetric-function layer behind the twisted parity-check matrix and the LCD
// conditions: complete homogeneous symmetric polynomials S_t, the Lagrange
// weights u_i, the products P and P_i, and the correction scalars Omega_r and
// Phi_i.

#include <cstdint>
#include <span>
#include <vector>

#include "twistlcd/gf.hpp"

namespace twistlcd {

/// S_t(x_1, ..., x_n); zero for t < 0. Uses the prefix recurrence
/// S_t(x_1..x_j) = S_t(x_1..x_{j-1}) + x_j S_{t-1}(x_1..x_j).
Fe complete_symmetric(std::span<const Fe> xs, std::int64_t t);

/// S_0..S_tmax in one pass.
std::vector<Fe> complete_symmetric_upto(std::span<const Fe> xs, std::int64_t tmax);

/// Ordered evaluation points (pairwise distinct, nonzero, at least three) with
/// the derived products computed eagerly:
///   u_i = prod_{j != i} (a_i - a_j)^{-1},  P = prod a_j,  P_i = P / a_i.
class EvalPoints {
public:
    explicit EvalPoints(std::vector<Fe> alphas);

    std::size_t size() const noexcept { return alphas_.size(); }
    const FieldCtx& field() const { return alphas_.front().field(); }
    const std::vector<Fe>& alphas() const noexcept { return alphas_; }
    const std::vector<Fe>& u() const noexcept { return u_; }
    const Fe& product() const noexcept { return product_; }
    const std::vector<Fe>& cofactors() const noexcept { return cofactors_; }

    Fe symmetric(std::int64_t t) const { return complete_symmetric(alphas_, t); }

private:
    std::vector<Fe> alphas_;
    std::vector<Fe> u_;
    Fe product_;
    std::vector<Fe> cofactors_;
};

/// sum_i u_i a_i^h. Equals 0 for 0 <= h <= n-2 and S_{h-n+1} for h >= n-1.
Fe power_sum_check(const EvalPoints& pts, std::int64_t h);

/// w_i = (-1)^{n-1} u_i P_i, the solution of V w = e_1 for the n x n
/// Vandermonde matrix V with rows a^0 .. a^{n-1}.
std::vector<Fe> vandermonde_unit_solution(const EvalPoints& pts);

/// All roots of x^n - lambda in ascending canonical order. Requires n | q-1,
/// lambda != 0 and ord(lambda) | (q-1)/n.
std::vector<Fe> roots_xn_minus_lambda(const FieldCtx& field, std::uint64_t n, const Fe& lambda);

/// Omega_r = sum_{t=0}^{l} eta_t S_{t+1-r}, for 1 <= r <= l+1 with l+1 = eta.size().
Fe omega(const EvalPoints& pts, std::span<const Fe> eta, std::int64_t r);

/// Phi_i = (-1)^{n-1} P Omega_i, for 1 <= i <= l+1.
Fe phi(const EvalPoints& pts, std::span<const Fe> eta, std::int64_t i);

/// 1 + sum_{t=r}^{l} eta_t Phi_{l+1+r-t}, the non-vanishing condition of the
/// length-parity LCD constructions (0 <= r <= l).
Fe lcd_condition_value(const EvalPoints& pts, std::span<const Fe> eta, std::int64_t r);

}  // namespace twistlcd
