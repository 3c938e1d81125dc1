#include "twistlcd/twisted.hpp"

#include <string>

namespace twistlcd {

namespace {

EvalPoints checked_points(const Field& field, std::vector<Fe> alphas) {
    if (!field) throw Error(ErrorCode::InvalidParams, "parameters need a field");
    for (const Fe& a : alphas) {
        if (!field->same_field(a.field())) throw Error(ErrorCode::MixedFields, "evaluation point from another field");
    }
    return EvalPoints(std::move(alphas));
}

}  // namespace

TwistedParams::TwistedParams(Field field, std::size_t k, std::vector<Fe> alphas, std::vector<Fe> v,
                             std::vector<Fe> eta, std::optional<Fe> lambda)
    : field_(std::move(field)),
      k_(k),
      points_(checked_points(field_, std::move(alphas))),
      v_(std::move(v)),
      eta_(std::move(eta)),
      lambda_(std::move(lambda)) {
    const std::size_t n = points_.size();
    if (eta_.empty()) throw Error(ErrorCode::InvalidParams, "eta must have at least one entry");
    bool eta_nonzero = false;
    for (const Fe& e : eta_) {
        if (!field_->same_field(e.field())) throw Error(ErrorCode::MixedFields, "eta entry from another field");
        eta_nonzero = eta_nonzero || !e.is_zero();
    }
    if (!eta_nonzero) throw Error(ErrorCode::InvalidParams, "eta must not be the zero vector");
    const std::size_t ell = eta_.size() - 1;
    if (k_ < 2 || k_ + ell + 1 > n) {
        throw Error(ErrorCode::InvalidParams, "need 2 <= k <= n-(l+1); got n=" + std::to_string(n) +
                                                  " k=" + std::to_string(k_) + " l=" + std::to_string(ell));
    }
    if (v_.size() != n) {
        throw Error(ErrorCode::InvalidParams,
                    "v has " + std::to_string(v_.size()) + " entries, expected n=" + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!field_->same_field(v_[i].field())) throw Error(ErrorCode::MixedFields, "v entry from another field");
        if (v_[i].is_zero()) throw Error(ErrorCode::InvalidParams, "v_" + std::to_string(i + 1) + " is zero");
    }
    if (lambda_) {
        if (lambda_->is_zero()) throw Error(ErrorCode::ZeroLambda, "lambda must be nonzero");
        for (const Fe& a : points_.alphas()) {
            if (!(a.pow(static_cast<std::int64_t>(n)) == *lambda_)) {
                throw Error(ErrorCode::InvalidParams, "point " + a.to_string() + " is not a root of x^n - lambda");
            }
        }
    }
}

TwistedParams TwistedParams::from_lambda(Field field, std::size_t n, std::size_t k, const Fe& lambda,
                                         std::vector<Fe> v, std::vector<Fe> eta) {
    std::vector<Fe> roots = roots_xn_minus_lambda(*field, n, lambda);
    return TwistedParams(std::move(field), k, std::move(roots), std::move(v), std::move(eta), lambda);
}

// ---------------------------------------------------------------------------

LinearCode::LinearCode(FMatrix generator) : generator_(std::move(generator)), cache_(std::make_shared<Cache>()) {
    if (generator_.rows() == 0) throw Error(ErrorCode::RankDeficient, "generator matrix has no rows");
    if (rank(generator_) != generator_.rows()) {
        throw Error(ErrorCode::RankDeficient, "generator matrix does not have full row rank");
    }
}

LinearCode::LinearCode(FMatrix generator, FMatrix parity_check) : LinearCode(std::move(generator)) {
    if (parity_check.cols() != length()) throw Error(ErrorCode::DimensionMismatch, "H has the wrong length");
    if (parity_check.rows() != length() - dimension() || rank(parity_check) != parity_check.rows()) {
        throw Error(ErrorCode::RankDeficient, "H must have full rank n-k");
    }
    if (!matmul(generator_, parity_check.transpose()).is_zero()) {
        throw Error(ErrorCode::InternalInconsistency, "G H^T is not zero");
    }
    cache_->given_h.emplace(std::move(parity_check));
}

const FMatrix& LinearCode::parity_check() const {
    if (cache_->given_h) return *cache_->given_h;
    return cache_->h.get_or_init([this] { return nullspace_basis(generator_); });
}

// ---------------------------------------------------------------------------

Fe twist_sum(const TwistedParams& params, std::size_t j) {
    if (j < 1 || j > params.n()) {
        throw Error(ErrorCode::IndexOutOfRange, "column " + std::to_string(j) + " outside 1.." + std::to_string(params.n()));
    }
    const Fe& a = params.alphas()[j - 1];
    Fe sum = params.ctx().zero();
    Fe power = a.pow(static_cast<std::int64_t>(params.k()));
    for (const Fe& e : params.eta()) {
        sum += e * power;
        power *= a;
    }
    return sum;
}

Fe twist_column_header(const TwistedParams& params, std::size_t j) { return params.ctx().one() + twist_sum(params, j); }

FMatrix generator_matrix(const TwistedParams& params) {
    const std::size_t n = params.n();
    FMatrix g(params.field(), params.k(), n);
    for (std::size_t j = 0; j < n; ++j) {
        const Fe& v = params.v()[j];
        g.set(0, j, v * twist_column_header(params, j + 1));
        Fe power = params.alphas()[j];
        for (std::size_t i = 1; i < params.k(); ++i) {
            g.set(i, j, v * power);
            power *= params.alphas()[j];
        }
    }
    return g;
}

FMatrix parity_check_matrix(const TwistedParams& params) {
    const std::size_t n = params.n();
    const std::size_t k = params.k();
    const std::size_t ell = params.ell();
    const FieldCtx& f = params.ctx();
    const EvalPoints& pts = params.points();
    const Fe sign = n % 2 == 1 ? f.one() : -f.one();

    std::vector<Fe> scale(n);
    for (std::size_t j = 0; j < n; ++j) scale[j] = pts.u()[j] / params.v()[j];

    FMatrix h(params.field(), n - k, n);
    const std::size_t plain_rows = n - k - ell - 1;
    for (std::size_t i = 0; i < plain_rows; ++i) {
        for (std::size_t j = 0; j < n; ++j) h.set(i, j, scale[j] * pts.alphas()[j].pow(static_cast<std::int64_t>(i)));
    }
    for (std::size_t r = ell + 1, row = plain_rows; r >= 1; --r, ++row) {
        const Fe om = omega(pts, params.eta(), static_cast<std::int64_t>(r));
        const auto exponent = static_cast<std::int64_t>(n - k - r);
        for (std::size_t j = 0; j < n; ++j) {
            const Fe correction = sign * pts.cofactors()[j] * om;
            h.set(row, j, scale[j] * (pts.alphas()[j].pow(exponent) - correction));
        }
    }
    return h;
}

std::vector<Fe> twisted_polynomial(const TwistedParams& params, std::span<const Fe> message) {
    const std::size_t k = params.k();
    if (message.size() != k) {
        throw Error(ErrorCode::WrongMessageLength,
                    "message has " + std::to_string(message.size()) + " symbols, expected " + std::to_string(k));
    }
    std::vector<Fe> coeffs(k + params.ell() + 1, params.ctx().zero());
    for (std::size_t i = 0; i < k; ++i) {
        if (!params.ctx().same_field(message[i].field())) throw Error(ErrorCode::MixedFields, "message symbol from another field");
        coeffs[i] = message[i];
    }
    for (std::size_t j = 0; j <= params.ell(); ++j) coeffs[k + j] = message[0] * params.eta()[j];
    return coeffs;
}

std::vector<Fe> encode(const TwistedParams& params, std::span<const Fe> message) {
    const std::vector<Fe> coeffs = twisted_polynomial(params, message);
    std::vector<Fe> word;
    word.reserve(params.n());
    for (std::size_t j = 0; j < params.n(); ++j) {
        // Horner
        Fe acc = params.ctx().zero();
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * params.alphas()[j] + coeffs[i];
        word.push_back(params.v()[j] * acc);
    }
    return word;
}

LinearCode twisted_code(const TwistedParams& params) {
    return LinearCode(generator_matrix(params), parity_check_matrix(params));
}

}  // namespace twistlcd
