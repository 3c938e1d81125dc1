#include "twistlcd/symfun.hpp"

#include <algorithm>
#include <set>

namespace twistlcd {

std::vector<Fe> complete_symmetric_upto(std::span<const Fe> xs, std::int64_t tmax) {
    if (xs.empty()) throw Error(ErrorCode::EmptyPointSet, "complete symmetric polynomial of no variables");
    const FieldCtx& f = xs.front().field();
    if (tmax < 0) return {};
    // s[t] holds S_t over the prefix processed so far; the empty prefix has S_0 = 1.
    std::vector<Fe> s(static_cast<std::size_t>(tmax) + 1, f.zero());
    s[0] = f.one();
    for (const Fe& x : xs) {
        for (std::size_t t = 1; t < s.size(); ++t) s[t] += x * s[t - 1];
    }
    return s;
}

Fe complete_symmetric(std::span<const Fe> xs, std::int64_t t) {
    if (xs.empty()) throw Error(ErrorCode::EmptyPointSet, "complete symmetric polynomial of no variables");
    if (t < 0) return xs.front().field().zero();
    return complete_symmetric_upto(xs, t).back();
}

EvalPoints::EvalPoints(std::vector<Fe> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.size() < 3) {
        throw Error(ErrorCode::TooFewPoints, "need at least 3 evaluation points, got " + std::to_string(alphas_.size()));
    }
    const FieldCtx& f = alphas_.front().field();
    std::set<std::uint32_t> seen;
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
        const Fe& a = alphas_[i];
        if (!f.same_field(a.field())) throw Error(ErrorCode::MixedFields, "evaluation points from different fields");
        if (a.is_zero()) throw Error(ErrorCode::ZeroPoint, "evaluation point " + std::to_string(i + 1) + " is zero");
        if (!seen.insert(a.value()).second) {
            throw Error(ErrorCode::DuplicatePoint, "evaluation point " + a.to_string() + " repeated");
        }
    }

    const std::size_t n = alphas_.size();
    product_ = f.one();
    for (const Fe& a : alphas_) product_ *= a;
    u_.reserve(n);
    cofactors_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Fe denom = f.one();
        Fe cof = f.one();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            denom *= alphas_[i] - alphas_[j];
            cof *= alphas_[j];
        }
        u_.push_back(denom.inv());
        cofactors_.push_back(cof);
        if (!(u_.back() * denom).is_one() || !(alphas_[i] * cof == product_)) {
            throw Error(ErrorCode::InternalInconsistency, "derived point products failed their identities");
        }
    }
}

Fe power_sum_check(const EvalPoints& pts, std::int64_t h) {
    if (h < 0) throw Error(ErrorCode::IndexOutOfRange, "power must be nonnegative");
    const FieldCtx& f = pts.field();
    Fe sum = f.zero();
    for (std::size_t i = 0; i < pts.size(); ++i) sum += pts.u()[i] * pts.alphas()[i].pow(h);
    return sum;
}

std::vector<Fe> vandermonde_unit_solution(const EvalPoints& pts) {
    const FieldCtx& f = pts.field();
    const Fe sign = pts.size() % 2 == 1 ? f.one() : -f.one();
    std::vector<Fe> w;
    w.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) w.push_back(sign * pts.u()[i] * pts.cofactors()[i]);
    return w;
}

std::vector<Fe> roots_xn_minus_lambda(const FieldCtx& field, std::uint64_t n, const Fe& lambda) {
    if (!field.same_field(lambda.field())) throw Error(ErrorCode::MixedFields, "lambda from another field");
    if (lambda.is_zero()) throw Error(ErrorCode::ZeroLambda, "lambda must be nonzero");
    const std::uint64_t group = field.order() - 1;
    if (n == 0 || group % n != 0) {
        throw Error(ErrorCode::DoesNotDivide, std::to_string(n) + " does not divide q-1 = " + std::to_string(group));
    }
    const std::uint64_t ord = field.element_order(lambda);
    if ((group / n) % ord != 0) {
        throw Error(ErrorCode::OrderCondition, "ord(lambda) = " + std::to_string(ord) + " does not divide (q-1)/n = " +
                                                   std::to_string(group / n));
    }

    std::vector<Fe> roots;
    if (field.has_tables()) {
        // lambda = g^L with (q-1)/n | L; the roots are g^{L/n + j(q-1)/n}.
        const std::uint64_t stride = group / n;
        const std::uint64_t base = field.log(lambda) / n;
        for (std::uint64_t j = 0; j < n; ++j) roots.push_back(field.exp(base + j * stride));
    } else {
        for (const Fe& a : field.nonzero_elements()) {
            if (a.pow(static_cast<std::int64_t>(n)) == lambda) roots.push_back(a);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Fe& a, const Fe& b) { return a.value() < b.value(); });
    if (roots.size() != n) throw Error(ErrorCode::InternalInconsistency, "root count differs from n");
    for (const Fe& a : roots) {
        if (!(a.pow(static_cast<std::int64_t>(n)) == lambda)) {
            throw Error(ErrorCode::InternalInconsistency, "computed root does not satisfy x^n = lambda");
        }
    }
    return roots;
}

Fe omega(const EvalPoints& pts, std::span<const Fe> eta, std::int64_t r) {
    const auto ell = static_cast<std::int64_t>(eta.size()) - 1;
    if (r < 1 || r > ell + 1) {
        throw Error(ErrorCode::IndexOutOfRange, "Omega index " + std::to_string(r) + " outside 1.." + std::to_string(ell + 1));
    }
    const std::vector<Fe> s = complete_symmetric_upto(pts.alphas(), ell + 1 - r);
    Fe sum = pts.field().zero();
    for (std::int64_t t = 0; t <= ell; ++t) {
        const std::int64_t idx = t + 1 - r;
        if (idx >= 0) sum += eta[static_cast<std::size_t>(t)] * s[static_cast<std::size_t>(idx)];
    }
    return sum;
}

Fe phi(const EvalPoints& pts, std::span<const Fe> eta, std::int64_t i) {
    const FieldCtx& f = pts.field();
    const Fe sign = pts.size() % 2 == 1 ? f.one() : -f.one();
    return sign * pts.product() * omega(pts, eta, i);
}

Fe lcd_condition_value(const EvalPoints& pts, std::span<const Fe> eta, std::int64_t r) {
    const auto ell = static_cast<std::int64_t>(eta.size()) - 1;
    if (r < 0 || r > ell) {
        throw Error(ErrorCode::IndexOutOfRange, "r = " + std::to_string(r) + " outside 0.." + std::to_string(ell));
    }
    Fe value = pts.field().one();
    for (std::int64_t t = r; t <= ell; ++t) value += eta[static_cast<std::size_t>(t)] * phi(pts, eta, ell + 1 + r - t);
    return value;
}

}  // namespace twistlcd
