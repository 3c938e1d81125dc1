#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "twistlcd/error.hpp"
#include "twistlcd/reference_examples.hpp"

using namespace twistlcd;
using testsupport::Rng;

namespace {

TwistedParams example_params(const ReferenceExample& ex) {
    Field f = field_new(ex.q);
    return TwistedParams::from_lambda(f, ex.n, ex.k, f->from_int(ex.lambda), testsupport::ints(*f, ex.v),
                                      testsupport::ints(*f, ex.eta));
}

}  // namespace

TEST_CASE("reference tables and generator matrices") {
    for (const auto& ex : reference_examples()) {
        CAPTURE(ex.name);
        TwistedParams p = example_params(ex);
        const FieldCtx& f = p.ctx();
        CHECK(p.alphas() == testsupport::ints(f, ex.alphas));
        for (std::size_t j = 1; j <= p.n(); ++j) {
            CHECK(twist_sum(p, j) == f.from_int(ex.twist_sums[j - 1]));
            CHECK(twist_column_header(p, j) == f.from_int(ex.twist_headers[j - 1]));
        }
        FMatrix g = generator_matrix(p);
        for (std::size_t i = 0; i < ex.generator.size(); ++i) CHECK(g.row(i) == testsupport::ints(f, ex.generator[i]));
    }
}

TEST_CASE("parameter validation") {
    Field f = field_new(23);
    auto pts = testsupport::ints(*f, {1, 2, 3, 4, 5, 6});
    auto ones = [&](std::size_t n) { return std::vector<Fe>(n, f->one()); };
    CHECK_NOTHROW(TwistedParams(f, 2, pts, ones(6), ones(4)));  // k + l + 1 = n
    CHECK_THROWS_AS(TwistedParams(f, 2, pts, ones(6), ones(5)), Error);
    CHECK_THROWS_AS(TwistedParams(f, 1, pts, ones(6), ones(1)), Error);
    CHECK_THROWS_AS(TwistedParams(f, 2, pts, ones(5), ones(1)), Error);
    CHECK_THROWS_AS(TwistedParams(f, 2, pts, ones(6), {f->zero(), f->zero()}), Error);
    auto v = ones(6);
    v[3] = f->zero();
    CHECK_THROWS_AS(TwistedParams(f, 2, pts, v, ones(1)), Error);
    CHECK_THROWS_AS(TwistedParams(f, 2, pts, ones(6), ones(1), f->one()), Error);  // not roots of x^6 - 1
    CHECK_NOTHROW(TwistedParams::from_lambda(f, 11, 2, f->one(), ones(11), ones(2)));
}

TEST_CASE("G H^T = 0 and rank H = n - k on random parameters") {
    Rng rng(4);
    for (std::uint64_t p : {23ULL, 41ULL, 61ULL}) {
        Field f = field_new(p);
        for (int trial = 0; trial < 30; ++trial) {
            TwistedParams tp = testsupport::random_params(f, rng, 12, trial % 3 == 0);
            FMatrix g = generator_matrix(tp);
            FMatrix h = parity_check_matrix(tp);
            CHECK(h.rows() == tp.n() - tp.k());
            CHECK(matmul(g, h.transpose()).is_zero());
            CHECK(rank(h) == tp.n() - tp.k());
            CHECK(same_row_space(h, nullspace_basis(g)));
        }
    }
}

TEST_CASE("encoding agrees with the generator matrix and the polynomial") {
    Rng rng(9);
    Field f = field_new(41);
    for (int trial = 0; trial < 30; ++trial) {
        TwistedParams tp = testsupport::random_params(f, rng, 10);
        std::vector<Fe> msg(tp.k());
        for (auto& m : msg) m = testsupport::random_element(*f, rng);
        auto cw = encode(tp, msg);
        CHECK(cw == vecmat(msg, generator_matrix(tp)));
        auto poly = twisted_polynomial(tp, msg);
        REQUIRE(poly.size() == tp.k() + tp.ell() + 1);
        for (std::size_t j = 0; j < tp.n(); ++j) {
            Fe val = f->zero();
            for (std::size_t i = poly.size(); i-- > 0;) val = val * tp.alphas()[j] + poly[i];
            CHECK(cw[j] == tp.v()[j] * val);
        }
        CHECK_THROWS_AS(encode(tp, std::vector<Fe>(tp.k() + 1, f->one())), Error);
    }
}

TEST_CASE("LinearCode construction") {
    Field f = field_new(7);
    std::vector<std::int64_t> dependent{1, 2, 3, 2, 4, 6};
    CHECK_THROWS_AS(LinearCode(FMatrix::from_ints(f, 2, 3, dependent)), Error);
    std::vector<std::int64_t> gv{1, 0, 1, 0, 1, 1};
    FMatrix g = FMatrix::from_ints(f, 2, 3, gv);
    LinearCode c(g);
    CHECK(matmul(g, c.parity_check().transpose()).is_zero());
    std::vector<std::int64_t> wrong{1, 1, 1};
    CHECK_THROWS_AS(LinearCode(g, FMatrix::from_ints(f, 1, 3, wrong)), Error);
    std::vector<std::int64_t> right{1, 1, -1};
    CHECK_NOTHROW(LinearCode(g, FMatrix::from_ints(f, 1, 3, right)));
}

TEST_CASE("twist column index range") {
    TwistedParams p = example_params(reference_examples().front());
    CHECK_THROWS_AS(twist_sum(p, 0), Error);
    CHECK_THROWS_AS(twist_column_header(p, p.n() + 1), Error);
}
