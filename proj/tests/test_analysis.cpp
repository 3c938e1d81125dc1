#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>

#include "support.hpp"
#include "twistlcd/analysis.hpp"
#include "twistlcd/error.hpp"
#include "twistlcd/reference_examples.hpp"

using namespace twistlcd;
using testsupport::Rng;

TEST_CASE("trivial LCD code") {
    Field f = field_new(7);
    std::vector<std::int64_t> g{1, 0, 0, 0, 1, 0};
    LinearCode c(FMatrix::from_ints(f, 2, 3, g));
    auto [lcd, ev] = is_lcd(c);
    CHECK(lcd);
    CHECK(ev.stack_rank);
    CHECK(ev.gram_nonsingular);
    CHECK(ev.hull_trivial);
    CHECK(min_distance(c) == 1);
}

TEST_CASE("self-orthogonal code is not LCD") {
    Field f = field_new(5);
    // (1, 2) is isotropic over GF(5): 1 + 4 = 0.
    std::vector<std::int64_t> g{1, 2};
    LinearCode c(FMatrix::from_ints(f, 1, 2, g));
    CHECK_FALSE(is_lcd(c).first);
    CHECK(hull_dimension(c) == 1);
}

TEST_CASE("reference examples analyze to their stated parameters") {
    for (const auto& ex : reference_examples()) {
        CAPTURE(ex.name);
        Field f = field_new(ex.q);
        auto p = TwistedParams::from_lambda(f, ex.n, ex.k, f->from_int(ex.lambda), testsupport::ints(*f, ex.v),
                                            testsupport::ints(*f, ex.eta));
        AnalysisReport r = analyze(twisted_code(p));
        CHECK(r.n == ex.n);
        CHECK(r.k == ex.k);
        CHECK(r.d == ex.d);
        CHECK(r.mds_class == ex.mds_class);
        CHECK(r.lcd == ex.lcd);
        CHECK(r.hull_dim == 0);
        if (r.mds_class == MdsClass::NMDS) {
            REQUIRE(r.d_dual.has_value());
            CHECK(*r.d_dual == r.k);
        }
    }
}

TEST_CASE("min_distance against full enumeration") {
    Rng rng(6);
    for (auto [p, m] : {std::pair{7ULL, 1U}, {23ULL, 1U}, {3ULL, 2U}}) {
        Field f = field_new(p, m);
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t k = 1 + rng() % 3, n = k + rng() % 6;
            FMatrix g = testsupport::random_full_rank(f, k, n, rng);
            CHECK(min_distance(LinearCode(g)) == testsupport::naive_min_distance(g));
        }
    }
}

TEST_CASE("dual distance against the dual code's minimum distance") {
    Rng rng(7);
    Field f = field_new(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 4 + rng() % 4, k = 1 + rng() % (n - 2);
        FMatrix g = testsupport::random_full_rank(f, k, n, rng);
        LinearCode c(g);
        LinearCode d = dual_code(c);
        if (d.dimension() <= 4) CHECK(dual_distance(c) == testsupport::naive_min_distance(d.generator()));
        CHECK(same_row_space(dual_code(d).generator(), g));
    }
}

TEST_CASE("LCD criteria agree on random codes") {
    Rng rng(8);
    for (std::uint64_t p : {7ULL, 23ULL}) {
        Field f = field_new(p);
        for (int trial = 0; trial < 100; ++trial) {
            std::size_t n = 2 + rng() % 6, k = 1 + rng() % (n - 1);
            LinearCode c(testsupport::random_full_rank(f, k, n, rng));
            auto [lcd, ev] = is_lcd(c);
            CHECK(ev.stack_rank == ev.gram_nonsingular);
            CHECK(ev.gram_nonsingular == ev.hull_trivial);
            CHECK(lcd == (hull_dimension(c) == 0));
        }
    }
}

TEST_CASE("classification") {
    Field f = field_new(7);
    // Repetition code [3,1,3] is MDS.
    std::vector<std::int64_t> rep{1, 1, 1};
    CHECK(classify_mds(LinearCode(FMatrix::from_ints(f, 1, 3, rep))) == MdsClass::MDS);
    // [4,2,2] with d = n-k: the dual has d' = 2 = k, so NMDS.
    std::vector<std::int64_t> g{1, 0, 1, 0, 0, 1, 0, 1};
    CHECK(classify_mds(LinearCode(FMatrix::from_ints(f, 2, 4, g))) == MdsClass::NMDS);
    // [4,2,1] is neither.
    std::vector<std::int64_t> h{1, 0, 0, 0, 0, 1, 1, 1};
    CHECK(classify_mds(LinearCode(FMatrix::from_ints(f, 2, 4, h))) == MdsClass::NEITHER);
    // [5,2,3] whose dual [5,3,1] is not MDS-adjacent: AMDS.
    std::vector<std::int64_t> a{1, 0, 1, 1, 0, 0, 1, 1, 2, 0};
    LinearCode amds(FMatrix::from_ints(f, 2, 5, a));
    CHECK(min_distance(amds) == 3);
    CHECK(dual_distance(amds) == 1);
    CHECK(classify_mds(amds) == MdsClass::AMDS);
}

TEST_CASE("report JSON") {
    Field f = field_new(7);
    std::vector<std::int64_t> g{1, 0, 0, 0, 1, 0};
    AnalysisReport r = analyze(LinearCode(FMatrix::from_ints(f, 2, 3, g)));
    CHECK(r.to_json() ==
          R"({"n":3,"k":2,"d":1,"d_dual":1,"class":"AMDS","lcd":true,"lcd_evidence":[true,true,true],"hull_dim":0})");
}

TEST_CASE("enumeration guard") {
    Field f = field_new(61);
    Rng rng(10);
    LinearCode big(testsupport::random_full_rank(f, 5, 8, rng));
    try {
        min_distance(big);
        FAIL("guard not triggered");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLargeToEnumerate);
    }
    ::setenv("TWISTLCD_GUARD", "100", 1);
    CHECK(enumeration_guard() == 100);
    LinearCode medium(testsupport::random_full_rank(f, 3, 8, rng));  // 3783 classes
    CHECK_THROWS_AS(min_distance(medium), Error);
    ::unsetenv("TWISTLCD_GUARD");
    CHECK(enumeration_guard() == 10'000'000);
}

TEST_CASE("parallel enumeration matches the oracle" * doctest::timeout(60)) {
    // 7^7 messages, (7^7 - 1)/6 = 137257 scalar classes: above the threading threshold.
    Field f = field_new(7);
    Rng rng(12);
    FMatrix g = testsupport::random_full_rank(f, 7, 9, rng);
    CHECK(min_distance(LinearCode(g)) == testsupport::naive_min_distance(g));
}

TEST_CASE("distances are cached across copies") {
    Field f = field_new(23);
    Rng rng(13);
    LinearCode c(testsupport::random_full_rank(f, 2, 6, rng));
    LinearCode copy = c;
    std::size_t d = min_distance(c);
    int calls = 0;
    CHECK(copy.cached_distance([&] {
        ++calls;
        return std::size_t{0};
    }) == d);
    CHECK(calls == 0);
}
