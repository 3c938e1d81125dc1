#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "support.hpp"
#include "twistlcd/error.hpp"
#include "twistlcd/reference_examples.hpp"

using namespace twistlcd;
using testsupport::Rng;

namespace {

TheoremInput input_of(const ReferenceExample& ex) {
    Field f = field_new(ex.q);
    return {ex.theorem, f, ex.n, ex.k, f->from_int(ex.lambda), testsupport::ints(*f, ex.eta),
            testsupport::ints(*f, ex.v), ex.r};
}

ErrorCode failure(const TheoremInput& in) {
    try {
        validate(in);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("theorem names") {
    CHECK(parse_theorem("T43") == Theorem::T43);
    CHECK(parse_theorem("t41") == Theorem::T41);
    CHECK_FALSE(parse_theorem("t45").has_value());
    CHECK(to_string(Theorem::T44) == "T44");
    CHECK(needs_r(Theorem::T42));
    CHECK_FALSE(needs_r(Theorem::T43));
}

TEST_CASE("reference examples validate under their theorem") {
    for (const auto& ex : reference_examples()) {
        CAPTURE(ex.name);
        TheoremInput in = input_of(ex);
        if (ex.q == 73) {
            // Stated r = 1 does not satisfy n = 2k+l+r; r = 2 does.
            CHECK(failure(in) == ErrorCode::LengthParity);
            in.r = 2;
        }
        TheoremSpec spec = validate(in);
        CHECK(spec.which == ex.theorem);
        CHECK(is_lcd(build(spec)).first);
        auto certified = applicable_theorems(in.field, ex.n, ex.k, in.lambda, in.eta, in.v);
        CHECK(std::find(certified.begin(), certified.end(), ex.theorem) != certified.end());
    }
}

TEST_CASE("condition values of the length-parity examples") {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> expected{{43, 5}, {41, 4}, {73, 25}, {29, 5}};
    for (auto [q, value] : expected) {
        for (const auto& ex : reference_examples()) {
            if (ex.q != q) continue;
            TheoremInput in = input_of(ex);
            in.r = static_cast<std::int64_t>(ex.n) - static_cast<std::int64_t>(2 * ex.k + ex.eta.size() - 1);
            auto spec = validate(in);
            REQUIRE(spec.condition_value.has_value());
            CHECK(spec.condition_value->value() == value);
        }
    }
}

TEST_CASE("validation order and error names") {
    const auto& ex = reference_examples()[2];  // T42, q = 43
    TheoremInput base = input_of(ex);

    TheoremInput in = base;
    in.k = 1;
    CHECK(failure(in) == ErrorCode::DimensionRange);

    in = base;
    in.r.reset();
    CHECK(failure(in) == ErrorCode::InvalidParams);

    in = base;
    in.r = 4;
    CHECK(failure(in) == ErrorCode::DimensionRange);

    in = base;
    in.r = 1;
    CHECK(failure(in) == ErrorCode::LengthParity);

    in = base;
    in.v[0] = in.field->one();
    CHECK(failure(in) == ErrorCode::VPattern);

    in = base;
    in.v[3] = in.field->from_int(5);
    CHECK(failure(in) == ErrorCode::VPattern);

    in = base;
    in.v.pop_back();
    CHECK(failure(in) == ErrorCode::InvalidParams);

    in = base;
    in.lambda = in.field->from_int(2);  // ord 14 does not divide 6
    CHECK(failure(in) == ErrorCode::OrderCondition);

    TheoremInput t41 = input_of(reference_examples()[0]);
    t41.n = 10;
    t41.v.resize(10);
    CHECK(failure(t41) == ErrorCode::DimensionRange);
    t41 = input_of(reference_examples()[0]);
    t41.eta = testsupport::ints(*t41.field, {1, 1});
    t41.n = 7;
    t41.v.resize(7);
    CHECK(failure(t41) == ErrorCode::DoesNotDivide);
}

TEST_CASE("a vanishing condition value is rejected" * doctest::timeout(60)) {
    Rng rng(14);
    Field f = field_new(29);
    int zero_seen = 0;
    for (int trial = 0; trial < 4000 && zero_seen < 5; ++trial) {
        auto in = testsupport::random_theorem_input(f, Theorem::T44, rng);
        REQUIRE(in.has_value());
        EvalPoints pts(roots_xn_minus_lambda(*f, in->n, in->lambda));
        if (!lcd_condition_value(pts, in->eta, *in->r).is_zero()) continue;
        ++zero_seen;
        CHECK(failure(*in) == ErrorCode::ConditionZero);
    }
    CHECK(zero_seen > 0);
}

TEST_CASE("condition value vanishes exactly when the code is not LCD" * doctest::timeout(60)) {
    Rng rng(15);
    for (std::uint64_t q : {29ULL, 41ULL, 43ULL}) {
        Field f = field_new(q);
        for (Theorem t : {Theorem::T42, Theorem::T44}) {
            for (int trial = 0; trial < 300; ++trial) {
                auto in = testsupport::random_theorem_input(f, t, rng);
                REQUIRE(in.has_value());
                auto roots = roots_xn_minus_lambda(*f, in->n, in->lambda);
                TwistedParams p(f, in->k, roots, in->v, in->eta, in->lambda);
                bool zero = lcd_condition_value(p.points(), p.eta(), *in->r).is_zero();
                CHECK(zero == !is_lcd(twisted_code(p)).first);
            }
        }
    }
}

TEST_CASE("search finds the reference instance") {
    SearchQuery q;
    q.field = field_new(29);
    q.n_min = q.n_max = 7;
    q.theorems = {Theorem::T44};
    SearchResult res = search(q);
    CHECK(res.violations.empty());
    const FieldCtx& f = *q.field;
    auto eta = testsupport::ints(f, {1, 1, 1, 1});
    auto v = testsupport::ints(f, {1, -1, -1, 1, 1, -1, 2});
    bool found = false;
    for (const auto& e : res.entries) {
        const auto& p = e.spec.params;
        if (p.lambda() && p.lambda()->is_one() && p.eta() == eta && p.v() == v) {
            found = true;
            CHECK(e.report.d == 5);
            CHECK(e.report.mds_class == MdsClass::NMDS);
        }
    }
    CHECK(found);
}

TEST_CASE("search results are certified, sorted and reproducible") {
    SearchQuery q;
    q.field = field_new(23);
    q.n_min = 5;
    q.n_max = 11;
    q.k_max = 3;
    q.theorems = {Theorem::T41, Theorem::T42, Theorem::T43, Theorem::T44};
    q.budget = 3000;
    q.seed = 7;
    SearchResult a = search(q);
    SearchResult b = search(q);
    REQUIRE(a.entries.size() == b.entries.size());
    CHECK(!a.entries.empty());
    CHECK(a.evaluated <= q.budget);
    for (std::size_t i = 0; i < a.entries.size(); ++i) CHECK(entry_to_json(a.entries[i]) == entry_to_json(b.entries[i]));
    auto rank = [](MdsClass c) { return c == MdsClass::MDS ? 0 : c == MdsClass::NMDS ? 1 : c == MdsClass::AMDS ? 2 : 3; };
    for (std::size_t i = 1; i < a.entries.size(); ++i) {
        const auto& x = a.entries[i - 1].report;
        const auto& y = a.entries[i].report;
        CHECK(std::make_tuple(x.n, x.k, rank(x.mds_class)) <= std::make_tuple(y.n, y.k, rank(y.mds_class)));
    }
    for (const auto& e : a.entries) CHECK(e.report.lcd);
}

TEST_CASE("search edge cases") {
    SearchQuery q;
    q.field = field_new(29);
    q.n_min = q.n_max = 7;
    CHECK(search(q).entries.empty());  // no theorems
    q.theorems = {Theorem::T41};
    q.n_min = q.n_max = 5;  // 5 does not divide 28
    CHECK(search(q).entries.empty());
    q.n_min = q.n_max = 7;
    q.budget = 10;
    SearchResult small = search(q);
    CHECK(small.truncated);
    CHECK(small.evaluated <= 10);
}

TEST_CASE("entry JSON") {
    const auto& ex = reference_examples()[7];
    TheoremSpec spec = validate(input_of(ex));
    SearchEntry e{spec, analyze(build(spec))};
    auto j = nlohmann::json::parse(entry_to_json(e));
    CHECK(j["theorem"] == "T44");
    CHECK(j["q"] == 29);
    CHECK(j["v"] == nlohmann::json::array({1, 28, 28, 1, 1, 28, 2}));
    CHECK(j["condition"] == 5);
    CHECK(j["report"]["d"] == 5);
    CHECK(j["report"]["class"] == "NMDS");
}
