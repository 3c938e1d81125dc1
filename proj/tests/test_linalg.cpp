#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "twistlcd/error.hpp"

using namespace twistlcd;
using testsupport::Rng;

TEST_CASE("determinant of small matrices") {
    Field f = field_new(7);
    std::vector<std::int64_t> a{1, 2, 3, 4};
    CHECK(det(FMatrix::from_ints(f, 2, 2, a)).value() == 5);  // 4 - 6 = -2
    std::vector<std::int64_t> b{0, 1, 1, 0};
    CHECK(det(FMatrix::from_ints(f, 2, 2, b)).value() == 6);  // row swap flips the sign
    CHECK(det(FMatrix::identity(f, 4)).is_one());
    std::vector<std::int64_t> c{1, 2, 2, 4};
    CHECK(det(FMatrix::from_ints(f, 2, 2, c)).is_zero());
    FMatrix r(f, 2, 3);
    CHECK_THROWS_AS(det(r), Error);
}

TEST_CASE("Vandermonde determinant matches the product formula") {
    Field f = field_new(41);
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto xs = testsupport::random_points(*f, 6, rng);
        FMatrix v(f, 6, 6);
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) v.set(i, j, xs[j].pow(static_cast<std::int64_t>(i)));
        Fe expected = f->one();
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = i + 1; j < 6; ++j) expected *= xs[j] - xs[i];
        CHECK(det(v) == expected);
    }
}

TEST_CASE("rank, nullspace and row space") {
    Rng rng(11);
    for (auto [p, m] : {std::pair{7ULL, 1U}, {23ULL, 1U}, {3ULL, 2U}}) {
        Field f = field_new(p, m);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 7;
            FMatrix a = testsupport::random_matrix(f, rows, cols, rng);
            std::size_t rk = rank(a);
            FMatrix ns = nullspace_basis(a);
            CHECK(ns.rows() == cols - rk);
            if (ns.rows() > 0) {
                CHECK(matmul(a, ns.transpose()).is_zero());
                CHECK(rank(ns) == ns.rows());
            }
            CHECK(rank(a.transpose()) == rk);
            FMatrix basis = row_space_basis(a);
            CHECK(basis.rows() == rk);
            if (rk > 0) CHECK(same_row_space(a, basis));
            CHECK(rref(rref(a)) == rref(a));
        }
    }
}

TEST_CASE("det is nonzero iff full rank") {
    Field f = field_new(7);
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        FMatrix a = testsupport::random_matrix(f, 3, 3, rng);
        CHECK(det(a).is_zero() == (rank(a) < 3));
    }
}

TEST_CASE("matmul, transpose and vecmat agree") {
    Field f = field_new(23);
    Rng rng(8);
    FMatrix a = testsupport::random_matrix(f, 3, 4, rng);
    FMatrix b = testsupport::random_matrix(f, 4, 5, rng);
    CHECK(matmul(a, b).transpose() == matmul(b.transpose(), a.transpose()));
    CHECK(matmul(FMatrix::identity(f, 3), a) == a);
    auto row0 = vecmat(std::vector<Fe>{f->one(), f->zero(), f->zero()}, a);
    CHECK(row0 == a.row(0));
    CHECK_THROWS_AS(matmul(a, a), Error);
    FMatrix s = vstack(a, a.row_slice(1, 2));
    CHECK(s.rows() == 5);
    CHECK(s.row(4) == a.row(2));
    std::vector<std::size_t> cols{3, 0};
    FMatrix sel = a.select_columns(cols);
    CHECK(sel.at(1, 0) == a.at(1, 3));
    CHECK(sel.at(2, 1) == a.at(2, 0));
}

TEST_CASE("mixed-field operations are rejected") {
    FMatrix a = FMatrix::identity(field_new(7), 2);
    FMatrix b = FMatrix::identity(field_new(11), 2);
    CHECK_THROWS_AS(matmul(a, b), Error);
}

TEST_CASE("plain-text matrix format round trip") {
    Rng rng(21);
    for (auto [p, m] : {std::pair{61ULL, 1U}, {3ULL, 2U}}) {
        Field f = field_new(p, m);
        FMatrix a = testsupport::random_matrix(f, 3, 5, rng);
        FMatrix b = testsupport::random_matrix(f, 2, 5, rng);
        std::stringstream ss;
        write_matrix(ss, a);
        write_matrix(ss, b);
        auto back = read_matrices(ss);
        REQUIRE(back.size() == 2);
        CHECK(back[0] == a);
        CHECK(back[1] == b);
    }
    std::stringstream first_line;
    write_matrix(first_line, FMatrix::identity(field_new(61), 2));
    std::string header;
    std::getline(first_line, header);
    CHECK(header == "2 2 61");
}

TEST_CASE("malformed matrix text") {
    std::istringstream bad_header("2 x 7\n1 2\n");
    CHECK_THROWS_AS(read_matrix(bad_header), Error);
    std::istringstream truncated("2 2 7\n1 2\n");
    CHECK_THROWS_AS(read_matrix(truncated), Error);
    std::istringstream not_prime_power("1 2 12\n1 2\n");
    CHECK_THROWS_AS(read_matrix(not_prime_power), Error);
    std::istringstream empty("");
    CHECK_FALSE(read_matrix(empty).has_value());
}
