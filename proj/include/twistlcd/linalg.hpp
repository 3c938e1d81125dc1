#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "twistlcd/gf.hpp"

namespace twistlcd {

/// Dense row-major matrix over a finite field. Owns a handle to its field, so
/// elements read from it stay valid for the matrix's lifetime.
///
/// A matrix always has at least one column; zero rows are allowed so that an
/// empty kernel basis is representable.
class FMatrix {
public:
    FMatrix(Field field, std::size_t rows, std::size_t cols);

    static FMatrix identity(Field field, std::size_t n);
    /// Entries given as integers, reduced into the prime subfield.
    static FMatrix from_ints(Field field, std::size_t rows, std::size_t cols, std::span<const std::int64_t> values);
    static FMatrix from_rows(Field field, const std::vector<std::vector<Fe>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Field& field() const noexcept { return field_; }
    const FieldCtx& ctx() const noexcept { return *field_; }

    Fe at(std::size_t i, std::size_t j) const { return {field_.get(), raw(i, j)}; }
    void set(std::size_t i, std::size_t j, const Fe& value);
    std::vector<Fe> row(std::size_t i) const;

    std::uint32_t raw(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::uint32_t& raw(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    FMatrix transpose() const;
    /// Rows [first, first + count).
    FMatrix row_slice(std::size_t first, std::size_t count) const;
    /// Columns listed in `columns`, in that order.
    FMatrix select_columns(std::span<const std::size_t> columns) const;
    bool is_zero() const;

    friend bool operator==(const FMatrix& a, const FMatrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint32_t> data_;
};

FMatrix matmul(const FMatrix& a, const FMatrix& b);
/// Row-vector times matrix.
std::vector<Fe> vecmat(std::span<const Fe> v, const FMatrix& m);
FMatrix vstack(const FMatrix& top, const FMatrix& bottom);

std::size_t rank(const FMatrix& a);
Fe det(const FMatrix& a);
/// Reduced row echelon form, zero rows kept at the bottom.
FMatrix rref(const FMatrix& a);
/// RREF with the zero rows dropped (canonical basis of the row space).
FMatrix row_space_basis(const FMatrix& a);
/// Canonical basis of {x : a x^T = 0}, one basis vector per row.
FMatrix nullspace_basis(const FMatrix& a);
bool same_row_space(const FMatrix& a, const FMatrix& b);

/// Plain-text format: "rows cols q" then one line per row of canonical entries.
void write_matrix(std::ostream& os, const FMatrix& m);
/// Reads one matrix; nullopt at clean end of input.
std::optional<FMatrix> read_matrix(std::istream& is);
std::vector<FMatrix> read_matrices(std::istream& is);

}  // namespace twistlcd
