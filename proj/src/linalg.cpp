#include "twistlcd/linalg.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace twistlcd {

namespace {

void require_same_field(const FieldCtx& a, const FieldCtx& b) {
    if (&a != &b && !a.same_field(b)) throw Error(ErrorCode::MixedFields, "matrices over different fields");
}

// In-place reduction to RREF; returns the pivot column of each nonzero row.
std::vector<std::size_t> reduce(FMatrix& m) {
    const FieldCtx& f = m.ctx();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.raw(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.raw(p, j), m.raw(r, j));
        }
        const std::uint32_t inv = f.inv_raw(m.raw(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.raw(r, j) = f.mul_raw(m.raw(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const std::uint32_t factor = m.raw(i, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j) {
                m.raw(i, j) = f.sub_raw(m.raw(i, j), f.mul_raw(factor, m.raw(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

FMatrix::FMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (!field_) throw Error(ErrorCode::InvalidParams, "matrix without a field");
    if (cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix needs at least one column");
}

FMatrix FMatrix::identity(Field field, std::size_t n) {
    FMatrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.raw(i, i) = 1;
    return m;
}

FMatrix FMatrix::from_ints(Field field, std::size_t rows, std::size_t cols, std::span<const std::int64_t> values) {
    if (values.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "entry count does not match shape");
    FMatrix m(std::move(field), rows, cols);
    for (std::size_t i = 0; i < values.size(); ++i) m.data_[i] = m.field_->from_int(values[i]).value();
    return m;
}

FMatrix FMatrix::from_rows(Field field, const std::vector<std::vector<Fe>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    FMatrix m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void FMatrix::set(std::size_t i, std::size_t j, const Fe& value) {
    require_same_field(*field_, value.field());
    raw(i, j) = value.value();
}

std::vector<Fe> FMatrix::row(std::size_t i) const {
    std::vector<Fe> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

FMatrix FMatrix::transpose() const {
    if (rows_ == 0) throw Error(ErrorCode::DimensionMismatch, "cannot transpose a matrix without rows");
    FMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t.raw(j, i) = raw(i, j);
    }
    return t;
}

FMatrix FMatrix::row_slice(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw Error(ErrorCode::IndexOutOfRange, "row slice out of range");
    FMatrix s(field_, count, cols_);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), s.data_.begin());
    return s;
}

FMatrix FMatrix::select_columns(std::span<const std::size_t> columns) const {
    FMatrix s(field_, rows_, columns.size());
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j] >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
            s.raw(i, j) = raw(i, columns[j]);
        }
    }
    return s;
}

bool FMatrix::is_zero() const {
    for (std::uint32_t v : data_) {
        if (v) return false;
    }
    return true;
}

bool operator==(const FMatrix& a, const FMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_->same_field(*b.field_) && a.data_ == b.data_;
}

FMatrix matmul(const FMatrix& a, const FMatrix& b) {
    require_same_field(a.ctx(), b.ctx());
    if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "inner dimensions differ");
    const FieldCtx& f = a.ctx();
    FMatrix c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const std::uint32_t x = a.raw(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c.raw(i, j) = f.add_raw(c.raw(i, j), f.mul_raw(x, b.raw(l, j)));
            }
        }
    }
    return c;
}

std::vector<Fe> vecmat(std::span<const Fe> v, const FMatrix& m) {
    if (v.size() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from row count");
    std::vector<Fe> out(m.cols(), m.ctx().zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        require_same_field(m.ctx(), v[i].field());
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
    }
    return out;
}

FMatrix vstack(const FMatrix& top, const FMatrix& bottom) {
    require_same_field(top.ctx(), bottom.ctx());
    if (top.cols() != bottom.cols()) throw Error(ErrorCode::DimensionMismatch, "column counts differ");
    FMatrix s(top.field(), top.rows() + bottom.rows(), top.cols());
    for (std::size_t i = 0; i < top.rows(); ++i) {
        for (std::size_t j = 0; j < top.cols(); ++j) s.raw(i, j) = top.raw(i, j);
    }
    for (std::size_t i = 0; i < bottom.rows(); ++i) {
        for (std::size_t j = 0; j < top.cols(); ++j) s.raw(top.rows() + i, j) = bottom.raw(i, j);
    }
    return s;
}

std::size_t rank(const FMatrix& a) {
    FMatrix work = a;
    return reduce(work).size();
}

Fe det(const FMatrix& a) {
    if (a.rows() != a.cols()) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
    const FieldCtx& f = a.ctx();
    FMatrix m = a;
    const std::size_t n = m.rows();
    std::uint32_t d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m.raw(p, c) == 0) ++p;
        if (p == n) return f.zero();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.raw(p, j), m.raw(c, j));
            d = f.neg_raw(d);
        }
        const std::uint32_t pivot = m.raw(c, c);
        d = f.mul_raw(d, pivot);
        const std::uint32_t inv = f.inv_raw(pivot);
        for (std::size_t i = c + 1; i < n; ++i) {
            const std::uint32_t factor = f.mul_raw(m.raw(i, c), inv);
            if (factor == 0) continue;
            for (std::size_t j = c; j < n; ++j) m.raw(i, j) = f.sub_raw(m.raw(i, j), f.mul_raw(factor, m.raw(c, j)));
        }
    }
    return {a.field().get(), d};
}

FMatrix rref(const FMatrix& a) {
    FMatrix work = a;
    reduce(work);
    return work;
}

FMatrix row_space_basis(const FMatrix& a) {
    FMatrix work = a;
    const std::size_t r = reduce(work).size();
    return work.row_slice(0, r);
}

FMatrix nullspace_basis(const FMatrix& a) {
    FMatrix work = a;
    const std::vector<std::size_t> pivots = reduce(work);
    const FieldCtx& f = a.ctx();
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    // One kernel vector per free column: set that coordinate to 1 and solve
    // the pivot coordinates from the RREF rows.
    FMatrix basis(a.field(), a.cols() - pivots.size(), a.cols());
    std::size_t row = 0;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis.raw(row, free) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis.raw(row, pivots[i]) = f.neg_raw(work.raw(i, free));
        ++row;
    }
    if (basis.rows() == 0) return basis;
    return rref(basis);
}

bool same_row_space(const FMatrix& a, const FMatrix& b) {
    require_same_field(a.ctx(), b.ctx());
    if (a.cols() != b.cols()) return false;
    return row_space_basis(a) == row_space_basis(b);
}

void write_matrix(std::ostream& os, const FMatrix& m) {
    os << m.rows() << ' ' << m.cols() << ' ' << m.ctx().order() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.ctx().format_raw(m.raw(i, j));
        }
        os << '\n';
    }
}

namespace {

Field field_of_order(std::uint64_t q) {
    if (q < 3) throw Error(ErrorCode::ParseError, "field order " + std::to_string(q) + " is too small");
    const auto factors = prime_factors(q);
    if (factors.size() != 1) throw Error(ErrorCode::ParseError, std::to_string(q) + " is not a prime power");
    unsigned m = 0;
    for (std::uint64_t r = q; r > 1; r /= factors[0]) ++m;
    return field_new(factors[0], m);
}

}  // namespace

std::optional<FMatrix> read_matrix(std::istream& is) {
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream header(line);
        std::uint64_t rows = 0, cols = 0, q = 0;
        std::string extra;
        if (!(header >> rows >> cols >> q) || (header >> extra)) {
            throw Error(ErrorCode::ParseError, "expected matrix header 'rows cols q', got '" + line + "'");
        }
        Field field = field_of_order(q);
        FMatrix m(field, rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            if (!std::getline(is, line)) throw Error(ErrorCode::ParseError, "matrix truncated");
            std::istringstream body(line);
            std::string token;
            std::size_t j = 0;
            while (body >> token) {
                if (j >= cols) throw Error(ErrorCode::ParseError, "too many entries in row " + std::to_string(i));
                m.raw(i, j++) = field->parse(token).value();
            }
            if (j != cols) throw Error(ErrorCode::ParseError, "too few entries in row " + std::to_string(i));
        }
        return m;
    }
    return std::nullopt;
}

std::vector<FMatrix> read_matrices(std::istream& is) {
    std::vector<FMatrix> out;
    while (auto m = read_matrix(is)) out.push_back(std::move(*m));
    return out;
}

}  // namespace twistlcd
