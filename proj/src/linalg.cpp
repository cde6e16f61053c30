#include "linalg.hpp"

#include <algorithm>

#include "errors.hpp"

namespace arrdeform {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m{field, n, n};
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<ScalarVec>& rows,
                         std::size_t cols) {
    Matrix m{field, rows.size(), cols};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw InputError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(rows[i][j].field() == field))
                throw ContractError("matrix entry from a different field");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

ScalarVec Matrix::row(std::size_t i) const {
    return ScalarVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Matrix Matrix::transposed() const {
    Matrix t{field_, cols_, rows_};
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::with_rows(std::span<const std::size_t> indices) const {
    Matrix m{field_, indices.size(), cols_};
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= rows_) throw InputError("row index out of range");
        for (std::size_t j = 0; j < cols_; ++j) m.at(k, j) = at(indices[k], j);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& below) const {
    if (below.cols_ != cols_ || !(below.field_ == field_))
        throw ContractError("vstack shape or field mismatch");
    Matrix m{field_, rows_ + below.rows_, cols_};
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
}

Matrix Matrix::augmented(std::span<const Scalar> column) const {
    if (column.size() != rows_) throw InputError("augmented column length mismatch");
    Matrix m{field_, rows_, cols_ + 1};
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        m.at(i, cols_) = column[i];
    }
    return m;
}

Matrix Matrix::without_zero_rows() const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < rows_; ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < cols_ && !nonzero; ++j) nonzero = !at(i, j).is_zero();
        if (nonzero) keep.push_back(i);
    }
    return with_rows(keep);
}

bool Matrix::operator==(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || !(field_ == other.field_))
        return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (data_[k] != other.data_[k]) return false;
    return true;
}

std::string Matrix::key() const {
    std::string s = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
    for (std::size_t k = 0; k < data_.size(); ++k) {
        if (k) s += ",";
        s += data_[k].str();
    }
    return s;
}

Matrix rref(const Matrix& input) {
    Matrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(lead, j));
        const Scalar inv = m.at(lead, col).inverse();
        for (std::size_t j = col; j < cols; ++j) m.at(lead, j) = m.at(lead, j) * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m.at(r, col).is_zero()) continue;
            const Scalar factor = m.at(r, col);
            for (std::size_t j = col; j < cols; ++j)
                m.at(r, j) = m.at(r, j) - factor * m.at(lead, j);
        }
        ++lead;
    }
    return m;
}

std::vector<std::size_t> pivot_columns(const Matrix& rref_form) {
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < rref_form.rows(); ++i) {
        for (std::size_t j = 0; j < rref_form.cols(); ++j) {
            if (!rref_form.at(i, j).is_zero()) {
                pivots.push_back(j);
                break;
            }
        }
    }
    return pivots;
}

std::size_t rank(const Matrix& m) {
    return pivot_columns(rref(m)).size();
}

bool is_consistent(const Matrix& m, std::span<const Scalar> b) {
    if (b.size() != m.rows()) throw InputError("right-hand side length mismatch");
    const Matrix r = rref(m.augmented(b));
    for (std::size_t col : pivot_columns(r))
        if (col == m.cols()) return false;
    return true;
}

ScalarVec left_kernel_line(const Matrix& m) {
    // c M = 0 for row vectors c is the kernel of M^T.
    const Matrix r = rref(m.transposed());
    const auto pivots = pivot_columns(r);
    if (m.rows() == 0 || pivots.size() != m.rows() - 1)
        throw ContractError("left_kernel_line: rows are not minimally dependent");
    std::size_t free_col = m.rows();
    for (std::size_t j = 0, p = 0; j < m.rows(); ++j) {
        if (p < pivots.size() && pivots[p] == j) {
            ++p;
        } else {
            free_col = j;
            break;
        }
    }
    const Field& f = m.field();
    ScalarVec v(m.rows(), f.zero());
    v[free_col] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free_col);
    for (const Scalar& entry : v)
        if (entry.is_zero())
            throw ContractError("left_kernel_line: rows are not minimally dependent");
    const Scalar scale = v.front().inverse();
    for (Scalar& entry : v) entry = entry * scale;
    return v;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw ContractError("dot product length mismatch");
    if (a.empty()) throw ContractError("dot product of empty vectors needs a field");
    Scalar s = a[0].field().zero();
    for (std::size_t k = 0; k < a.size(); ++k) s = s + a[k] * b[k];
    return s;
}

}  // namespace arrdeform
