#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "field.hpp"

namespace arrdeform {

using ScalarVec = std::vector<Scalar>;

/// Dense matrix over one field. Immutable value semantics: every
/// operation returns a new matrix.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);  // zero-filled
    static Matrix identity(const Field& field, std::size_t n);
    // `cols` disambiguates the zero-row case.
    static Matrix from_rows(const Field& field, const std::vector<ScalarVec>& rows,
                            std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    ScalarVec row(std::size_t i) const;

    Matrix transposed() const;
    Matrix with_rows(std::span<const std::size_t> indices) const;
    Matrix vstack(const Matrix& below) const;
    Matrix augmented(std::span<const Scalar> column) const;
    Matrix without_zero_rows() const;

    bool operator==(const Matrix& other) const;
    std::string key() const;  // canonical serialization, usable as a map key

private:
    Field field_;
    std::size_t rows_, cols_;
    ScalarVec data_;  // row-major
};

/// Unique reduced row echelon form: pivots are 1 with zeros above and below,
/// pivot search takes the first nonzero entry in column order.
Matrix rref(const Matrix& m);

/// Column indices of the pivots of a matrix already in RREF.
std::vector<std::size_t> pivot_columns(const Matrix& rref_form);

std::size_t rank(const Matrix& m);

/// Whether M x = b has a solution. InputError on length mismatch.
bool is_consistent(const Matrix& m, std::span<const Scalar> b);

/// The unique left-kernel vector of a minimally dependent row set,
/// normalized so its first entry is 1. ContractError if the rows are not
/// a minimal linearly dependent set.
ScalarVec left_kernel_line(const Matrix& m);

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

}  // namespace arrdeform
