#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "antibch/field.hpp"

namespace antibch {

// Dense row-major matrix over a GaloisField.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix from_rows(const std::vector<std::vector<Elem>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::vector<Elem> row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }

    void append_row(std::span<const Elem> r);
    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

// Rows of b appended below rows of a; column counts must agree.
Matrix stack(const Matrix& a, const Matrix& b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const GaloisField& f, Matrix& m);
std::size_t rank(const GaloisField& f, Matrix m);

// Basis of {x : m x = 0}, one solution per row.
Matrix nullspace(const GaloisField& f, const Matrix& m);

// Fraction-free (Bareiss) elimination with first-nonzero pivoting.
Elem determinant(const GaloisField& f, Matrix m);

bool same_row_space(const GaloisField& f, const Matrix& a, const Matrix& b);

// Whether v lies in the row space of m.
bool in_row_space(const GaloisField& f, const Matrix& m, std::span<const Elem> v);

}  // namespace antibch
