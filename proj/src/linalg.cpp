#include "antibch/linalg.hpp"

#include <stdexcept>

namespace antibch {

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

void Matrix::append_row(std::span<const Elem> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Matrix stack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("stack: column mismatch");
    Matrix out = a;
    for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
    return out;
}

std::vector<std::size_t> rref(const GaloisField& f, Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t piv = lead_row;
        while (piv < m.rows() && m(piv, c).v == 0) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(lead_row, piv);
        const Elem s = f.inv(m(lead_row, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) = f.mul(m(lead_row, j), s);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || m(r, c).v == 0) continue;
            const Elem factor = f.neg(m(r, c));
            for (std::size_t j = c; j < m.cols(); ++j)
                m(r, j) = f.add(m(r, j), f.mul(factor, m(lead_row, j)));
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return pivots;
}

std::size_t rank(const GaloisField& f, Matrix m) { return rref(f, m).size(); }

Matrix nullspace(const GaloisField& f, const Matrix& m) {
    Matrix r = m;
    const auto pivots = rref(f, r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Elem> v(m.cols(), f.zero());
        v[free_col] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free_col));
        basis.append_row(v);
    }
    if (basis.rows() == 0) basis = Matrix(0, m.cols());
    return basis;
}

Elem determinant(const GaloisField& f, Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return f.one();
    bool negate = false;
    Elem prev = f.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).v == 0) ++piv;
        if (piv == n) return f.zero();
        if (piv != k) {
            m.swap_rows(k, piv);
            negate = !negate;
        }
        const Elem prev_inv = f.inv(prev);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const Elem t = f.sub(f.mul(m(i, j), m(k, k)), f.mul(m(i, k), m(k, j)));
                m(i, j) = f.mul(t, prev_inv);
            }
            m(i, k) = f.zero();
        }
        prev = m(k, k);
    }
    const Elem d = m(n - 1, n - 1);
    return negate ? f.neg(d) : d;
}

bool same_row_space(const GaloisField& f, const Matrix& a, const Matrix& b) {
    const std::size_t ra = rank(f, a), rb = rank(f, b);
    if (ra != rb) return false;
    return rank(f, stack(a, b)) == ra;
}

bool in_row_space(const GaloisField& f, const Matrix& m, std::span<const Elem> v) {
    Matrix extra(0, v.size());
    extra.append_row(v);
    return rank(f, stack(m, extra)) == rank(f, m);
}

}  // namespace antibch
