#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotfam {

/// Dense matrix of arbitrary-precision integers. All arithmetic is exact;
/// 0x0 matrices are rejected.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t nrows, std::size_t ncols)
        : nrows_(nrows), ncols_(ncols), entries_(nrows * ncols, mpz_class(0)) {
        if (nrows == 0 || ncols == 0)
            throw std::invalid_argument("IntegerMatrix: empty matrix");
    }

    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        nrows_ = rows.size();
        if (nrows_ == 0) throw std::invalid_argument("IntegerMatrix: empty matrix");
        ncols_ = rows.begin()->size();
        if (ncols_ == 0) throw std::invalid_argument("IntegerMatrix: empty matrix");
        entries_.reserve(nrows_ * ncols_);
        for (const auto& row : rows) {
            if (row.size() != ncols_)
                throw std::invalid_argument("IntegerMatrix: ragged rows");
            for (long v : row) entries_.emplace_back(v);
        }
    }

    static IntegerMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("IntegerMatrix: empty matrix");
        IntegerMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.ncols_)
                throw std::invalid_argument("IntegerMatrix: ragged rows");
            for (std::size_t j = 0; j < m.ncols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    bool is_square() const { return nrows_ == ncols_; }

    mpz_class& operator()(std::size_t i, std::size_t j) { return entries_[i * ncols_ + j]; }
    const mpz_class& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * ncols_ + j];
    }

    IntegerMatrix transpose() const {
        IntegerMatrix t(ncols_, nrows_);
        for (std::size_t i = 0; i < nrows_; ++i)
            for (std::size_t j = 0; j < ncols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < nrows_; ++i)
            for (std::size_t j = i + 1; j < ncols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.ncols_ != b.nrows_)
            throw std::invalid_argument("IntegerMatrix: dimension mismatch in product");
        IntegerMatrix c(a.nrows_, b.ncols_);
        mpz_class acc;
        for (std::size_t i = 0; i < a.nrows_; ++i)
            for (std::size_t j = 0; j < b.ncols_; ++j) {
                acc = 0;
                for (std::size_t k = 0; k < a.ncols_; ++k)
                    acc += a(i, k) * b(k, j);
                c(i, j) = acc;
            }
        return c;
    }

    friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.nrows_ != b.nrows_ || a.ncols_ != b.ncols_)
            throw std::invalid_argument("IntegerMatrix: dimension mismatch in sum");
        IntegerMatrix c(a.nrows_, a.ncols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            c.entries_[k] = a.entries_[k] + b.entries_[k];
        return c;
    }

    friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
        if (a.nrows_ != b.nrows_ || a.ncols_ != b.ncols_)
            throw std::invalid_argument("IntegerMatrix: dimension mismatch in difference");
        IntegerMatrix c(a.nrows_, a.ncols_);
        for (std::size_t k = 0; k < a.entries_.size(); ++k)
            c.entries_[k] = a.entries_[k] - b.entries_[k];
        return c;
    }

    IntegerMatrix operator-() const {
        IntegerMatrix c(nrows_, ncols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) c.entries_[k] = -entries_[k];
        return c;
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
        return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.entries_ == b.entries_;
    }

    std::string to_string() const;

private:
    std::size_t nrows_ = 0, ncols_ = 0;
    std::vector<mpz_class> entries_;
};

/// N * N^T; the result is exactly symmetric.
IntegerMatrix gram(const IntegerMatrix& n);

/// Exact determinant by fraction-free (Bareiss) elimination.
mpz_class det_bareiss(const IntegerMatrix& a);

}  // namespace knotfam
