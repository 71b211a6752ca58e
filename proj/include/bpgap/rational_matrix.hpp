#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bpgap/error.hpp"

namespace bpgap {

using Rational = boost::multiprecision::cpp_rational;

// Dense matrix over exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix identity(std::size_t k) {
        RationalMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i) m(i, i) = 1;
        return m;
    }
    static RationalMatrix ones(std::size_t k) {
        RationalMatrix m(k, k);
        for (auto& x : m.data_) x = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    RationalMatrix& operator+=(const RationalMatrix& o) {
        check_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    RationalMatrix& operator-=(const RationalMatrix& o) {
        check_shape(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    RationalMatrix& operator*=(const Rational& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
    friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }

    bool is_antisymmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r; c < cols_; ++c)
                if ((*this)(r, c) != -(*this)(c, r)) return false;
        return true;
    }

    Rational max_abs_entry() const {
        Rational m = 0;
        for (const auto& x : data_) m = boost::multiprecision::max(m, boost::multiprecision::abs(x));
        return m;
    }

    // Gaussian elimination over the rationals.
    std::size_t rank() const {
        RationalMatrix a = *this;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            std::size_t pivot = rank;
            while (pivot < rows_ && a(pivot, c) == 0) ++pivot;
            if (pivot == rows_) continue;
            a.swap_rows(pivot, rank);
            for (std::size_t r = rank + 1; r < rows_; ++r) {
                if (a(r, c) == 0) continue;
                const Rational f = a(r, c) / a(rank, c);
                for (std::size_t k = c; k < cols_; ++k) a(r, k) -= f * a(rank, k);
            }
            ++rank;
        }
        return rank;
    }

    Rational determinant() const {
        if (rows_ != cols_) throw InvalidInput("determinant: matrix is not square");
        RationalMatrix a = *this;
        Rational det = 1;
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t pivot = c;
            while (pivot < rows_ && a(pivot, c) == 0) ++pivot;
            if (pivot == rows_) return 0;
            if (pivot != c) {
                a.swap_rows(pivot, c);
                det = -det;
            }
            det *= a(c, c);
            for (std::size_t r = c + 1; r < rows_; ++r) {
                if (a(r, c) == 0) continue;
                const Rational f = a(r, c) / a(c, c);
                for (std::size_t k = c; k < cols_; ++k) a(r, k) -= f * a(c, k);
            }
        }
        return det;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    void check_shape(const RationalMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("RationalMatrix: shape mismatch");
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

inline std::string to_string(const Rational& q) { return q.str(); }

} // namespace bpgap
