#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "pcbf/rational.hpp"

namespace pcbf {

using RatVec = std::vector<Rat>;

/// Dense rational matrix, row-major. Sized for the exact pipelines
/// (counterexample systems, separation gadgets), not for bulk numerics.
class RatMat {
public:
    RatMat() = default;
    RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    static RatMat identity(std::size_t n) {
        RatMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMat transpose() const {
        RatMat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    RatMat operator*(const RatMat& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("RatMat: dimension mismatch");
        RatMat out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    const Rat& b = rhs(k, j);
                    if (b != 0) out(i, j) += a * b;
                }
            }
        return out;
    }

    RatVec operator*(const RatVec& v) const {
        if (cols_ != v.size()) throw std::invalid_argument("RatMat: dimension mismatch");
        RatVec out(rows_, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    RatMat operator*(const Rat& s) const {
        RatMat out = *this;
        for (auto& e : out.data_) e *= s;
        return out;
    }

    bool operator==(const RatMat& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

    bool is_zero() const {
        for (const auto& e : data_)
            if (e != 0) return false;
        return true;
    }

    Eigen::MatrixXd to_double() const {
        Eigen::MatrixXd m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = rat_to_double((*this)(i, j));
        return m;
    }

    static RatMat from_double(const Eigen::MatrixXd& m) {
        RatMat out(m.rows(), m.cols());
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = rat_from_double(m(i, j));
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

inline Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat squared_norm(const RatVec& v) { return dot(v, v); }

inline Eigen::VectorXd to_double(const RatVec& v) {
    Eigen::VectorXd out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = rat_to_double(v[i]);
    return out;
}

inline RatVec rat_vec_from_double(const Eigen::VectorXd& v) {
    RatVec out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = rat_from_double(v[i]);
    return out;
}

}  // namespace pcbf
