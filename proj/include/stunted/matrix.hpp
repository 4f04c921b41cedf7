#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "stunted/fields.hpp"
#include "stunted/kernels.hpp"

namespace stunted {

template <class F>
concept FieldLike = requires(const F f, std::uint32_t a, std::uint32_t b) {
    { f.add(a, b) } -> std::convertible_to<std::uint32_t>;
    { f.sub(a, b) } -> std::convertible_to<std::uint32_t>;
    { f.mul(a, b) } -> std::convertible_to<std::uint32_t>;
    { f.neg(a) } -> std::convertible_to<std::uint32_t>;
    { f.inv(a) } -> std::convertible_to<std::uint32_t>;
    { f.zero() } -> std::convertible_to<std::uint32_t>;
    { f.one() } -> std::convertible_to<std::uint32_t>;
};

// Dense matrix over F_p or F_{p^m}; entries are canonical field encodings.
template <FieldLike F>
class Mat {
public:
    Mat(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(F field, std::size_t n) {
        Mat m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = m.field_.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    std::uint32_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    std::uint32_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const std::uint32_t* data() const { return a_.data(); }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (auto v : a_)
            if (v != 0)
                return false;
        return true;
    }

    Mat transpose() const {
        Mat t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("Mat: dimension mismatch in product");
        Mat c(field_, rows_, o.cols_);
        if constexpr (std::same_as<F, PrimeField>) {
            kernels::mul_mod_p(a_.data(), o.a_.data(), c.a_.data(), rows_, cols_,
                               o.cols_, field_.p);
        } else {
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t l = 0; l < cols_; ++l) {
                    std::uint32_t av = (*this)(i, l);
                    if (av == 0)
                        continue;
                    for (std::size_t j = 0; j < o.cols_; ++j)
                        c(i, j) = field_.add(c(i, j), field_.mul(av, o(l, j)));
                }
        }
        return c;
    }

    // Column-vector action: w = M v.
    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const {
        if (v.size() != cols_)
            throw std::invalid_argument("Mat: dimension mismatch in apply");
        std::vector<std::uint32_t> w(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0)
                    w[i] = field_.add(w[i], field_.mul((*this)(i, j), v[j]));
        return w;
    }

    std::size_t rank() const {
        if constexpr (std::same_as<F, PrimeField>) {
            std::vector<std::uint32_t> work = a_;
            return kernels::rank_mod_p(work.data(), rows_, cols_, field_.p);
        } else {
            return rank_generic();
        }
    }

    Mat pow(std::uint32_t e) const {
        if (rows_ != cols_)
            throw std::invalid_argument("Mat: pow of non-square matrix");
        Mat r = identity(field_, rows_);
        Mat b = *this;
        while (e) {
            if (e & 1)
                r = r * b;
            if (e >>= 1)
                b = b * b;
        }
        return r;
    }

private:
    std::size_t rank_generic() const {
        std::vector<std::uint32_t> w = a_;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && w[piv * cols_ + col] == 0)
                ++piv;
            if (piv == rows_)
                continue;
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(w[piv * cols_ + j], w[r * cols_ + j]);
            std::uint32_t inv = field_.inv(w[r * cols_ + col]);
            for (std::size_t j = col; j < cols_; ++j)
                w[r * cols_ + j] = field_.mul(w[r * cols_ + j], inv);
            for (std::size_t i = r + 1; i < rows_; ++i) {
                std::uint32_t f = w[i * cols_ + col];
                if (f == 0)
                    continue;
                for (std::size_t j = col; j < cols_; ++j)
                    w[i * cols_ + j] =
                        field_.sub(w[i * cols_ + j], field_.mul(f, w[r * cols_ + j]));
            }
            ++r;
        }
        return r;
    }

    F field_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

using FpMatrix = Mat<PrimeField>;

template <FieldLike F>
std::size_t rank(const Mat<F>& m) {
    return m.rank();
}

// [rank(M^0), rank(M^1), ..., rank(M^e)]; rank(M^0) is the dimension.
template <FieldLike F>
std::vector<std::size_t> power_rank_profile(const Mat<F>& m, std::uint32_t e) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("power_rank_profile: matrix must be square");
    std::vector<std::size_t> profile;
    profile.reserve(e + 1);
    profile.push_back(m.rows());
    Mat<F> cur = m;
    for (std::uint32_t j = 1; j <= e; ++j) {
        profile.push_back(cur.rank());
        if (j < e)
            cur = cur * m;
    }
    return profile;
}

}  // namespace stunted
