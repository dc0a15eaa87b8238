#pragma once

#include "berezin/errors.hpp"
#include "berezin/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace berezin {

/// Dense row-major matrix over an exact ring.
template <class T> class Matrix
{
	std::size_t rows_ = 0, cols_ = 0;
	std::vector<T> data_;

  public:
	Matrix(std::size_t rows, std::size_t cols, const T &fill = T{})
	    : rows_(rows), cols_(cols), data_(rows * cols, fill)
	{}

	static Matrix identity(std::size_t n, const T &zero, const T &one)
	{
		Matrix m(n, n, zero);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = one;
		return m;
	}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

	Matrix operator*(const Matrix &o) const
	{
		if (cols_ != o.rows_ || cols_ == 0)
			throw DimensionMismatch("matrix product shape mismatch");
		Matrix r(rows_, o.cols_, (*this)(0, 0));
		for (std::size_t i = 0; i < rows_; ++i)
			for (std::size_t j = 0; j < o.cols_; ++j)
			{
				T acc = (*this)(i, 0) * o(0, j);
				for (std::size_t k = 1; k < cols_; ++k)
					acc += (*this)(i, k) * o(k, j);
				r(i, j) = std::move(acc);
			}
		return r;
	}

	Matrix &operator+=(const Matrix &o)
	{
		check_same_shape(o);
		for (std::size_t k = 0; k < data_.size(); ++k)
			data_[k] += o.data_[k];
		return *this;
	}
	Matrix &operator-=(const Matrix &o)
	{
		check_same_shape(o);
		for (std::size_t k = 0; k < data_.size(); ++k)
			data_[k] -= o.data_[k];
		return *this;
	}
	friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
	friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
	Matrix operator-() const
	{
		Matrix r = *this;
		for (auto &x : r.data_)
			x = -x;
		return r;
	}
	friend bool operator==(const Matrix &a, const Matrix &b)
	{
		return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
	}

	T trace() const
	{
		if (rows_ != cols_ || rows_ == 0)
			throw DimensionMismatch("trace of a non-square matrix");
		T acc = (*this)(0, 0);
		for (std::size_t i = 1; i < rows_; ++i)
			acc += (*this)(i, i);
		return acc;
	}

	Matrix transpose() const
	{
		Matrix r(cols_, rows_, data_.empty() ? T{} : data_[0]);
		for (std::size_t i = 0; i < rows_; ++i)
			for (std::size_t j = 0; j < cols_; ++j)
				r(j, i) = (*this)(i, j);
		return r;
	}

	Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
	{
		if (r0 + nr > rows_ || c0 + nc > cols_ || nr == 0 || nc == 0)
			throw DimensionMismatch("block out of range");
		Matrix r(nr, nc, (*this)(r0, c0));
		for (std::size_t i = 0; i < nr; ++i)
			for (std::size_t j = 0; j < nc; ++j)
				r(i, j) = (*this)(r0 + i, c0 + j);
		return r;
	}

	void set_block(std::size_t r0, std::size_t c0, const Matrix &b)
	{
		if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
			throw DimensionMismatch("block out of range");
		for (std::size_t i = 0; i < b.rows_; ++i)
			for (std::size_t j = 0; j < b.cols_; ++j)
				(*this)(r0 + i, c0 + j) = b(i, j);
	}

  private:
	void check_same_shape(const Matrix &o) const
	{
		if (rows_ != o.rows_ || cols_ != o.cols_)
			throw DimensionMismatch("matrix shapes differ");
	}
};

template <class T> Matrix<T> minor_of(const Matrix<T> &m, std::size_t row, std::size_t col)
{
	Matrix<T> r(m.rows() - 1, m.cols() - 1, m(0, 0));
	for (std::size_t i = 0, ri = 0; i < m.rows(); ++i)
	{
		if (i == row)
			continue;
		for (std::size_t j = 0, rj = 0; j < m.cols(); ++j)
		{
			if (j == col)
				continue;
			r(ri, rj++) = m(i, j);
		}
		++ri;
	}
	return r;
}

/// Cofactor expansion; meant for the small symbolic matrices of this library.
template <class T> T det_laplace(const Matrix<T> &m)
{
	std::size_t n = m.rows();
	if (n != m.cols() || n == 0)
		throw DimensionMismatch("determinant of a non-square matrix");
	if (n == 1)
		return m(0, 0);
	T acc = m(0, 0) * det_laplace(minor_of(m, 0, 0));
	for (std::size_t j = 1; j < n; ++j)
	{
		T term = m(0, j) * det_laplace(minor_of(m, 0, j));
		if (j % 2)
			acc -= term;
		else
			acc += term;
	}
	return acc;
}

using RatMatrix = Matrix<Rat>;

RatMatrix rat_identity(std::size_t n);
RatMatrix rat_zeros(std::size_t rows, std::size_t cols);
Rat det(const RatMatrix &m);
/// Throws InvalidArgument when singular.
RatMatrix inverse(const RatMatrix &m);
RatMatrix operator*(const Rat &s, const RatMatrix &m);
std::string to_text(const RatMatrix &m);

} // namespace berezin
