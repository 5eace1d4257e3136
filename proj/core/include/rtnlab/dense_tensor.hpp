// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rtnlab {

using Complex = std::complex<double>;
using Shape = std::vector<std::size_t>;

/// Dense complex tensor, row-major (last leg fastest). A rank-0 tensor is a scalar.
class DenseTensor {
 public:
  DenseTensor() : entries_(1, Complex{}) {}
  explicit DenseTensor(Shape shape);
  /// Throws InvalidArgument when the entry count does not match the shape or an entry is not finite.
  DenseTensor(Shape shape, std::vector<Complex> entries);

  static DenseTensor scalar(Complex value);
  static DenseTensor identity(std::size_t n);

  std::size_t rank() const { return shape_.size(); }
  const Shape& shape() const { return shape_; }
  std::size_t extent(std::size_t leg) const { return shape_.at(leg); }
  std::size_t size() const { return entries_.size(); }

  std::span<Complex> data() { return entries_; }
  std::span<const Complex> data() const { return entries_; }
  Complex& operator[](std::size_t flat) { return entries_[flat]; }
  const Complex& operator[](std::size_t flat) const { return entries_[flat]; }

  Complex& at(std::initializer_list<std::size_t> index);
  const Complex& at(std::initializer_list<std::size_t> index) const;

  /// Value of a tensor with exactly one entry.
  Complex scalar_value() const;

  /// Leg i of the result is leg perm[i] of this tensor.
  DenseTensor permuted(std::span<const std::size_t> perm) const;
  DenseTensor reshaped(Shape shape) const;
  DenseTensor conjugated() const;

  DenseTensor& operator*=(Complex factor);
  friend DenseTensor operator*(Complex factor, DenseTensor t) { return t *= factor; }

  double max_abs_diff(const DenseTensor& other) const;
  double max_abs() const;
  double norm_squared() const;
  bool all_finite() const;

 private:
  std::size_t flat_index(std::initializer_list<std::size_t> index) const;

  Shape shape_;
  std::vector<Complex> entries_;
};

std::size_t shape_volume(std::span<const std::size_t> shape);

}  // namespace rtnlab
