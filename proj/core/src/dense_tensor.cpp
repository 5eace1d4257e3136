// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/dense_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rtnlab/error.hpp"

namespace rtnlab {

std::size_t shape_volume(std::span<const std::size_t> shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

namespace {

void check_extents(const Shape& shape) {
  for (std::size_t e : shape) {
    if (e == 0) throw InvalidArgument("tensor extents must be positive");
  }
}

}  // namespace

DenseTensor::DenseTensor(Shape shape) : shape_(std::move(shape)) {
  check_extents(shape_);
  entries_.assign(shape_volume(shape_), Complex{});
}

DenseTensor::DenseTensor(Shape shape, std::vector<Complex> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  check_extents(shape_);
  if (entries_.size() != shape_volume(shape_)) {
    throw InvalidArgument("entry count " + std::to_string(entries_.size()) +
                          " does not match shape volume " + std::to_string(shape_volume(shape_)));
  }
  if (!all_finite()) throw InvalidArgument("tensor entries must be finite");
}

DenseTensor DenseTensor::scalar(Complex value) {
  DenseTensor t;
  t.entries_[0] = value;
  return t;
}

DenseTensor DenseTensor::identity(std::size_t n) {
  DenseTensor t({n, n});
  for (std::size_t i = 0; i < n; ++i) t.entries_[i * n + i] = 1.0;
  return t;
}

std::size_t DenseTensor::flat_index(std::initializer_list<std::size_t> index) const {
  if (index.size() != shape_.size()) throw ShapeError("index rank does not match tensor rank");
  std::size_t flat = 0;
  std::size_t leg = 0;
  for (std::size_t i : index) {
    if (i >= shape_[leg]) throw ShapeError("index out of range");
    flat = flat * shape_[leg] + i;
    ++leg;
  }
  return flat;
}

Complex& DenseTensor::at(std::initializer_list<std::size_t> index) {
  return entries_[flat_index(index)];
}

const Complex& DenseTensor::at(std::initializer_list<std::size_t> index) const {
  return entries_[flat_index(index)];
}

Complex DenseTensor::scalar_value() const {
  if (entries_.size() != 1) throw ShapeError("tensor is not a scalar");
  return entries_[0];
}

DenseTensor DenseTensor::permuted(std::span<const std::size_t> perm) const {
  const std::size_t r = rank();
  if (perm.size() != r) throw ShapeError("permutation rank mismatch");
  std::vector<bool> seen(r, false);
  for (std::size_t p : perm) {
    if (p >= r || seen[p]) throw InvalidArgument("not a permutation");
    seen[p] = true;
  }
  if (std::is_sorted(perm.begin(), perm.end())) return *this;

  std::vector<std::size_t> in_strides(r, 1);
  for (std::size_t i = r; i-- > 1;) in_strides[i - 1] = in_strides[i] * shape_[i];

  Shape out_shape(r);
  std::vector<std::size_t> stride(r);
  for (std::size_t i = 0; i < r; ++i) {
    out_shape[i] = shape_[perm[i]];
    stride[i] = in_strides[perm[i]];
  }

  DenseTensor out;
  out.shape_ = out_shape;
  out.entries_.resize(entries_.size());

  // Odometer over the output; the innermost leg is walked in a tight loop.
  const std::size_t inner_extent = out_shape[r - 1];
  const std::size_t inner_stride = stride[r - 1];
  std::vector<std::size_t> counter(r, 0);
  std::size_t src = 0;
  std::size_t dst = 0;
  const std::size_t total = entries_.size();
  while (dst < total) {
    const Complex* in = entries_.data() + src;
    Complex* o = out.entries_.data() + dst;
    for (std::size_t k = 0; k < inner_extent; ++k) o[k] = in[k * inner_stride];
    dst += inner_extent;
    std::size_t leg = r - 1;
    while (leg-- > 0) {
      src += stride[leg];
      if (++counter[leg] < out_shape[leg]) break;
      src -= stride[leg] * out_shape[leg];
      counter[leg] = 0;
    }
  }
  return out;
}

DenseTensor DenseTensor::reshaped(Shape shape) const {
  check_extents(shape);
  if (shape_volume(shape) != entries_.size()) throw ShapeError("reshape changes the volume");
  DenseTensor out;
  out.shape_ = std::move(shape);
  out.entries_ = entries_;
  return out;
}

DenseTensor DenseTensor::conjugated() const {
  DenseTensor out = *this;
  for (auto& z : out.entries_) z = std::conj(z);
  return out;
}

DenseTensor& DenseTensor::operator*=(Complex factor) {
  for (auto& z : entries_) z *= factor;
  return *this;
}

double DenseTensor::max_abs_diff(const DenseTensor& other) const {
  if (shape_ != other.shape_) throw ShapeError("shape mismatch in comparison");
  double worst = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
  }
  return worst;
}

double DenseTensor::max_abs() const {
  double worst = 0.0;
  for (const auto& z : entries_) worst = std::max(worst, std::abs(z));
  return worst;
}

double DenseTensor::norm_squared() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return s;
}

bool DenseTensor::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

}  // namespace rtnlab
