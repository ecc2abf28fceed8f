// autodiff/tensor.h

// Copyright 2026 The aedadapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AEDADAPT_AUTODIFF_TENSOR_H_
#define AEDADAPT_AUTODIFF_TENSOR_H_

#include <cstdint>
#include <vector>

#include "common/error.h"

namespace aedadapt {

// Dense n-dimensional array of 64-bit reals, row-major. The whole toolkit
// computes in fp64 so that finite-difference checks are meaningful.
class Tensor {
 public:
  Tensor() = default;

  explicit Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
    values_.assign(static_cast<size_t>(checked_size(shape_)), 0.0);
  }

  Tensor(std::vector<int> shape, std::vector<double> values)
      : shape_(std::move(shape)), values_(std::move(values)) {
    AED_CHECK(checked_size(shape_) == static_cast<int64_t>(values_.size()),
              "Tensor: shape " << shape_str(shape_) << " does not match "
                               << values_.size() << " values");
  }

  static Tensor scalar(double v) { return Tensor({1}, {v}); }
  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<int> shape, double v) {
    Tensor t(std::move(shape));
    t.fill(v);
    return t;
  }

  const std::vector<int>& shape() const { return shape_; }
  int dim() const { return static_cast<int>(shape_.size()); }
  int extent(int axis) const { return shape_[static_cast<size_t>(axis)]; }
  int64_t size() const { return static_cast<int64_t>(values_.size()); }
  bool defined() const { return !shape_.empty(); }

  // 2-D accessors.
  int rows() const {
    AED_CHECK(dim() == 2, "rows(): tensor is " << shape_str(shape_));
    return shape_[0];
  }
  int cols() const {
    AED_CHECK(dim() == 2, "cols(): tensor is " << shape_str(shape_));
    return shape_[1];
  }

  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }

  double& operator[](int64_t i) { return values_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return values_[static_cast<size_t>(i)]; }

  double& at2(int r, int c) {
    return values_[static_cast<size_t>(r) * shape_[1] + c];
  }
  double at2(int r, int c) const {
    return values_[static_cast<size_t>(r) * shape_[1] + c];
  }

  double item() const {
    AED_CHECK(size() == 1, "item(): tensor is " << shape_str(shape_));
    return values_[0];
  }

  bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

  bool all_finite() const;

  void fill(double v) { values_.assign(values_.size(), v); }

  // this += o
  void add_(const Tensor& o) {
    AED_CHECK(same_shape(o), "add_: shape mismatch " << shape_str(shape_)
                                                     << " vs "
                                                     << shape_str(o.shape_));
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  }

  // this += a * o
  void axpy_(double a, const Tensor& o) {
    AED_CHECK(same_shape(o), "axpy_: shape mismatch " << shape_str(shape_)
                                                      << " vs "
                                                      << shape_str(o.shape_));
    for (size_t i = 0; i < values_.size(); ++i) values_[i] += a * o.values_[i];
  }

  static int64_t checked_size(const std::vector<int>& shape) {
    AED_CHECK(!shape.empty(), "Tensor: empty shape");
    int64_t n = 1;
    for (int e : shape) {
      AED_CHECK(e > 0, "Tensor: non-positive extent in " << shape_str(shape));
      n *= e;
    }
    return n;
  }

 private:
  std::vector<int> shape_;
  std::vector<double> values_;
};

}  // namespace aedadapt

#endif  // AEDADAPT_AUTODIFF_TENSOR_H_
