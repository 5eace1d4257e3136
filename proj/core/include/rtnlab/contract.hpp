// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "rtnlab/dense_tensor.hpp"

namespace rtnlab {

using Label = int;

/// A tensor together with one label per leg. The tensor is borrowed.
struct Operand {
  const DenseTensor* tensor;
  std::vector<Label> labels;
};

enum class ContractionOrder {
  greedy,         ///< repeatedly contract the pair whose result is smallest
  left_to_right,  ///< ((t0 t1) t2) ... ; used for bit-stable reference outputs
};

/// Sums over every label that appears twice (within one operand or across two) and
/// returns the remaining legs in the order of `output`.
///
/// Labels appearing once must be listed in `output`; a label may not appear three times.
/// Throws ShapeError when two legs sharing a label have different extents and
/// InvalidArgument for malformed label sets.
DenseTensor contract(std::span<const Operand> operands, std::span<const Label> output,
                     ContractionOrder order = ContractionOrder::greedy);

DenseTensor contract(std::initializer_list<Operand> operands, std::initializer_list<Label> output,
                     ContractionOrder order = ContractionOrder::greedy);

DenseTensor contract(const std::vector<DenseTensor>& tensors,
                     const std::vector<std::vector<Label>>& labels, const std::vector<Label>& output,
                     ContractionOrder order = ContractionOrder::greedy);

}  // namespace rtnlab
