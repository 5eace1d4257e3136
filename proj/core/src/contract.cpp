// SPDX-License-Identifier: Apache-2.0
#include "rtnlab/contract.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "rtnlab/error.hpp"

namespace rtnlab {
namespace {

using RowMajorMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct Term {
  DenseTensor tensor;
  std::vector<Label> labels;
};

std::size_t position(const std::vector<Label>& labels, Label l) {
  return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), l) - labels.begin());
}

bool contains(const std::vector<Label>& labels, Label l) {
  return std::find(labels.begin(), labels.end(), l) != labels.end();
}

// Sums over labels repeated within a single operand.
Term take_internal_traces(const DenseTensor& t, const std::vector<Label>& labels) {
  std::vector<Label> kept;
  std::vector<std::pair<std::size_t, std::size_t>> traced;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto first = position(labels, labels[i]);
    if (first < i) {
      traced.emplace_back(first, i);
    } else if (std::count(labels.begin(), labels.end(), labels[i]) == 1) {
      kept.push_back(labels[i]);
    }
  }
  if (traced.empty()) return {t, labels};

  // Move kept legs to the front and the traced pairs to the back, then sum the diagonal.
  std::vector<std::size_t> perm;
  Shape kept_shape;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (std::count(labels.begin(), labels.end(), labels[i]) == 1) {
      perm.push_back(i);
      kept_shape.push_back(t.extent(i));
    }
  }
  std::size_t diag_volume = 1;
  for (auto [a, b] : traced) {
    perm.push_back(a);
    perm.push_back(b);
    diag_volume *= t.extent(a);
  }
  const DenseTensor moved = t.permuted(perm);
  const std::size_t tail = moved.size() / shape_volume(kept_shape);

  // Offset of diagonal element k inside the traced block; pairs are mixed-radix digits.
  std::vector<std::size_t> pair_extents;
  for (auto [a, b] : traced) pair_extents.push_back(t.extent(a));
  std::vector<std::size_t> diag_offsets(diag_volume, 0);
  for (std::size_t k = 0; k < diag_volume; ++k) {
    std::size_t rem = k;
    std::size_t offset = 0;
    std::size_t stride = 1;
    for (std::size_t p = pair_extents.size(); p-- > 0;) {
      const std::size_t e = pair_extents[p];
      const std::size_t i = rem % e;
      rem /= e;
      offset += (i * e + i) * stride;
      stride *= e * e;
    }
    diag_offsets[k] = offset;
  }

  DenseTensor out(kept_shape);
  for (std::size_t r = 0; r < out.size(); ++r) {
    Complex s{};
    for (std::size_t off : diag_offsets) s += moved[r * tail + off];
    out[r] = s;
  }
  return {std::move(out), kept};
}

Term contract_pair(const Term& a, const Term& b) {
  std::vector<Label> shared;
  for (Label l : a.labels) {
    if (contains(b.labels, l)) shared.push_back(l);
  }
  std::vector<std::size_t> perm_a;
  std::vector<std::size_t> perm_b;
  std::vector<Label> out_labels;
  Shape out_shape;
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::size_t inner = 1;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    if (!contains(shared, a.labels[i])) {
      perm_a.push_back(i);
      out_labels.push_back(a.labels[i]);
      out_shape.push_back(a.tensor.extent(i));
      rows *= a.tensor.extent(i);
    }
  }
  for (Label l : shared) {
    const std::size_t ia = position(a.labels, l);
    const std::size_t ib = position(b.labels, l);
    if (a.tensor.extent(ia) != b.tensor.extent(ib)) {
      throw ShapeError("label " + std::to_string(l) + " has extents " +
                       std::to_string(a.tensor.extent(ia)) + " and " +
                       std::to_string(b.tensor.extent(ib)));
    }
    perm_a.push_back(ia);
    perm_b.push_back(ib);
    inner *= a.tensor.extent(ia);
  }
  for (std::size_t i = 0; i < b.labels.size(); ++i) {
    if (!contains(shared, b.labels[i])) {
      perm_b.push_back(i);
      out_labels.push_back(b.labels[i]);
      out_shape.push_back(b.tensor.extent(i));
      cols *= b.tensor.extent(i);
    }
  }

  const DenseTensor ma = a.tensor.permuted(perm_a);
  const DenseTensor mb = b.tensor.permuted(perm_b);
  DenseTensor result(out_shape);
  Eigen::Map<const RowMajorMatrix> lhs(ma.data().data(), static_cast<Eigen::Index>(rows),
                                       static_cast<Eigen::Index>(inner));
  Eigen::Map<const RowMajorMatrix> rhs(mb.data().data(), static_cast<Eigen::Index>(inner),
                                       static_cast<Eigen::Index>(cols));
  Eigen::Map<RowMajorMatrix> dst(result.data().data(), static_cast<Eigen::Index>(rows),
                                 static_cast<Eigen::Index>(cols));
  dst.noalias() = lhs * rhs;
  return {std::move(result), std::move(out_labels)};
}

// Size of the tensor produced by contracting a with b.
double pair_result_volume(const Term& a, const Term& b) {
  double volume = 1.0;
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    if (!contains(b.labels, a.labels[i])) volume *= static_cast<double>(a.tensor.extent(i));
  }
  for (std::size_t i = 0; i < b.labels.size(); ++i) {
    if (!contains(a.labels, b.labels[i])) volume *= static_cast<double>(b.tensor.extent(i));
  }
  return volume;
}

void validate_labels(std::span<const Operand> operands, std::span<const Label> output) {
  std::map<Label, int> counts;
  std::map<Label, std::size_t> extents;
  for (const auto& op : operands) {
    if (op.tensor == nullptr) throw InvalidArgument("null operand");
    if (op.labels.size() != op.tensor->rank()) {
      throw InvalidArgument("operand has " + std::to_string(op.labels.size()) + " labels for rank " +
                            std::to_string(op.tensor->rank()));
    }
    for (std::size_t i = 0; i < op.labels.size(); ++i) {
      const Label l = op.labels[i];
      ++counts[l];
      const auto [it, inserted] = extents.emplace(l, op.tensor->extent(i));
      if (!inserted && it->second != op.tensor->extent(i)) {
        throw ShapeError("label " + std::to_string(l) + " has mismatched extents");
      }
    }
  }
  std::map<Label, int> out_counts;
  for (Label l : output) {
    if (++out_counts[l] > 1) throw InvalidArgument("duplicate output label " + std::to_string(l));
    const auto it = counts.find(l);
    if (it == counts.end()) {
      throw InvalidArgument("output label " + std::to_string(l) + " is absent from the inputs");
    }
    if (it->second != 1) {
      throw InvalidArgument("output label " + std::to_string(l) + " is also summed over");
    }
  }
  for (auto [l, c] : counts) {
    if (c > 2) throw InvalidArgument("label " + std::to_string(l) + " appears more than twice");
    if (c == 1 && out_counts.count(l) == 0) {
      throw InvalidArgument("label " + std::to_string(l) + " appears once but is not an output");
    }
  }
}

}  // namespace

DenseTensor contract(std::span<const Operand> operands, std::span<const Label> output,
                     ContractionOrder order) {
  if (operands.empty()) throw InvalidArgument("contract needs at least one operand");
  validate_labels(operands, output);

  std::vector<Term> terms;
  terms.reserve(operands.size());
  for (const auto& op : operands) terms.push_back(take_internal_traces(*op.tensor, op.labels));

  while (terms.size() > 1) {
    std::size_t i = 0;
    std::size_t j = 1;
    if (order == ContractionOrder::greedy) {
      // Smallest result first; among equals prefer pairs that share a label.
      double best = std::numeric_limits<double>::infinity();
      bool best_shares = false;
      for (std::size_t a = 0; a < terms.size(); ++a) {
        for (std::size_t b = a + 1; b < terms.size(); ++b) {
          const bool shares = std::any_of(terms[a].labels.begin(), terms[a].labels.end(),
                                          [&](Label l) { return contains(terms[b].labels, l); });
          const double v = pair_result_volume(terms[a], terms[b]);
          if ((shares && !best_shares) || (shares == best_shares && v < best)) {
            best = v;
            best_shares = shares;
            i = a;
            j = b;
          }
        }
      }
    }
    Term merged = contract_pair(terms[i], terms[j]);
    terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(j));
    terms[i] = std::move(merged);
  }

  Term& last = terms.front();
  std::vector<std::size_t> perm;
  perm.reserve(output.size());
  for (Label l : output) perm.push_back(position(last.labels, l));
  return last.tensor.permuted(perm);
}

DenseTensor contract(std::initializer_list<Operand> operands, std::initializer_list<Label> output,
                     ContractionOrder order) {
  return contract(std::span<const Operand>(operands.begin(), operands.size()),
                  std::span<const Label>(output.begin(), output.size()), order);
}

DenseTensor contract(const std::vector<DenseTensor>& tensors,
                     const std::vector<std::vector<Label>>& labels, const std::vector<Label>& output,
                     ContractionOrder order) {
  if (tensors.size() != labels.size()) throw InvalidArgument("one label list per tensor required");
  std::vector<Operand> operands;
  operands.reserve(tensors.size());
  for (std::size_t i = 0; i < tensors.size(); ++i) operands.push_back({&tensors[i], labels[i]});
  return contract(std::span<const Operand>(operands), std::span<const Label>(output), order);
}

}  // namespace rtnlab
