#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dqpair/matrix.hpp"

namespace dqpair {

/// Tensor p with A_i * A_j = sum_k p(i,j,k) * A_k, plus the transpose pairing.
struct StructureConstants {
  Index rank = 0;
  std::vector<long> p;               // (i*rank + j)*rank + k
  std::vector<Index> transpose_map;  // tA_i = A_{transpose_map[i]}

  long at(Index i, Index j, Index k) const { return p[(i * rank + j) * rank + k]; }
  bool commutative() const;
};

struct Valencies {
  std::vector<long> n;  // constant row sum of each relation
};

/// Provenance sidecar binding a scheme to its construction parameters.
struct SchemeMeta {
  enum class Variant { rank3, D, Q, other };
  Variant variant = Variant::other;
  std::map<std::string, long> params;  // keys "n", "a", "b" when applicable
  std::vector<std::string> labels;     // canonical relation names, labels[0] = identity

  bool operator==(const SchemeMeta&) const = default;
};

const char* to_string(SchemeMeta::Variant v);
std::optional<SchemeMeta::Variant> variant_from_string(const std::string& s);

/// An association scheme stored as a single color matrix: cell (i,j) holds the
/// index of the relation containing it. Construction fully validates the
/// axioms and certifies the structure constants, so instances are always valid
/// and immutable.
class AssociationScheme {
 public:
  /// Validates all axioms on a color matrix; throws AxiomError.
  static AssociationScheme from_colors(ColorMatrix colors);

  Index order() const { return colors_.rows(); }
  Index rank() const { return rank_; }
  const ColorMatrix& colors() const { return colors_; }
  const StructureConstants& structure() const { return sc_; }
  const Valencies& valencies() const { return val_; }

  /// Derived 0/1 view of one relation.
  IntMatrix relation_matrix(Index i) const;
  std::vector<IntMatrix> relation_matrices() const;

  bool operator==(const AssociationScheme& o) const { return colors_ == o.colors_; }

 private:
  AssociationScheme(ColorMatrix colors, Index rank, StructureConstants sc, Valencies val)
      : colors_(std::move(colors)), rank_(rank), sc_(std::move(sc)), val_(std::move(val)) {}

  ColorMatrix colors_;
  Index rank_ = 0;
  StructureConstants sc_;
  Valencies val_;
};

/// Checks the axioms on a list of 0/1 matrices: A_0 = I, sum = J, and closure
/// of transposes and products. Throws AxiomError with a diagnostic naming the
/// failing condition, relation pair, and cell.
AssociationScheme validate_scheme(const std::vector<IntMatrix>& matrices);

const StructureConstants& structure_constants(const AssociationScheme& s);
const Valencies& valencies(const AssociationScheme& s);

/// Number of self-paired relations (tA_i = A_i).
Index symmetric_relation_count(const AssociationScheme& s);

struct ThinGroupProfile {
  bool is_thin = false;
  std::vector<int> element_orders;  // sorted; empty when not thin
};

/// A scheme with all valencies 1 is the multiplication table of a group; the
/// profile reports the multiset of element orders in that group.
ThinGroupProfile thin_group_profile(const AssociationScheme& s);

/// Orders only; throws ParameterError when the scheme is not thin.
std::vector<int> thin_element_orders(const AssociationScheme& s);

}  // namespace dqpair
