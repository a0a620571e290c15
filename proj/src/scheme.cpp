#include "dqpair/scheme.hpp"

#include <algorithm>
#include <sstream>

namespace dqpair {

bool StructureConstants::commutative() const {
  for (Index i = 0; i < rank; ++i)
    for (Index j = 0; j < rank; ++j)
      for (Index k = 0; k < rank; ++k)
        if (at(i, j, k) != at(j, i, k)) return false;
  return true;
}

const char* to_string(SchemeMeta::Variant v) {
  switch (v) {
    case SchemeMeta::Variant::rank3: return "rank3";
    case SchemeMeta::Variant::D: return "D";
    case SchemeMeta::Variant::Q: return "Q";
    case SchemeMeta::Variant::other: return "other";
  }
  return "other";
}

std::optional<SchemeMeta::Variant> variant_from_string(const std::string& s) {
  if (s == "rank3") return SchemeMeta::Variant::rank3;
  if (s == "D") return SchemeMeta::Variant::D;
  if (s == "Q") return SchemeMeta::Variant::Q;
  if (s == "other") return SchemeMeta::Variant::other;
  return std::nullopt;
}

namespace {

std::string cell(Index u, Index v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

AssociationScheme AssociationScheme::from_colors(ColorMatrix colors) {
  const Index n = colors.rows();
  if (n == 0 || colors.cols() != n)
    throw AxiomError("color matrix must be square and non-empty");

  int max_color = 0;
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v) {
      if (colors(u, v) < 0)
        throw AxiomError("negative relation index at cell " + cell(u, v));
      max_color = std::max(max_color, colors(u, v));
    }
  const Index rank = max_color + 1;

  std::vector<long> occurrences(rank, 0);
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v) ++occurrences[colors(u, v)];
  for (Index c = 0; c < rank; ++c)
    if (occurrences[c] == 0)
      throw AxiomError("relation " + std::to_string(c) + " never occurs");

  // Condition (1): relation 0 is exactly the identity.
  for (Index u = 0; u < n; ++u) {
    if (colors(u, u) != 0)
      throw AxiomError("condition (1) fails: diagonal cell " + cell(u, u) + " has relation " +
                       std::to_string(colors(u, u)) + ", expected 0");
    for (Index v = 0; v < n; ++v)
      if (u != v && colors(u, v) == 0)
        throw AxiomError("condition (1) fails: identity relation appears off the diagonal at " +
                         cell(u, v));
  }

  // Closure under transposition: cell-wise images of one relation must all
  // land in a single relation.
  std::vector<Index> tmap(rank, -1);
  std::vector<std::pair<Index, Index>> twitness(rank);
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v) {
      const int c = colors(u, v);
      const int ct = colors(v, u);
      if (tmap[c] < 0) {
        tmap[c] = ct;
        twitness[c] = {u, v};
      } else if (tmap[c] != ct) {
        throw AxiomError("condition (3) fails: transpose of relation " + std::to_string(c) +
                         " meets relation " + std::to_string(tmap[c]) + " at cell " +
                         cell(twitness[c].first, twitness[c].second) + " but relation " +
                         std::to_string(ct) + " at cell " + cell(u, v));
      }
    }
  for (Index c = 0; c < rank; ++c)
    if (tmap[tmap[c]] != c)
      throw InternalError("transpose pairing is not an involution");

  // Condition (3), product part. For every cell (u,v) and every relation pair
  // (i,j), the count #{w : (u,w) in A_i, (w,v) in A_j} may depend only on the
  // relation of (u,v). Counting over all cells certifies the constants.
  std::vector<std::vector<long>> ref(rank);
  std::vector<std::pair<Index, Index>> rep(rank);
  std::vector<long> cnt(rank * rank);
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v) {
      std::fill(cnt.begin(), cnt.end(), 0L);
      for (Index w = 0; w < n; ++w) ++cnt[colors(u, w) * rank + colors(w, v)];
      const int c = colors(u, v);
      if (ref[c].empty()) {
        ref[c] = cnt;
        rep[c] = {u, v};
      } else if (ref[c] != cnt) {
        for (Index i = 0; i < rank; ++i)
          for (Index j = 0; j < rank; ++j)
            if (ref[c][i * rank + j] != cnt[i * rank + j])
              throw AxiomError(
                  "condition (3) fails: product of relations " + std::to_string(i) + " and " +
                  std::to_string(j) + " has coefficient " + std::to_string(ref[c][i * rank + j]) +
                  " on relation " + std::to_string(c) + " at cell " +
                  cell(rep[c].first, rep[c].second) + " but " + std::to_string(cnt[i * rank + j]) +
                  " at cell " + cell(u, v));
      }
    }

  StructureConstants sc;
  sc.rank = rank;
  sc.p.assign(rank * rank * rank, 0);
  for (Index i = 0; i < rank; ++i)
    for (Index j = 0; j < rank; ++j)
      for (Index k = 0; k < rank; ++k) sc.p[(i * rank + j) * rank + k] = ref[k][i * rank + j];
  sc.transpose_map = tmap;

  // Valencies: constant row sums, certified row against row.
  std::vector<long> first(rank, 0), row(rank, 0);
  for (Index v = 0; v < n; ++v) ++first[colors(0, v)];
  for (Index u = 1; u < n; ++u) {
    std::fill(row.begin(), row.end(), 0L);
    for (Index v = 0; v < n; ++v) ++row[colors(u, v)];
    if (row != first)
      throw AxiomError("relation row sums are not constant between rows 0 and " +
                       std::to_string(u));
  }
  Valencies val{std::move(first)};

  return AssociationScheme(std::move(colors), rank, std::move(sc), std::move(val));
}

IntMatrix AssociationScheme::relation_matrix(Index i) const {
  const Index n = order();
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      if (colors_(u, v) == i) m(u, v) = 1;
  return m;
}

std::vector<IntMatrix> AssociationScheme::relation_matrices() const {
  std::vector<IntMatrix> out;
  out.reserve(rank_);
  for (Index i = 0; i < rank_; ++i) out.push_back(relation_matrix(i));
  return out;
}

AssociationScheme validate_scheme(const std::vector<IntMatrix>& matrices) {
  if (matrices.empty()) throw AxiomError("empty relation list");
  const Index n = matrices[0].rows();
  for (const auto& m : matrices) {
    if (m.rows() != n || m.cols() != n)
      throw AxiomError("relations must be square matrices of equal size");
    if (!is_zero_one(m)) throw AxiomError("relations must be 0/1 matrices");
  }

  if (matrices[0] != identity_matrix(n)) {
    for (Index u = 0; u < n; ++u)
      for (Index v = 0; v < n; ++v)
        if (matrices[0](u, v) != (u == v ? 1 : 0))
          throw AxiomError("condition (1) fails: first relation is not the identity at cell " +
                           cell(u, v));
  }

  // Condition (2): the relations partition the cells.
  ColorMatrix colors(n, n);
  IntMatrix sum = IntMatrix::Zero(n, n);
  for (std::size_t idx = 0; idx < matrices.size(); ++idx) sum += matrices[idx];
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      if (sum(u, v) != 1)
        throw AxiomError("condition (2) fails: relations sum to " + sum(u, v).get_str() +
                         " (not 1) at cell " + cell(u, v));
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      for (std::size_t idx = 0; idx < matrices.size(); ++idx)
        if (matrices[idx](u, v) == 1) colors(u, v) = static_cast<int>(idx);

  AssociationScheme s = AssociationScheme::from_colors(std::move(colors));
  if (s.rank() != static_cast<Index>(matrices.size()))
    throw AxiomError("a trailing relation matrix is zero");
  return s;
}

const StructureConstants& structure_constants(const AssociationScheme& s) {
  return s.structure();
}

const Valencies& valencies(const AssociationScheme& s) { return s.valencies(); }

Index symmetric_relation_count(const AssociationScheme& s) {
  Index count = 0;
  for (Index i = 0; i < s.rank(); ++i)
    if (s.structure().transpose_map[i] == i) ++count;
  return count;
}

ThinGroupProfile thin_group_profile(const AssociationScheme& s) {
  ThinGroupProfile profile;
  for (long v : s.valencies().n)
    if (v != 1) return profile;
  profile.is_thin = true;

  // Thin scheme: each product A_i A_j is a single relation, giving a group
  // multiplication table on the relation indices with identity 0.
  const Index rank = s.rank();
  const auto& sc = s.structure();
  auto mul = [&](Index i, Index j) {
    for (Index k = 0; k < rank; ++k)
      if (sc.at(i, j, k) == 1) return k;
    throw InternalError("thin scheme product lookup failed");
  };
  for (Index i = 0; i < rank; ++i) {
    int order = 1;
    Index e = i;
    while (e != 0) {
      e = mul(e, i);
      ++order;
      if (order > rank) throw InternalError("thin group element order exceeds group order");
    }
    profile.element_orders.push_back(order);
  }
  std::sort(profile.element_orders.begin(), profile.element_orders.end());
  return profile;
}

std::vector<int> thin_element_orders(const AssociationScheme& s) {
  ThinGroupProfile p = thin_group_profile(s);
  if (!p.is_thin) throw ParameterError("element orders requested on a non-thin scheme");
  return p.element_orders;
}

}  // namespace dqpair
