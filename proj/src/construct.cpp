#include "dqpair/construct.hpp"

#include <array>

#include "dqpair/dihedral.hpp"

namespace dqpair {

namespace dih = dihedral;

const char* to_string(Variant v) { return v == Variant::D ? "D" : "Q"; }

namespace {

// Relations in the pinned table column order.
const std::array<int, 8> kRelElemsD = {dih::kOne, dih::kX2, dih::kY,  dih::kX2Y,
                                       dih::kX,   dih::kX3, dih::kXY, dih::kX3Y};
const std::array<int, 8> kRelElemsQ = {dih::kOne, dih::kX2,  dih::kX, dih::kX3,
                                       dih::kXY,  dih::kX3Y, dih::kY, dih::kX2Y};

const std::vector<std::string> kLabelsD = {"sigma_1", "sigma_x2", "sigma_y", "sigma_x2y",
                                           "mu_x",    "mu_x3",    "mu_xy",   "mu_x3y"};
const std::vector<std::string> kLabelsQ = {"sigma_1", "sigma_x2",  "sigma_x", "sigma_x3",
                                           "tau_xy",  "tau_x3y",   "tau_y",   "tau_x2y"};

void require_identity(const char* label, const IntMatrix& got, const IntMatrix& want) {
  if (got == want) return;
  for (Index u = 0; u < got.rows(); ++u)
    for (Index v = 0; v < got.cols(); ++v)
      if (got(u, v) != want(u, v))
        throw InputCertError(std::string("ingredient identity ") + label + " fails at cell (" +
                             std::to_string(u) + "," + std::to_string(v) + "): got " +
                             got(u, v).get_str() + ", expected " + want(u, v).get_str());
}

}  // namespace

const std::vector<std::string>& labels_of(Variant v) {
  return v == Variant::D ? kLabelsD : kLabelsQ;
}

const std::array<int, 8>& relation_elements(Variant v) {
  return v == Variant::D ? kRelElemsD : kRelElemsQ;
}

BlockIngredients build_ingredients_raw(const IntMatrix& a1, const IntMatrix& a2, long n, long a,
                                       long b) {
  const Index m = a1.rows();
  if (m != n - 1 || a2.rows() != m || a1.cols() != m || a2.cols() != m)
    throw InputCertError("ingredient blocks: relation size does not match n-1");

  BlockIngredients ing;
  ing.n = n;
  ing.a = a;
  ing.b = b;

  ing.E = IntMatrix::Zero(n, n);
  for (Index t = 1; t < n; ++t) {
    ing.E(0, t) = 1;
    ing.E(t, 0) = 1;
  }
  ing.Atilde1 = IntMatrix::Zero(n, n);
  ing.Atilde1.block(1, 1, m, m) = a1;
  ing.Atilde2 = IntMatrix::Zero(n, n);
  ing.Atilde2.block(1, 1, m, m) = a2;
  ing.Ahat1 = ing.Atilde1;
  for (Index t = 1; t < n; ++t) ing.Ahat1(0, t) = 1;
  ing.Ahat2 = ing.Atilde2;
  for (Index t = 1; t < n; ++t) ing.Ahat2(t, 0) = 1;

  const IntMatrix id = identity_matrix(n);
  const IntMatrix j = ones_matrix(n);

  require_identity("E + A~1 + A~2 = J - I", ing.E + ing.Atilde1 + ing.Atilde2, j - id);
  require_identity("I + A^1 + A^2 = J", id + ing.Ahat1 + ing.Ahat2, j);
  require_identity("E^2 + A~1*A~2 + A~2*A~1 = a*I + b*A~1 + b*A~2",
                   mat_mul(ing.E, ing.E) + mat_mul(ing.Atilde1, ing.Atilde2) +
                       mat_mul(ing.Atilde2, ing.Atilde1),
                   Int(a) * id + Int(b) * ing.Atilde1 + Int(b) * ing.Atilde2);
  require_identity("A~1^2 + A~2^2 = b*A~1 + b*A~2",
                   mat_mul(ing.Atilde1, ing.Atilde1) + mat_mul(ing.Atilde2, ing.Atilde2),
                   Int(b) * ing.Atilde1 + Int(b) * ing.Atilde2);
  require_identity("E*A~1 + A~2*E = b*E",
                   mat_mul(ing.E, ing.Atilde1) + mat_mul(ing.Atilde2, ing.E), Int(b) * ing.E);
  require_identity("E*A~2 + A~1*E = b*E",
                   mat_mul(ing.E, ing.Atilde2) + mat_mul(ing.Atilde1, ing.E), Int(b) * ing.E);
  require_identity("A^1^2 + A^2^2 = b*(J - I)",
                   mat_mul(ing.Ahat1, ing.Ahat1) + mat_mul(ing.Ahat2, ing.Ahat2),
                   Int(b) * (j - id));
  require_identity("A^1*A^2 + A^2*A^1 = b*J + (a-b)*I",
                   mat_mul(ing.Ahat1, ing.Ahat2) + mat_mul(ing.Ahat2, ing.Ahat1),
                   Int(b) * j + Int(a - b) * id);

  return ing;
}

BlockIngredients build_ingredients(const Rank3Input& r) {
  return build_ingredients_raw(r.scheme.relation_matrix(1), r.scheme.relation_matrix(2), r.n, r.a,
                               r.b);
}

std::vector<IntMatrix> relation_matrices_D(const BlockIngredients& ing) {
  const IntMatrix id_n = identity_matrix(ing.n);
  std::vector<IntMatrix> rel;
  rel.reserve(8);
  for (int t = 0; t < 4; ++t) rel.push_back(kronecker(id_n, dih::matrix_of(kRelElemsD[t])));
  for (int t = 4; t < 8; ++t) {
    const int g = kRelElemsD[t];
    rel.push_back(kronecker(ing.E, dih::matrix_of(g)) +
                  kronecker(ing.Atilde1, dih::matrix_of(dih::multiply(g, dih::kY))) +
                  kronecker(ing.Atilde2, dih::matrix_of(dih::multiply(g, dih::kX2Y))));
  }
  return rel;
}

std::vector<IntMatrix> relation_matrices_Q(const BlockIngredients& ing) {
  const IntMatrix id_n = identity_matrix(ing.n);
  std::vector<IntMatrix> rel;
  rel.reserve(8);
  for (int t = 0; t < 4; ++t) rel.push_back(kronecker(id_n, dih::matrix_of(kRelElemsQ[t])));
  for (int t = 4; t < 8; ++t) {
    const int g = kRelElemsQ[t];
    rel.push_back(kronecker(ing.Ahat1, dih::matrix_of(g)) +
                  kronecker(ing.Ahat2, dih::matrix_of(dih::multiply(g, dih::kX2))));
  }
  return rel;
}

namespace {

BuiltScheme assemble(Variant v, const BlockIngredients& ing) {
  std::vector<IntMatrix> rel =
      v == Variant::D ? relation_matrices_D(ing) : relation_matrices_Q(ing);
  SchemeMeta meta;
  meta.variant = v == Variant::D ? SchemeMeta::Variant::D : SchemeMeta::Variant::Q;
  meta.params = {{"n", ing.n}, {"a", ing.a}, {"b", ing.b}};
  meta.labels = labels_of(v);
  try {
    AssociationScheme s = validate_scheme(rel);
    return BuiltScheme{std::move(s), std::move(meta)};
  } catch (const AxiomError& e) {
    // Cannot happen on certified input; the product rules force validity.
    throw InternalError(std::string("constructed ") + to_string(v) +
                        " failed validation: " + e.what());
  }
}

}  // namespace

BuiltScheme build_D(const Rank3Input& r) { return assemble(Variant::D, build_ingredients(r)); }

BuiltScheme build_Q(const Rank3Input& r) { return assemble(Variant::Q, build_ingredients(r)); }

BuiltScheme build_variant(Variant v, const Rank3Input& r) {
  return v == Variant::D ? build_D(r) : build_Q(r);
}

BuiltScheme build_degenerate(Variant v) {
  const IntMatrix zero1 = IntMatrix::Zero(1, 1);
  return assemble(v, build_ingredients_raw(zero1, zero1, 2, 1, 0));
}

StructureConstants expected_structure_constants(Variant v, long a, long b) {
  const auto& rel_elems = relation_elements(v);
  std::array<Index, 8> rel_of_elem{};
  for (Index t = 0; t < 8; ++t) rel_of_elem[rel_elems[t]] = t;

  StructureConstants sc;
  sc.rank = 8;
  sc.p.assign(8 * 8 * 8, 0);
  auto add = [&](Index i, Index j, Index k, long value) { sc.p[(i * 8 + j) * 8 + k] += value; };

  for (Index i = 0; i < 8; ++i)
    for (Index j = 0; j < 8; ++j) {
      const int gi = rel_elems[i];
      const int gj = rel_elems[j];
      const int gij = dih::multiply(gi, gj);
      const bool subgroup_i = i < 4;
      const bool subgroup_j = j < 4;
      if (subgroup_i || subgroup_j) {
        // sigma closure and one-sided translation produce a single relation.
        add(i, j, rel_of_elem[gij], 1);
      } else if (v == Variant::D) {
        add(i, j, rel_of_elem[gij], a);
        add(i, j, rel_of_elem[dih::multiply(gij, dih::kX)], b);
        add(i, j, rel_of_elem[dih::multiply(gij, dih::kX3)], b);
      } else {
        add(i, j, rel_of_elem[dih::multiply(gij, dih::kX2)], a);
        add(i, j, rel_of_elem[dih::multiply(gij, dih::kXY)], b);
        add(i, j, rel_of_elem[dih::multiply(gij, dih::kX3Y)], b);
      }
    }

  sc.transpose_map.assign(8, 0);
  for (Index i = 0; i < 8; ++i) {
    const int g = rel_elems[i];
    const int ginv = dih::inverse(g);
    // sigma and mu transpose to the inverse element; tau picks up the x^2 twist.
    const int timg = (v == Variant::Q && i >= 4) ? dih::multiply(dih::kX2, ginv) : ginv;
    sc.transpose_map[i] = rel_of_elem[timg];
  }
  return sc;
}

}  // namespace dqpair
