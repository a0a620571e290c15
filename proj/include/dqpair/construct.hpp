#pragma once

#include "dqpair/rank3.hpp"
#include "dqpair/scheme.hpp"

namespace dqpair {

enum class Variant { D, Q };
const char* to_string(Variant v);

/// The n x n bordered blocks the two constructions are assembled from:
///   E      first row and column all ones off the corner, zero elsewhere
///   A~i    A_i embedded with a zero border
///   A^1    A~1 plus an all-ones first row (off the corner)
///   A^2    A~2 plus an all-ones first column (off the corner)
struct BlockIngredients {
  IntMatrix E;
  IntMatrix Atilde1, Atilde2;
  IntMatrix Ahat1, Ahat2;
  long n = 0, a = 0, b = 0;
};

/// Builds the blocks and verifies every identity they must satisfy
/// (square/cross products against a,b and the two partition-of-J identities)
/// before returning; InputCertError names the failing identity.
BlockIngredients build_ingredients(const Rank3Input& r);

/// Same, from raw relation matrices; used by the degenerate a=1 mode where
/// A1 = A2 = O (1x1) and n = 2.
BlockIngredients build_ingredients_raw(const IntMatrix& a1, const IntMatrix& a2, long n, long a,
                                       long b);

struct BuiltScheme {
  AssociationScheme scheme;
  SchemeMeta meta;
};

/// Relation matrices in the pinned label order, before validation.
std::vector<IntMatrix> relation_matrices_D(const BlockIngredients& ing);
std::vector<IntMatrix> relation_matrices_Q(const BlockIngredients& ing);

/// Pinned relation labels per variant.
const std::vector<std::string>& labels_of(Variant v);
/// Group element index of each relation in the pinned order.
const std::array<int, 8>& relation_elements(Variant v);

/// Order-4n rank-8 scheme D: sigma_h = I_n (x) h over the centralizer of y,
/// mu_g = E (x) g + A~1 (x) gy + A~2 (x) gx2y over the other coset.
BuiltScheme build_D(const Rank3Input& r);

/// Order-4n rank-8 scheme Q: sigma_k = I_n (x) k over the centralizer of x,
/// tau_g = A^1 (x) g + A^2 (x) gx2 over the other coset.
BuiltScheme build_Q(const Rank3Input& r);

BuiltScheme build_variant(Variant v, const Rank3Input& r);

/// The a=1, A1=A2=O degenerate mode; yields the thin order-8 pair.
BuiltScheme build_degenerate(Variant v);

/// Structure constants the closed-form product rules predict:
///   sigma closure, sigma/mu (or sigma/tau) translation, and
///   mu_g mu_g' = a sigma_{gg'} + b mu_{gg'x} + b mu_{gg'x3}           (D)
///   tau_g tau_g' = a sigma_{gg'x2} + b tau_{gg'xy} + b tau_{gg'x3y}   (Q)
StructureConstants expected_structure_constants(Variant v, long a, long b);

}  // namespace dqpair
