#pragma once

#include <optional>

#include "dqpair/characters.hpp"

namespace dqpair {

/// Witnesses for a quaternion-algebra presentation inside the degree-2 image:
/// i^2 = r, j^2 = s, ij = -ji = k.
struct QuaternionPresentation {
  Rat r, s;
  GaussMatrix witness_i, witness_j, witness_k;
};

/// Certifies that the rational span of the eight degree-2 images is all of the
/// 2x2 matrix algebra over the rationals (span dimension 4 with rational
/// entries).
Certificate certify_full_matrix(const SchemeRepresentation& rep);

/// Certifies the quaternion presentation of the Q-variant image with
/// witness_i = image of sigma_x, witness_j = image of tau_y,
/// witness_k = image of tau_xy and (r, s) = (-1, -a). Throws CertError naming
/// the first failed relation.
QuaternionPresentation certify_quaternion(const SchemeRepresentation& rep, long a);

/// The stated division criterion: true when r < 0 and s < 0. Zero arguments
/// are a ParameterError; other sign patterns are an UnsupportedError.
bool is_division(const Rat& r, const Rat& s);

struct Degree2Block {
  enum class Kind { full_matrix_2, quaternion };
  Kind kind = Kind::full_matrix_2;
  Rat r, s;             // quaternion parameters when kind == quaternion
  bool division = false;
};

struct Degree2Certificate {
  Certificate cert;
  Degree2Block block;
  std::optional<QuaternionPresentation> presentation;
};

/// Runs the variant-appropriate certification of the degree-2 block.
Degree2Certificate certify_degree2_block(Variant v, const SchemeRepresentation& rep, long a);

/// Five-summand decomposition of the rational adjacency algebra: one rational
/// field per degree-1 character plus the certified degree-2 block.
struct AlgebraSummary {
  Variant variant = Variant::D;
  std::vector<std::string> commutative_part;  // four copies of "Q"
  Degree2Block degree2;
};

AlgebraSummary algebra_summary(Variant v, const CharacterTable& t, const Degree2Certificate& cert);

/// "QD = Q + Q + Q + Q + M2(Q)" / "QQ = Q + Q + Q + Q + Quaternion(-1,-a) [division]"
std::string algebra_line(const AlgebraSummary& s);

}  // namespace dqpair
