#pragma once

#include <iosfwd>

#include "dqpair/certificate.hpp"
#include "dqpair/construct.hpp"
#include "dqpair/linalg.hpp"

namespace dqpair {

/// Exact character table of one of the constructed order-4n schemes: five
/// irreducible characters against the eight relations in pinned label order,
/// with multiplicities and Frobenius-Schur indicators.
struct CharacterTable {
  RatMatrix values;                // 5 x 8
  std::vector<Rat> degrees;        // values(i, 0)
  std::vector<Rat> multiplicities; // 5
  std::vector<int> indicators;     // 5, each in {-1, 0, 1}
  std::vector<std::string> labels; // 8 relation labels (column headers)
};

/// The closed-form table as a function of a: four degree-1 rows with values in
/// {±1, ±a}, one degree-2 row (2,-2,0,...,0); multiplicities (1,1,a,a,a+1);
/// indicators all +1 for D and (1,1,1,1,-1) for Q. Valid for a = 1 or
/// a = 3 mod 4.
CharacterTable closed_form_table(Variant v, long a);

/// Images of the eight relations under a matrix representation.
struct SchemeRepresentation {
  std::vector<GaussMatrix> images;  // indexed by relation
};

/// The degree-2 representation: for D the generators map to
/// sigma_x2 -> -I, sigma_y -> diag(1,-1), mu_x -> [[0,-1],[a,0]]; for Q,
/// sigma_x -> diag(i,-i), tau_y -> [[0,-1],[a,0]]. The remaining images are
/// the forced products. The homomorphism property is checked against the
/// closed-form structure constants before returning.
SchemeRepresentation rep_degree2(Variant v, long a);

/// All 64 product identities images[i]*images[j] = sum_k p(i,j,k) images[k].
Certificate verify_representation(const SchemeRepresentation& rep,
                                  const StructureConstants& sc);

/// Certifies a table against a built scheme: degree-1 rows are multiplicative
/// on the structure constants, the degree-2 row is the trace of rep_degree2,
/// the multiplicities are the unique exact solution of the standard-character
/// system, and the dimension bookkeeping holds.
Certificate verify_table(const AssociationScheme& s, const SchemeMeta& meta,
                         const CharacterTable& t);

/// Frobenius-Schur indicator of row i via
///   nu = m/(N*deg) * sum_j (1/n_j) * chi(A_j^2),
/// with N the order of the scheme and chi(A_j^2) evaluated through the
/// structure constants.
Rat fs_indicator(const AssociationScheme& s, const CharacterTable& t, Index row);
std::vector<Rat> fs_indicators(const AssociationScheme& s, const CharacterTable& t);

/// Checks sum_i nu_i * deg_i against the symmetric-relation census.
Certificate fs_sum_check(const AssociationScheme& s, const CharacterTable& t);

/// TSV: header of relation labels plus "m" and "nu", then one row per
/// character.
void write_table_tsv(std::ostream& os, const CharacterTable& t);
std::string table_tsv(const CharacterTable& t);

}  // namespace dqpair
