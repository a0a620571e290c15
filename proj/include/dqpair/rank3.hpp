#pragma once

#include <iosfwd>

#include "dqpair/scheme.hpp"

namespace dqpair {

/// Certified non-symmetric rank-3 association scheme of order n-1, i.e. a
/// doubly regular tournament, together with the derived parameters
/// a = n-1 and b = (n-2)/2.
struct Rank3Input {
  AssociationScheme scheme;
  long n = 0;
  long a = 0;
  long b = 0;
};

bool is_prime(long q);

/// Quadratic-residue tournament on q points (q prime, q = 3 mod 4):
/// i -> j iff j - i is a nonzero square mod q.
Rank3Input paley_tournament(long q);

/// Certifies a rank-3 coloring as a doubly regular tournament: transpose
/// pairing of relations 1 and 2, non-symmetry, order = 3 mod 4, and the three
/// product identities
///   (1) A1^2   = ((b-1)/2) A1 + ((b+1)/2) A2
///   (2) A2^2   = ((b+1)/2) A1 + ((b-1)/2) A2
///   (3) A1*A2  = A2*A1 = b A0 + ((b-1)/2)(A1 + A2)
/// checked by exact matrix arithmetic. InputCertError names every failure.
Rank3Input validate_rank3(const std::vector<IntMatrix>& matrices);
Rank3Input validate_rank3(const AssociationScheme& s);

/// A +/-1 matrix H with H tH = n I and H + tH = 2 I.
struct SkewHadamard {
  IntMatrix h;
};

/// Validates the two defining identities; InputCertError otherwise.
SkewHadamard make_skew_hadamard(IntMatrix h);

/// Normalizes the first row to +1 off the diagonal by simultaneous row/column
/// sign flips (which preserve both defining identities; the first column then
/// becomes -1 off the diagonal), deletes point 0, and reads the tournament off
/// the +1 cells of the core. The result is certified via validate_rank3.
Rank3Input skew_hadamard_to_rank3(const SkewHadamard& h);

/// Hadamard file format (.had): header "hadamard <n>", then n lines of n
/// characters from {+,-}. Any other character is rejected.
SkewHadamard read_had(std::istream& is);
SkewHadamard read_had_file(const std::string& path);
void write_had(std::ostream& os, const SkewHadamard& h);

}  // namespace dqpair
