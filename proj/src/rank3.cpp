#include "dqpair/rank3.hpp"

#include <fstream>
#include <sstream>

namespace dqpair {

bool is_prime(long q) {
  if (q < 2) return false;
  for (long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Rank3Input paley_tournament(long q) {
  if (!is_prime(q)) throw ParameterError("paley: " + std::to_string(q) + " is not prime");
  if (q % 4 != 3)
    throw ParameterError("paley: " + std::to_string(q) + " is not 3 mod 4");

  // Residues by squaring every nonzero field element.
  std::vector<bool> residue(q, false);
  for (long t = 1; t < q; ++t) residue[(t * t) % q] = true;

  ColorMatrix colors(q, q);
  for (long i = 0; i < q; ++i)
    for (long j = 0; j < q; ++j)
      colors(i, j) = (i == j) ? 0 : (residue[((j - i) % q + q) % q] ? 1 : 2);

  AssociationScheme s = AssociationScheme::from_colors(std::move(colors));
  return validate_rank3(s);
}

Rank3Input validate_rank3(const std::vector<IntMatrix>& matrices) {
  if (matrices.size() != 3)
    throw InputCertError("rank-3 input must have exactly 3 relations, got " +
                         std::to_string(matrices.size()));
  const Index m = matrices[0].rows();
  for (const auto& mat : matrices)
    if (mat.rows() != m || mat.cols() != m)
      throw InputCertError("rank-3 relations must be square matrices of equal size");
  for (const auto& mat : matrices)
    if (!is_zero_one(mat)) throw InputCertError("rank-3 relations must be 0/1 matrices");

  const IntMatrix& a0 = matrices[0];
  const IntMatrix& a1 = matrices[1];
  const IntMatrix& a2 = matrices[2];

  if (a0 != identity_matrix(m))
    throw InputCertError("rank-3 input: first relation is not the identity");
  if (IntMatrix(a0 + a1 + a2) != ones_matrix(m))
    throw InputCertError("rank-3 input: relations do not partition the cells");

  IntMatrix a1t = transpose(a1);
  if (a1t == a1)
    throw InputCertError("rank-3 input is symmetric (transpose of relation 1 equals itself)");
  if (a1t != a2)
    throw InputCertError("rank-3 input: transpose of relation 1 is not relation 2");

  if (m % 4 != 3)
    throw InputCertError("rank-3 input has order " + std::to_string(m) +
                         ", which is not 3 mod 4");

  const long b = (m - 1) / 2;  // odd because m = 3 mod 4
  const long c_minus = (b - 1) / 2;
  const long c_plus = (b + 1) / 2;

  const IntMatrix sq1 = mat_mul(a1, a1);
  const IntMatrix sq2 = mat_mul(a2, a2);
  const IntMatrix pr12 = mat_mul(a1, a2);
  const IntMatrix pr21 = mat_mul(a2, a1);
  const IntMatrix want1 = Int(c_minus) * a1 + Int(c_plus) * a2;
  const IntMatrix want2 = Int(c_plus) * a1 + Int(c_minus) * a2;
  const IntMatrix want3 = Int(b) * a0 + Int(c_minus) * a1 + Int(c_minus) * a2;

  std::vector<std::string> failures;
  auto check = [&](const char* label, const IntMatrix& got, const IntMatrix& want) {
    for (Index u = 0; u < m; ++u)
      for (Index v = 0; v < m; ++v)
        if (got(u, v) != want(u, v)) {
          failures.push_back(std::string(label) + " fails at cell (" + std::to_string(u) + "," +
                             std::to_string(v) + "): got " + got(u, v).get_str() + ", expected " +
                             want(u, v).get_str());
          return;
        }
  };
  check("identity (1): A1^2 = ((b-1)/2)A1 + ((b+1)/2)A2", sq1, want1);
  check("identity (2): A2^2 = ((b+1)/2)A1 + ((b-1)/2)A2", sq2, want2);
  check("identity (3): A1*A2 = b*A0 + ((b-1)/2)(A1+A2)", pr12, want3);
  check("identity (3): A2*A1 = b*A0 + ((b-1)/2)(A1+A2)", pr21, want3);
  if (!failures.empty()) {
    std::string msg = "rank-3 input is not doubly regular:";
    for (const auto& f : failures) msg += " [" + f + "]";
    throw InputCertError(msg);
  }

  // The identities certify closure, so this cannot throw on certified input.
  AssociationScheme s = validate_scheme(matrices);
  return Rank3Input{std::move(s), m + 1, m, b};
}

Rank3Input validate_rank3(const AssociationScheme& s) {
  if (s.rank() != 3)
    throw InputCertError("rank-3 input required, got rank " + std::to_string(s.rank()));
  return validate_rank3(s.relation_matrices());
}

SkewHadamard make_skew_hadamard(IntMatrix h) {
  const Index n = h.rows();
  if (n == 0 || h.cols() != n) throw InputCertError("Hadamard matrix must be square");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (h(i, j) != 1 && h(i, j) != -1)
        throw InputCertError("Hadamard matrix entries must be +1 or -1");
  if (mat_mul(h, transpose(h)) != IntMatrix(Int(n) * identity_matrix(n)))
    throw InputCertError("not Hadamard: H * tH != n*I");
  if (IntMatrix(h + transpose(h)) != IntMatrix(Int(2) * identity_matrix(n)))
    throw InputCertError("not skew type: H + tH != 2*I");
  return SkewHadamard{std::move(h)};
}

Rank3Input skew_hadamard_to_rank3(const SkewHadamard& sh) {
  const IntMatrix& h = sh.h;
  const Index n = h.rows();
  if (n < 4) throw InputCertError("skew-Hadamard order must be at least 4");

  // Sign vector: flipping row i and column i together preserves both
  // invariants; scanning from index 0 upward fixes the canonical form.
  std::vector<Int> sign(n);
  sign[0] = 1;
  for (Index j = 1; j < n; ++j) sign[j] = h(0, j);
  IntMatrix norm(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) norm(i, j) = sign[i] * h(i, j) * sign[j];

  const Index m = n - 1;
  IntMatrix a1 = IntMatrix::Zero(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      if (i != j && norm(i + 1, j + 1) == 1) a1(i, j) = 1;
  IntMatrix a2 = ones_matrix(m) - identity_matrix(m) - a1;
  return validate_rank3({identity_matrix(m), std::move(a1), std::move(a2)});
}

SkewHadamard read_had(std::istream& is) {
  std::string line;
  auto get_line = [&](std::string& out) {
    if (!std::getline(is, out)) return false;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    return true;
  };
  if (!get_line(line)) throw FormatError("empty Hadamard file");
  std::istringstream header(line);
  std::string tag;
  long n = 0;
  header >> tag >> n;
  if (tag != "hadamard" || header.fail() || n <= 0)
    throw FormatError("bad Hadamard header: '" + line + "'");
  IntMatrix h(n, n);
  for (long i = 0; i < n; ++i) {
    if (!get_line(line)) throw FormatError("Hadamard file truncated at row " + std::to_string(i));
    if (static_cast<long>(line.size()) != n)
      throw FormatError("Hadamard row " + std::to_string(i) + " has length " +
                        std::to_string(line.size()) + ", expected " + std::to_string(n));
    for (long j = 0; j < n; ++j) {
      if (line[j] == '+')
        h(i, j) = 1;
      else if (line[j] == '-')
        h(i, j) = -1;
      else
        throw FormatError(std::string("bad character '") + line[j] + "' in Hadamard row " +
                          std::to_string(i));
    }
  }
  return make_skew_hadamard(std::move(h));
}

SkewHadamard read_had_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open Hadamard file '" + path + "'");
  return read_had(f);
}

void write_had(std::ostream& os, const SkewHadamard& sh) {
  const Index n = sh.h.rows();
  os << "hadamard " << n << "\n";
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) os << (sh.h(i, j) == 1 ? '+' : '-');
    os << "\n";
  }
}

}  // namespace dqpair
