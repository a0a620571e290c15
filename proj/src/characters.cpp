#include "dqpair/characters.hpp"

#include <sstream>

namespace dqpair {

CharacterTable closed_form_table(Variant v, long a) {
  if (a < 1 || (a != 1 && a % 4 != 3))
    throw ParameterError("character table parameter a must be 1 or 3 mod 4, got " +
                         std::to_string(a));
  const long n = a + 1;

  CharacterTable t;
  t.values.resize(5, 8);
  const long grid[5][8] = {
      {1, 1, 1, 1, a, a, a, a},
      {1, 1, -1, -1, a, a, -a, -a},
      {1, 1, 1, 1, -1, -1, -1, -1},
      {1, 1, -1, -1, -1, -1, 1, 1},
      {2, -2, 0, 0, 0, 0, 0, 0},
  };
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 8; ++j) t.values(i, j) = Rat(grid[i][j]);
  t.degrees = {Rat(1), Rat(1), Rat(1), Rat(1), Rat(2)};
  t.multiplicities = {Rat(1), Rat(1), Rat(a), Rat(a), Rat(n)};
  t.indicators = {1, 1, 1, 1, v == Variant::D ? 1 : -1};
  t.labels = labels_of(v);
  return t;
}

namespace {

GaussMatrix gauss2(std::array<GaussRat, 4> e) {
  GaussMatrix m(2, 2);
  m(0, 0) = e[0];
  m(0, 1) = e[1];
  m(1, 0) = e[2];
  m(1, 1) = e[3];
  return m;
}

}  // namespace

SchemeRepresentation rep_degree2(Variant v, long a) {
  if (a < 1 || (a != 1 && a % 4 != 3))
    throw ParameterError("representation parameter a must be 1 or 3 mod 4");
  const GaussRat zero(0), one(1);
  const GaussRat i_unit = GaussRat::sqrt_minus_one();

  SchemeRepresentation rep;
  rep.images.resize(8);
  if (v == Variant::D) {
    // order: sigma_1, sigma_x2, sigma_y, sigma_x2y, mu_x, mu_x3, mu_xy, mu_x3y
    GaussMatrix id = gauss2({one, zero, zero, one});
    GaussMatrix sx2 = gauss2({-one, zero, zero, -one});
    GaussMatrix sy = gauss2({one, zero, zero, -one});
    GaussMatrix mx = gauss2({zero, -one, GaussRat(a), zero});
    rep.images[0] = id;
    rep.images[1] = sx2;
    rep.images[2] = sy;
    rep.images[3] = sx2 * sy;
    rep.images[4] = mx;
    rep.images[5] = mx * sx2;
    rep.images[6] = mx * sy;
    rep.images[7] = mx * sx2 * sy;
  } else {
    // order: sigma_1, sigma_x2, sigma_x, sigma_x3, tau_xy, tau_x3y, tau_y, tau_x2y
    GaussMatrix id = gauss2({one, zero, zero, one});
    GaussMatrix sx = gauss2({i_unit, zero, zero, -i_unit});
    GaussMatrix sx2 = sx * sx;
    GaussMatrix sx3 = sx2 * sx;
    GaussMatrix ty = gauss2({zero, -one, GaussRat(a), zero});
    rep.images[0] = id;
    rep.images[1] = sx2;
    rep.images[2] = sx;
    rep.images[3] = sx3;
    rep.images[4] = sx * ty;
    rep.images[5] = sx3 * ty;
    rep.images[6] = ty;
    rep.images[7] = sx2 * ty;
  }

  const long b = (a - 1) / 2;
  Certificate cert = verify_representation(rep, expected_structure_constants(v, a, b));
  if (!cert.ok())
    throw InternalError("degree-2 representation violates the product rules:\n" + cert.summary());
  return rep;
}

Certificate verify_representation(const SchemeRepresentation& rep,
                                  const StructureConstants& sc) {
  Certificate cert("representation homomorphism");
  const Index rank = sc.rank;
  if (static_cast<Index>(rep.images.size()) != rank) {
    cert.add("image count", false,
             std::to_string(rep.images.size()) + " images for rank " + std::to_string(rank));
    return cert;
  }
  const Index deg = rep.images[0].rows();
  GaussMatrix id = GaussMatrix::Identity(deg, deg);
  cert.add("identity relation maps to the identity matrix", rep.images[0] == id);

  Index failures = 0;
  std::string first;
  for (Index i = 0; i < rank; ++i)
    for (Index j = 0; j < rank; ++j) {
      GaussMatrix lhs = rep.images[i] * rep.images[j];
      GaussMatrix rhs = GaussMatrix::Zero(deg, deg);
      for (Index k = 0; k < rank; ++k) {
        const long c = sc.at(i, j, k);
        if (c != 0) rhs += GaussRat(Rat(c)) * rep.images[k];
      }
      if (lhs != rhs) {
        ++failures;
        if (first.empty())
          first = "first failure at product (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  cert.add("all " + std::to_string(rank * rank) + " product identities", failures == 0,
           failures == 0 ? "" : std::to_string(failures) + " failures; " + first);
  return cert;
}

namespace {

long meta_param(const SchemeMeta& meta, const std::string& key) {
  auto it = meta.params.find(key);
  if (it == meta.params.end())
    throw ParameterError("scheme metadata is missing parameter '" + key + "'");
  return it->second;
}

Variant meta_variant(const SchemeMeta& meta) {
  if (meta.variant == SchemeMeta::Variant::D) return Variant::D;
  if (meta.variant == SchemeMeta::Variant::Q) return Variant::Q;
  throw ParameterError("character table verification requires a built D or Q scheme");
}

}  // namespace

Certificate verify_table(const AssociationScheme& s, const SchemeMeta& meta,
                         const CharacterTable& t) {
  const Variant v = meta_variant(meta);
  const long a = meta_param(meta, "a");
  const auto& sc = s.structure();
  const Index rank = s.rank();
  Certificate cert(std::string("character table of ") + to_string(v));

  if (t.values.rows() != 5 || t.values.cols() != rank) {
    cert.add("table shape", false, "expected 5 x " + std::to_string(rank));
    return cert;
  }

  // (i) Degree-1 rows extend to algebra homomorphisms.
  for (Index row = 0; row < 5; ++row) {
    if (t.degrees[row] != 1) continue;
    bool mult = true;
    std::string detail;
    for (Index i = 0; i < rank && mult; ++i)
      for (Index j = 0; j < rank && mult; ++j) {
        Rat rhs(0);
        for (Index k = 0; k < rank; ++k) rhs += Rat(sc.at(i, j, k)) * t.values(row, k);
        if (t.values(row, i) * t.values(row, j) != rhs) {
          mult = false;
          detail = "fails at relation pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    cert.add("degree-1 row " + std::to_string(row) + " is multiplicative", mult, detail);
  }

  // (ii) The degree-2 row is the trace of the degree-2 representation, and
  // that representation satisfies the actual structure constants.
  {
    SchemeRepresentation rep = rep_degree2(v, a);
    Certificate rep_cert = verify_representation(rep, sc);
    cert.add("degree-2 representation satisfies the built scheme's products", rep_cert.ok(),
             rep_cert.ok() ? "" : rep_cert.summary());
    bool traces_match = true;
    std::string detail;
    for (Index j = 0; j < rank; ++j) {
      GaussRat tr(0);
      for (Index d = 0; d < 2; ++d) tr += rep.images[j](d, d);
      if (!(tr.is_rational() && tr.re == t.values(4, j))) {
        traces_match = false;
        detail = "trace mismatch at relation " + std::to_string(j);
        break;
      }
    }
    cert.add("degree-2 row equals the representation traces", traces_match, detail);
  }

  // (iii) Multiplicities: unique exact solution of
  // sum_i m_i chi_i(A_j) = trace(A_j) = order * [j == 0].
  {
    RatMatrix sys(rank, 5);
    for (Index j = 0; j < rank; ++j)
      for (Index i = 0; i < 5; ++i) sys(j, i) = t.values(i, j);
    RatMatrix rhs = RatMatrix::Zero(rank, 1);
    rhs(0, 0) = Rat(s.order());
    bool solved = false;
    std::string detail;
    try {
      SolveResult res = solve_exact(sys, rhs);
      solved = res.rank == 5;
      if (!solved) detail = "system rank " + std::to_string(res.rank);
      for (Index i = 0; i < 5 && solved; ++i)
        if (res.solution(i, 0) != t.multiplicities[i]) {
          solved = false;
          detail = "solved multiplicity " + res.solution(i, 0).get_str() +
                   " != " + t.multiplicities[i].get_str() + " at row " + std::to_string(i);
        }
    } catch (const SolveError& e) {
      detail = e.what();
    }
    cert.add("multiplicities solve the standard-character system uniquely", solved, detail);
  }

  // (iv) Dimension bookkeeping.
  {
    Rat dim_sum(0), std_sum(0);
    for (Index i = 0; i < 5; ++i) {
      dim_sum += t.degrees[i] * t.degrees[i];
      std_sum += t.multiplicities[i] * t.degrees[i];
    }
    cert.add("sum of squared degrees equals the rank", dim_sum == Rat(rank));
    cert.add("sum of m_i * deg_i equals the order", std_sum == Rat(s.order()));
  }

  cert.add("table rows are linearly independent", rational_rank(t.values) == 5);

  // Degrees column consistency.
  bool deg_ok = true;
  for (Index i = 0; i < 5; ++i)
    if (t.values(i, 0) != t.degrees[i]) deg_ok = false;
  cert.add("degree column matches values(:,0)", deg_ok);

  return cert;
}

Rat fs_indicator(const AssociationScheme& s, const CharacterTable& t, Index row) {
  const auto& sc = s.structure();
  const auto& val = s.valencies().n;
  const Index rank = s.rank();
  Rat sum(0);
  for (Index j = 0; j < rank; ++j) {
    Rat chi_sq(0);  // chi(A_j^2) through the structure constants
    for (Index k = 0; k < rank; ++k) chi_sq += Rat(sc.at(j, j, k)) * t.values(row, k);
    sum += chi_sq / Rat(val[j]);
  }
  return t.multiplicities[row] * sum / (Rat(s.order()) * t.values(row, 0));
}

std::vector<Rat> fs_indicators(const AssociationScheme& s, const CharacterTable& t) {
  std::vector<Rat> out;
  for (Index row = 0; row < t.values.rows(); ++row) out.push_back(fs_indicator(s, t, row));
  return out;
}

Certificate fs_sum_check(const AssociationScheme& s, const CharacterTable& t) {
  Certificate cert("indicator sum");
  std::vector<Rat> nu = fs_indicators(s, t);

  bool match_closed = true;
  for (Index i = 0; i < 5; ++i)
    if (nu[i] != Rat(t.indicators[i])) match_closed = false;
  {
    std::ostringstream os;
    for (Index i = 0; i < 5; ++i) os << (i ? "," : "") << nu[i];
    cert.add("computed indicators equal the stored vector", match_closed, os.str());
  }

  Rat lhs(0);
  for (Index i = 0; i < 5; ++i) lhs += nu[i] * t.values(i, 0);
  const Index sym = symmetric_relation_count(s);
  cert.add("sum nu_i * deg_i equals the symmetric-relation count", lhs == Rat(sym),
           lhs.get_str() + " vs " + std::to_string(sym));
  return cert;
}

void write_table_tsv(std::ostream& os, const CharacterTable& t) {
  for (Index j = 0; j < static_cast<Index>(t.labels.size()); ++j) {
    if (j) os << "\t";
    os << t.labels[j];
  }
  os << "\tm\tnu\n";
  for (Index i = 0; i < t.values.rows(); ++i) {
    for (Index j = 0; j < t.values.cols(); ++j) {
      if (j) os << "\t";
      os << t.values(i, j);
    }
    os << "\t" << t.multiplicities[i] << "\t" << t.indicators[i] << "\n";
  }
}

std::string table_tsv(const CharacterTable& t) {
  std::ostringstream os;
  write_table_tsv(os, t);
  return os.str();
}

}  // namespace dqpair
