#include "dqpair/rational_algebra.hpp"

#include <sstream>

namespace dqpair {

Certificate certify_full_matrix(const SchemeRepresentation& rep) {
  Certificate cert("full 2x2 matrix algebra over Q");
  bool shape = !rep.images.empty() && rep.images[0].rows() == 2 && rep.images[0].cols() == 2;
  cert.add("degree 2", shape);
  if (!shape) return cert;

  bool rational = true;
  for (const auto& img : rep.images)
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        if (!img(i, j).is_rational()) rational = false;
  cert.add("all image entries are rational", rational);
  if (!rational) return cert;

  Index dim = span_dimension(rep.images, ScalarField::rationals);
  cert.add("rational span has dimension 4", dim == 4,
           "dimension " + std::to_string(dim));
  return cert;
}

QuaternionPresentation certify_quaternion(const SchemeRepresentation& rep, long a) {
  if (rep.images.size() != 8 || rep.images[0].rows() != 2)
    throw CertError("quaternion certification requires eight degree-2 images");

  // Pinned Q relation order: sigma_x is relation 2, tau_xy is 4, tau_y is 6.
  QuaternionPresentation p;
  p.r = Rat(-1);
  p.s = Rat(-a);
  p.witness_i = rep.images[2];
  p.witness_j = rep.images[6];
  p.witness_k = rep.images[4];

  const GaussMatrix id = GaussMatrix::Identity(2, 2);
  auto scaled = [&](const Rat& c) { return GaussMatrix(GaussRat(c) * id); };

  if (GaussMatrix(p.witness_i * p.witness_i) != scaled(p.r))
    throw CertError("quaternion relation i^2 = r fails");
  if (GaussMatrix(p.witness_j * p.witness_j) != scaled(p.s))
    throw CertError("quaternion relation j^2 = s fails");
  if (GaussMatrix(p.witness_i * p.witness_j) != p.witness_k)
    throw CertError("quaternion relation i*j = k fails");
  if (GaussMatrix(p.witness_j * p.witness_i) != GaussMatrix(-p.witness_k))
    throw CertError("quaternion relation j*i = -k fails");
  // Forced consequence: k^2 = (ij)(ij) = -i^2 j^2 = -r*s.
  if (GaussMatrix(p.witness_k * p.witness_k) != scaled(-p.r * p.s))
    throw CertError("quaternion consequence k^2 = -r*s fails");

  Index dim_images = span_dimension(rep.images, ScalarField::rationals);
  if (dim_images != 4)
    throw CertError("rational span of the images has dimension " + std::to_string(dim_images) +
                    ", expected 4");
  std::vector<GaussMatrix> basis = {id, p.witness_i, p.witness_j, p.witness_k};
  if (span_dimension(basis, ScalarField::rationals) != 4)
    throw CertError("quaternion basis {1,i,j,k} is rationally dependent");
  std::vector<GaussMatrix> joint = rep.images;
  joint.insert(joint.end(), basis.begin(), basis.end());
  if (span_dimension(joint, ScalarField::rationals) != 4)
    throw CertError("quaternion basis does not span the image algebra");

  return p;
}

bool is_division(const Rat& r, const Rat& s) {
  if (r == 0 || s == 0) throw ParameterError("quaternion parameters must be nonzero");
  if (r < 0 && s < 0) return true;
  throw UnsupportedError("division criterion covers only negative r and s");
}

Degree2Certificate certify_degree2_block(Variant v, const SchemeRepresentation& rep, long a) {
  Degree2Certificate out{Certificate("degree-2 block"), {}, std::nullopt};
  if (v == Variant::D) {
    out.cert = certify_full_matrix(rep);
    out.block.kind = Degree2Block::Kind::full_matrix_2;
  } else {
    Certificate cert("quaternion block of Q");
    try {
      QuaternionPresentation p = certify_quaternion(rep, a);
      out.block.kind = Degree2Block::Kind::quaternion;
      out.block.r = p.r;
      out.block.s = p.s;
      out.block.division = is_division(p.r, p.s);
      out.presentation = std::move(p);
      cert.add("presentation relations and rational basis", true);
      cert.add("division algebra (negative parameters)", out.block.division);
    } catch (const CertError& e) {
      cert.add("presentation relations and rational basis", false, e.what());
    }
    out.cert = cert;
  }
  return out;
}

AlgebraSummary algebra_summary(Variant v, const CharacterTable& t,
                               const Degree2Certificate& cert) {
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < t.values.cols(); ++j)
      if (t.values(i, j).get_den() != 1)
        throw CertError("degree-1 character values are not integral");
  cert.cert.require();

  AlgebraSummary s;
  s.variant = v;
  s.commutative_part = {"Q", "Q", "Q", "Q"};
  s.degree2 = cert.block;

  // 4 * 1 + 4 = 8 = rank of the scheme.
  const std::size_t total = s.commutative_part.size() * 1 + 4;
  if (total != 8) throw InternalError("algebra summary dimension bookkeeping failed");
  return s;
}

std::string algebra_line(const AlgebraSummary& s) {
  std::ostringstream os;
  os << "Q" << to_string(s.variant) << " = Q + Q + Q + Q + ";
  if (s.degree2.kind == Degree2Block::Kind::full_matrix_2) {
    os << "M2(Q)";
  } else {
    os << "Quaternion(" << s.degree2.r << "," << s.degree2.s << ")";
    if (s.degree2.division) os << " [division]";
  }
  return os.str();
}

}  // namespace dqpair
