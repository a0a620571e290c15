// Acceptance suite: runs every top-level claim end to end and prints one
// PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "dqpair/dihedral.hpp"
#include "dqpair/report.hpp"
#include "test_util.hpp"

using namespace dqpair;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<long> kQList = {3, 7, 11, 19, 23};

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<void()>& body) {
  const auto start = Clock::now();
  std::string failure;
  try {
    body();
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream line;
  line << "[" << number << "] " << name << ": " << (failure.empty() ? "PASS" : "FAIL");
  line.precision(2);
  line << std::fixed << " (" << seconds << "s)";
  if (!failure.empty()) {
    line << "\n    " << failure;
    ++g_failures;
  }
  std::cout << line.str() << std::endl;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::runtime_error(message);
}

struct BuiltPair {
  Rank3Input input;
  BuiltScheme d;
  BuiltScheme q;
};

BuiltPair build_pair(long q) {
  Rank3Input input = paley_tournament(q);
  BuiltScheme d = build_D(input);
  BuiltScheme bq = build_Q(input);
  return BuiltPair{std::move(input), std::move(d), std::move(bq)};
}

void check_criterion_1() {
  dqt::TempDir dir;
  for (long q : kQList) {
    const auto start = Clock::now();
    BuiltPair pair = build_pair(q);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    require(seconds < 5.0, "q=" + std::to_string(q) + " build took " + std::to_string(seconds) +
                               "s, limit 5s");

    std::vector<long> expected_val = {1, 1, 1, 1, q, q, q, q};
    for (const BuiltScheme* built : {&pair.d, &pair.q}) {
      require(built->scheme.order() == 4 * (q + 1),
              "order mismatch for q=" + std::to_string(q));
      require(built->scheme.rank() == 8, "rank mismatch for q=" + std::to_string(q));
      require(built->scheme.valencies().n == expected_val,
              "valency mismatch for q=" + std::to_string(q));
      // Re-validate from the derived matrix list: the full axiom check.
      AssociationScheme again = validate_scheme(built->scheme.relation_matrices());
      require(again == built->scheme, "revalidation changed the scheme");
    }

    // The CLI round trip: gen-rank3 -> build -> verify -> report.
    const std::string scm = dir.file("p" + std::to_string(q) + ".scm");
    const std::string stem = dir.file("p" + std::to_string(q));
    require(dqt::run_cli("gen-rank3 --paley " + std::to_string(q) + " -o '" + scm + "'")
                    .exit_code == 0,
            "gen-rank3 failed for q=" + std::to_string(q));
    require(dqt::run_cli("build --variant both --input '" + scm + "' -o '" + stem + "'")
                    .exit_code == 0,
            "build failed for q=" + std::to_string(q));
    for (const char* suffix : {".D.scm", ".Q.scm"}) {
      auto res = dqt::run_cli("verify '" + stem + suffix + "'");
      require(res.exit_code == 0, std::string("verify failed for ") + suffix);
    }
    auto report = dqt::run_cli("report --input '" + scm + "'");
    require(report.exit_code == 0, "report failed for q=" + std::to_string(q));
    require(dqt::contains(report.out, "overall: PASS"), "report did not pass");
  }
}

void check_criterion_2() {
  for (long q : kQList) {
    BuiltPair pair = build_pair(q);
    for (const BuiltScheme* built : {&pair.d, &pair.q}) {
      Variant v = built->meta.variant == SchemeMeta::Variant::D ? Variant::D : Variant::Q;
      StructureConstants expect = expected_structure_constants(v, pair.input.a, pair.input.b);
      require(built->scheme.structure().p == expect.p,
              "closed-form constants mismatch at q=" + std::to_string(q));
      require(built->scheme.structure().transpose_map == expect.transpose_map,
              "transpose pairing mismatch at q=" + std::to_string(q));
    }
  }

  // Independent oracle: every product as a full matrix identity.
  for (long q : {3L, 7L}) {
    BuiltPair pair = build_pair(q);
    for (const BuiltScheme* built : {&pair.d, &pair.q}) {
      auto mats = built->scheme.relation_matrices();
      const auto& sc = built->scheme.structure();
      const Index n = built->scheme.order();
      for (Index i = 0; i < 8; ++i)
        for (Index j = 0; j < 8; ++j) {
          IntMatrix rhs = IntMatrix::Zero(n, n);
          for (Index k = 0; k < 8; ++k)
            if (sc.at(i, j, k) != 0) rhs += Int(sc.at(i, j, k)) * mats[k];
          require(mat_mul(mats[i], mats[j]) == rhs,
                  "full-product oracle mismatch at q=" + std::to_string(q));
        }
    }
  }
}

void check_criterion_3() {
  for (long q : kQList) {
    BuiltPair pair = build_pair(q);
    CharacterTable td = closed_form_table(Variant::D, pair.input.a);
    CharacterTable tq = closed_form_table(Variant::Q, pair.input.a);

    Certificate cd = verify_table(pair.d.scheme, pair.d.meta, td);
    if (!cd.ok()) throw std::runtime_error("D table certificate:\n" + cd.summary());
    Certificate cq = verify_table(pair.q.scheme, pair.q.meta, tq);
    if (!cq.ok()) throw std::runtime_error("Q table certificate:\n" + cq.summary());

    require(td.values == tq.values, "grids differ at q=" + std::to_string(q));
    std::vector<Rat> expect_m = {Rat(1), Rat(1), Rat(pair.input.a), Rat(pair.input.a),
                                 Rat(pair.input.a + 1)};
    require(td.multiplicities == expect_m, "multiplicity closed form mismatch");

    // Uniqueness, re-established directly from the solve.
    RatMatrix sys(8, 5);
    for (Index j = 0; j < 8; ++j)
      for (Index i = 0; i < 5; ++i) sys(j, i) = td.values(i, j);
    RatMatrix rhs = RatMatrix::Zero(8, 1);
    rhs(0, 0) = Rat(pair.d.scheme.order());
    SolveResult solved = solve_exact(sys, rhs);
    require(solved.rank == 5, "multiplicity system is not determined");
    for (Index i = 0; i < 5; ++i)
      require(solved.solution(i, 0) == expect_m[i], "solved multiplicities differ");
  }
}

void check_criterion_4() {
  for (long q : kQList) {
    BuiltPair pair = build_pair(q);
    CharacterTable td = closed_form_table(Variant::D, pair.input.a);
    CharacterTable tq = closed_form_table(Variant::Q, pair.input.a);

    std::vector<Rat> nu_d = fs_indicators(pair.d.scheme, td);
    std::vector<Rat> nu_q = fs_indicators(pair.q.scheme, tq);
    require(nu_d == std::vector<Rat>{1, 1, 1, 1, 1}, "D indicators at q=" + std::to_string(q));
    require(nu_q == std::vector<Rat>{1, 1, 1, 1, -1}, "Q indicators at q=" + std::to_string(q));

    require(symmetric_relation_count(pair.d.scheme) == 6, "D symmetric census");
    require(symmetric_relation_count(pair.q.scheme) == 2, "Q symmetric census");
    Certificate fd = fs_sum_check(pair.d.scheme, td);
    if (!fd.ok()) throw std::runtime_error("D indicator sum:\n" + fd.summary());
    Certificate fq = fs_sum_check(pair.q.scheme, tq);
    if (!fq.ok()) throw std::runtime_error("Q indicator sum:\n" + fq.summary());
  }
}

void check_criterion_5() {
  for (long q : kQList) {
    BuiltPair pair = build_pair(q);
    for (const BuiltScheme* built : {&pair.d, &pair.q}) {
      Variant v = built->meta.variant == SchemeMeta::Variant::D ? Variant::D : Variant::Q;
      SchemeRepresentation rep = rep_degree2(v, pair.input.a);
      Certificate cert = verify_representation(rep, built->scheme.structure());
      if (!cert.ok())
        throw std::runtime_error("representation certificate:\n" + cert.summary());

      CharacterTable t = closed_form_table(v, pair.input.a);
      for (Index j = 0; j < 8; ++j) {
        GaussRat tr = rep.images[j](0, 0) + rep.images[j](1, 1);
        require(tr.is_rational() && tr.re == t.values(4, j),
                "trace mismatch at relation " + std::to_string(j));
      }
    }
  }
}

void check_criterion_6() {
  for (long q : kQList) {
    long a = q;
    Certificate full = certify_full_matrix(rep_degree2(Variant::D, a));
    if (!full.ok()) throw std::runtime_error("D span certificate:\n" + full.summary());

    QuaternionPresentation p = certify_quaternion(rep_degree2(Variant::Q, a), a);
    require(p.r == Rat(-1) && p.s == Rat(-a), "quaternion parameters at a=" + std::to_string(a));
    require(is_division(p.r, p.s), "division flag at a=" + std::to_string(a));
  }
}

void check_criterion_7() {
  auto res = dqt::run_cli("report --degenerate");
  require(res.exit_code == 0, "report --degenerate exited " + std::to_string(res.exit_code));
  require(dqt::contains(res.out, "element orders 1,2,2,2,2,2,4,4 (5 involutions)"),
          "five-involution profile missing");
  require(dqt::contains(res.out, "element orders 1,2,4,4,4,4,4,4 (1 involutions)"),
          "one-involution profile missing");
  require(dqt::contains(res.out, "overall: PASS"), "degenerate report did not pass");

  BuiltScheme d = build_degenerate(Variant::D);
  BuiltScheme q = build_degenerate(Variant::Q);
  require(d.scheme.order() == 8 && q.scheme.order() == 8, "degenerate order");
  require(thin_group_profile(d.scheme).element_orders ==
              std::vector<int>{1, 2, 2, 2, 2, 2, 4, 4},
          "degenerate D profile");
  require(thin_group_profile(q.scheme).element_orders ==
              std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4},
          "degenerate Q profile");
  require(symmetric_relation_count(d.scheme) == 6, "degenerate D census");
  require(symmetric_relation_count(q.scheme) == 2, "degenerate Q census");

  CharacterTable td = closed_form_table(Variant::D, 1);
  CharacterTable tq = closed_form_table(Variant::Q, 1);
  require(td.values == tq.values, "degenerate grids differ");
  Certificate cd = verify_table(d.scheme, d.meta, td);
  Certificate cq = verify_table(q.scheme, q.meta, tq);
  require(cd.ok() && cq.ok(), "degenerate table certificates");
  require(fs_indicators(d.scheme, td) == std::vector<Rat>{1, 1, 1, 1, 1}, "degenerate D nu");
  require(fs_indicators(q.scheme, tq) == std::vector<Rat>{1, 1, 1, 1, -1}, "degenerate Q nu");
  require(certify_degree2_block(Variant::D, rep_degree2(Variant::D, 1), 1).cert.ok(),
          "degenerate D block");
  Degree2Certificate qb = certify_degree2_block(Variant::Q, rep_degree2(Variant::Q, 1), 1);
  require(qb.cert.ok() && qb.block.division, "degenerate Q block");
}

void check_criterion_8() {
  const auto start = Clock::now();

  // Group self-tests (run at every startup; re-trigger and spot-check here).
  const auto& group = dihedral::group_table();
  require(IntMatrix(group.matrices[dihedral::kOne] + group.matrices[dihedral::kX2]) ==
              IntMatrix(group.matrices[dihedral::kXY] + group.matrices[dihedral::kX3Y]),
          "two-element sum identity");
  require(dihedral::multiply(dihedral::kY, dihedral::kX) == dihedral::kX3Y, "y*x = x3y");

  // 100 random single-cell flips on the q=3 scheme D must all be rejected.
  BuiltPair pair = build_pair(3);
  const ColorMatrix base = pair.d.scheme.colors();
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pos(0, 15);
  std::uniform_int_distribution<int> color(0, 7);
  for (int trial = 0; trial < 100; ++trial) {
    ColorMatrix mutated = base;
    int u = pos(rng), v = pos(rng), c = color(rng);
    if (c == mutated(u, v)) c = (c + 1) % 8;
    mutated(u, v) = c;
    bool rejected = false;
    try {
      AssociationScheme::from_colors(mutated);
    } catch (const AxiomError&) {
      rejected = true;
    }
    require(rejected, "mutation " + std::to_string(trial) + " was accepted");
  }

  // Byte-identical serialization round trip for both variants.
  for (const BuiltScheme* built : {&pair.d, &pair.q}) {
    std::string text = to_scm_string(built->scheme, built->meta);
    std::istringstream in(text);
    LoadedScheme loaded = read_scm(in);
    require(loaded.scheme == built->scheme, "round trip changed the scheme");
    require(to_scm_string(loaded.scheme, loaded.meta) == text, "round trip is not byte-identical");
  }

  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  require(seconds < 60.0, "property suite took " + std::to_string(seconds) + "s, limit 60s");
}

}  // namespace

int main() {
  criterion(1, "construction validity for q in {3,7,11,19,23}", check_criterion_1);
  criterion(2, "structure constants match the closed-form product rules", check_criterion_2);
  criterion(3, "character tables, multiplicities, and grid identity", check_criterion_3);
  criterion(4, "Frobenius-Schur indicators and symmetric census sums", check_criterion_4);
  criterion(5, "degree-2 representations are homomorphisms with the right traces",
            check_criterion_5);
  criterion(6, "rational algebra blocks: full matrix algebra vs division quaternions",
            check_criterion_6);
  criterion(7, "degenerate pair reproduces the order-8 group pair", check_criterion_7);
  criterion(8, "property suite: mutations, round trips, group self-tests", check_criterion_8);

  std::cout << "ACCEPTANCE: " << (8 - g_failures) << "/8 PASS" << std::endl;
  return g_failures;
}
