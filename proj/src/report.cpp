#include "dqpair/report.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace dqpair {

namespace {

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string join_rats(const std::vector<Rat>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

VariantReport make_variant_report(Variant v, const BuiltScheme& built, bool degenerate) {
  const long a = built.meta.params.at("a");
  const long b = built.meta.params.at("b");

  VariantReport r{built,
                  built.scheme.valencies().n,
                  symmetric_relation_count(built.scheme),
                  built.scheme.structure().commutative(),
                  false,
                  closed_form_table(v, a),
                  Certificate(""),
                  {},
                  Certificate(""),
                  Degree2Certificate{Certificate(""), {}, std::nullopt},
                  "",
                  {}};

  StructureConstants expect = expected_structure_constants(v, a, b);
  r.constants_match_closed_form = expect.p == built.scheme.structure().p &&
                                  expect.transpose_map == built.scheme.structure().transpose_map;

  r.table_cert = verify_table(built.scheme, built.meta, r.table);
  r.indicators = fs_indicators(built.scheme, r.table);
  r.fs_cert = fs_sum_check(built.scheme, r.table);
  r.degree2 = certify_degree2_block(v, rep_degree2(v, a), a);
  if (r.degree2.cert.ok()) r.algebra = algebra_line(algebra_summary(v, r.table, r.degree2));
  if (degenerate) r.thin = thin_group_profile(built.scheme);
  return r;
}

}  // namespace

bool VariantReport::pass() const {
  return constants_match_closed_form && table_cert.ok() && fs_cert.ok() && degree2.cert.ok();
}

RunReport run_report(const ReportInput& input) {
  RunReport report;

  std::optional<Rank3Input> source;
  if (input.kind == ReportInput::Kind::degenerate) {
    report.degenerate = true;
    report.n = 2;
    report.a = 1;
    report.b = 0;
    report.input_desc = "degenerate (a=1, empty tournament)";
  } else if (input.kind == ReportInput::Kind::paley) {
    source = paley_tournament(input.q);
    report.input_desc = "paley q=" + std::to_string(input.q);
  } else {
    source = [&] {
      std::ifstream probe(input.path);
      if (!probe) throw FormatError("cannot open input file '" + input.path + "'");
      std::string tag;
      probe >> tag;
      probe.close();
      if (tag == "hadamard") return skew_hadamard_to_rank3(read_had_file(input.path));
      return validate_rank3(read_scm_file(input.path).scheme);
    }();
    report.input_desc = "file " + input.path;
  }
  if (source) {
    report.n = source->n;
    report.a = source->a;
    report.b = source->b;
  }

  BuiltScheme built_d = report.degenerate ? build_degenerate(Variant::D) : build_D(*source);
  BuiltScheme built_q = report.degenerate ? build_degenerate(Variant::Q) : build_Q(*source);
  report.d = make_variant_report(Variant::D, built_d, report.degenerate);
  report.q = make_variant_report(Variant::Q, built_q, report.degenerate);

  report.tables_identical = report.d->table.values == report.q->table.values;
  report.indicators_differ_in_last = report.d->indicators.size() == 5 &&
                                     report.q->indicators.size() == 5;
  for (Index i = 0; i < 4 && report.indicators_differ_in_last; ++i)
    if (report.d->indicators[i] != report.q->indicators[i])
      report.indicators_differ_in_last = false;
  if (report.indicators_differ_in_last)
    report.indicators_differ_in_last =
        report.d->indicators[4] == Rat(1) && report.q->indicators[4] == Rat(-1);

  report.pass = report.d->pass() && report.q->pass() && report.tables_identical &&
                report.indicators_differ_in_last;
  report.exit_code = report.pass ? kExitPass : kExitCert;
  return report;
}

void print_report(std::ostream& os, const RunReport& r) {
  os << "input: " << r.input_desc << " (n=" << r.n << ", a=" << r.a << ", b=" << r.b << ")\n";
  for (const auto* vr : {&r.d, &r.q}) {
    if (!vr->has_value()) continue;
    const VariantReport& v = **vr;
    const char* tag = v.built.meta.variant == SchemeMeta::Variant::D ? "D" : "Q";
    os << "\n[" << tag << "] order=" << v.built.scheme.order() << " rank=" << v.built.scheme.rank()
       << " valencies=" << join_longs(v.valencies) << "\n";
    os << "[" << tag << "] symmetric_relations=" << v.symmetric_relations
       << " commutative=" << (v.commutative ? "yes" : "no") << "\n";
    os << "[" << tag << "] structure constants match closed form: "
       << (v.constants_match_closed_form ? "ok" : "FAIL") << "\n";
    os << "[" << tag << "] character table:\n" << table_tsv(v.table);
    os << "[" << tag << "] table certificate: " << (v.table_cert.ok() ? "ok" : "FAIL") << "\n";
    if (!v.table_cert.ok()) os << v.table_cert.summary();
    os << "[" << tag << "] indicators: " << join_rats(v.indicators) << "\n";
    os << "[" << tag << "] indicator sum check: " << (v.fs_cert.ok() ? "ok" : "FAIL") << "\n";
    if (!v.fs_cert.ok()) os << v.fs_cert.summary();
    os << "[" << tag << "] degree-2 block: " << (v.degree2.cert.ok() ? "ok" : "FAIL") << "\n";
    if (!v.degree2.cert.ok()) os << v.degree2.cert.summary();
    if (!v.algebra.empty()) os << "[" << tag << "] " << v.algebra << "\n";
    if (v.thin.is_thin) {
      int involutions = 0;
      for (int o : v.thin.element_orders)
        if (o == 2) ++involutions;
      os << "[" << tag << "] thin group: element orders " << join_ints(v.thin.element_orders)
         << " (" << involutions << " involutions)\n";
    }
  }
  os << "\ntables-identical: " << (r.tables_identical ? "yes" : "NO") << "\n";
  os << "indicators-differ-in-last: " << (r.indicators_differ_in_last ? "yes" : "NO") << "\n";
  os << "overall: " << (r.pass ? "PASS" : "FAIL") << "\n";
}

}  // namespace dqpair
