// Command-line front end: generate rank-3 inputs, build the D/Q pair, verify
// scheme files, and run the full certification report.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dqpair/report.hpp"

namespace {

using namespace dqpair;

void write_scheme_output(const std::string& path, const AssociationScheme& s,
                         const SchemeMeta& meta) {
  if (path == "-") {
    write_scm(std::cout, s, meta);
    return;
  }
  write_scm_file(path, s, meta);
}

Rank3Input load_rank3(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw FormatError("cannot open input file '" + path + "'");
  std::string tag;
  probe >> tag;
  probe.close();
  if (tag == "hadamard") return skew_hadamard_to_rank3(read_had_file(path));
  return validate_rank3(read_scm_file(path).scheme);
}

SchemeMeta rank3_meta(const Rank3Input& r) {
  SchemeMeta meta;
  meta.variant = SchemeMeta::Variant::rank3;
  meta.params = {{"n", r.n}, {"a", r.a}, {"b", r.b}};
  meta.labels = {"A0", "A1", "A2"};
  return meta;
}

int cmd_gen_rank3(long paley_q, const std::string& hadamard_path, const std::string& out) {
  Rank3Input r = hadamard_path.empty() ? paley_tournament(paley_q)
                                       : skew_hadamard_to_rank3(read_had_file(hadamard_path));
  write_scheme_output(out, r.scheme, rank3_meta(r));
  return kExitPass;
}

int cmd_build(const std::string& variant, bool degenerate, const std::string& input,
              const std::string& stem) {
  const bool want_d = variant == "D" || variant == "both";
  const bool want_q = variant == "Q" || variant == "both";
  if (!want_d && !want_q)
    throw ParameterError("variant must be D, Q, or both; got '" + variant + "'");
  if (stem == "-" && want_d && want_q)
    throw ParameterError("streaming output supports a single variant");

  std::optional<Rank3Input> source;
  if (!degenerate) source = load_rank3(input);

  auto emit = [&](Variant v, const char* suffix) {
    BuiltScheme built = degenerate ? build_degenerate(v) : build_variant(v, *source);
    const std::string path = stem == "-" ? stem : stem + suffix;
    write_scheme_output(path, built.scheme, built.meta);
    if (stem != "-") std::cerr << "wrote " << path << "\n";
  };
  if (want_d) emit(Variant::D, ".D.scm");
  if (want_q) emit(Variant::Q, ".Q.scm");
  return kExitPass;
}

int cmd_verify(const std::string& path) {
  LoadedScheme loaded = read_scm_file(path);
  const AssociationScheme& s = loaded.scheme;
  std::cout << "order: " << s.order() << "\n";
  std::cout << "rank: " << s.rank() << "\n";
  std::cout << "valencies:";
  for (long v : s.valencies().n) std::cout << " " << v;
  std::cout << "\n";
  std::cout << "symmetric_relations: " << symmetric_relation_count(s) << "\n";
  std::cout << "commutative: " << (s.structure().commutative() ? "yes" : "no") << "\n";
  return kExitPass;
}

int cmd_report(long paley_q, const std::string& input, bool degenerate) {
  ReportInput ri;
  if (degenerate) {
    ri.kind = ReportInput::Kind::degenerate;
  } else if (!input.empty()) {
    ri.kind = ReportInput::Kind::file;
    ri.path = input;
  } else {
    ri.kind = ReportInput::Kind::paley;
    ri.q = paley_q;
  }
  RunReport report = run_report(ri);
  print_report(std::cout, report);
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and exactly verify the paired rank-8 association schemes D and Q"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen-rank3", "generate or import a rank-3 tournament scheme");
  long gen_q = 0;
  std::string gen_had, gen_out;
  auto* gen_paley = gen->add_option("--paley", gen_q, "Paley tournament on q points (prime, 3 mod 4)");
  auto* gen_hada = gen->add_option("--hadamard", gen_had, "convert a skew-Hadamard .had file");
  gen->add_option("-o,--output", gen_out, "output .scm path, or - for stdout")->required();
  gen_paley->excludes(gen_hada);

  auto* build = app.add_subcommand("build", "build the order-4n schemes from a rank-3 input");
  std::string build_variant = "both", build_input, build_stem;
  bool build_degen = false;
  build->add_option("--variant", build_variant, "D, Q, or both")->check(CLI::IsMember({"D", "Q", "both"}));
  auto* build_in = build->add_option("--input", build_input, "rank-3 .scm or skew-Hadamard .had file");
  auto* build_dg = build->add_flag("--degenerate", build_degen, "use the a=1 degenerate input");
  build->add_option("-o,--output", build_stem, "output stem (<stem>.D.scm / <stem>.Q.scm), or -")
      ->required();
  build_in->excludes(build_dg);

  auto* verify = app.add_subcommand("verify", "validate a scheme file and print its profile");
  std::string verify_path;
  verify->add_option("file", verify_path, ".scm file")->required();

  auto* report = app.add_subcommand("report", "full construction + certification report");
  long report_q = 0;
  std::string report_input;
  bool report_degen = false;
  auto* report_paley = report->add_option("--paley", report_q, "Paley tournament parameter");
  auto* report_in = report->add_option("--input", report_input, "rank-3 .scm or .had file");
  auto* report_dg = report->add_flag("--degenerate", report_degen, "a=1 degenerate pair");
  report_paley->excludes(report_in);
  report_paley->excludes(report_dg);
  report_in->excludes(report_dg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return dqpair::kExitParameter;
  }

  try {
    if (gen->parsed()) {
      if (gen_had.empty() && gen_paley->count() == 0)
        throw dqpair::ParameterError("gen-rank3 requires --paley or --hadamard");
      return cmd_gen_rank3(gen_q, gen_had, gen_out);
    }
    if (build->parsed()) {
      if (!build_degen && build_input.empty())
        throw dqpair::ParameterError("build requires --input or --degenerate");
      return cmd_build(build_variant, build_degen, build_input, build_stem);
    }
    if (verify->parsed()) return cmd_verify(verify_path);
    if (report->parsed()) {
      if (!report_degen && report_input.empty() && report_paley->count() == 0)
        throw dqpair::ParameterError("report requires --paley, --input, or --degenerate");
      return cmd_report(report_q, report_input, report_degen);
    }
  } catch (const dqpair::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return dqpair::kExitParameter;
  } catch (const dqpair::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return dqpair::kExitParameter;
  } catch (const dqpair::InputCertError& e) {
    std::cerr << "input certification failed: " << e.what() << "\n";
    return dqpair::kExitInputCert;
  } catch (const dqpair::AxiomError& e) {
    std::cerr << "scheme axiom failure: " << e.what() << "\n";
    return dqpair::kExitAxiom;
  } catch (const dqpair::FormatError& e) {
    std::cerr << "file format error: " << e.what() << "\n";
    return dqpair::kExitAxiom;
  } catch (const dqpair::CertError& e) {
    std::cerr << "certification failed: " << e.what() << "\n";
    return dqpair::kExitCert;
  } catch (const dqpair::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
