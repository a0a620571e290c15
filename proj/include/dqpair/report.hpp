#pragma once

#include <iosfwd>
#include <optional>

#include "dqpair/rational_algebra.hpp"
#include "dqpair/scheme_io.hpp"

namespace dqpair {

// CLI exit codes, shared by the report pipeline.
inline constexpr int kExitPass = 0;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitInputCert = 3;
inline constexpr int kExitAxiom = 4;
inline constexpr int kExitCert = 5;

struct ReportInput {
  enum class Kind { paley, file, degenerate };
  Kind kind = Kind::paley;
  long q = 0;        // paley
  std::string path;  // file (.scm or .had)
};

/// Everything the pipeline establishes for one variant.
struct VariantReport {
  BuiltScheme built;
  std::vector<long> valencies;
  Index symmetric_relations = 0;
  bool commutative = false;
  bool constants_match_closed_form = false;
  CharacterTable table;
  Certificate table_cert;
  std::vector<Rat> indicators;
  Certificate fs_cert;
  Degree2Certificate degree2;
  std::string algebra;
  ThinGroupProfile thin;

  bool pass() const;
};

struct RunReport {
  std::string input_desc;
  long n = 0, a = 0, b = 0;
  bool degenerate = false;
  std::optional<VariantReport> d, q;
  bool tables_identical = false;
  bool indicators_differ_in_last = false;
  bool pass = false;
  int exit_code = kExitPass;
};

/// Builds both variants from the given input and runs every certification.
RunReport run_report(const ReportInput& input);

void print_report(std::ostream& os, const RunReport& r);

}  // namespace dqpair
