// Copyright 2026 The isotree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// isotree: command-line front end.
//
// Exit status: 0 on success, 1 when an input file or datum is rejected
// (or a verification check fails), 2 on usage errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "isotree/decomposition.hpp"
#include "isotree/error.hpp"
#include "isotree/format.hpp"
#include "isotree/glue.hpp"
#include "isotree/oracle.hpp"
#include "isotree/profile.hpp"
#include "isotree/stem.hpp"

namespace {

using namespace isotree;

constexpr int kUsageError = 2;
constexpr int kDataError = 1;
constexpr int kDefaultBudget = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Largest enumeration size (in vertices) the CLI accepts.
int enumeration_budget() {
  if (const char* env = std::getenv("ISOTREE_BUDGET")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("ISOTREE_BUDGET must be an integer");
    }
  }
  return kDefaultBudget;
}

void check_budget(int vertices) {
  const int budget = enumeration_budget();
  if (vertices > budget) {
    throw UsageError("enumeration over " + std::to_string(vertices) +
                     " vertices exceeds the budget of " + std::to_string(budget) +
                     " (set ISOTREE_BUDGET to raise it)");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParseError, "cannot write " + out_path);
  out << text;
}

std::string ratio(std::int64_t num, std::int64_t den) {
  Rational r(num, den);
  std::ostringstream s;
  s << r.numerator() << '/' << r.denominator();
  return s.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_profile(int d, int kmax) {
  std::cout << "k I_" << d << "(k) ratio\n";
  for (int k = 1; k <= kmax; ++k) {
    const std::int64_t value = profile_value(d, k);
    std::cout << k << ' ' << value << ' ' << ratio(value, k) << '\n';
  }
  const CheegerValues c = cheeger(d);
  std::cout << "cheeger h_in=" << c.h_in.numerator() << '/' << c.h_in.denominator()
            << " h_out=" << c.h_out << " h_edge=" << c.h_edge << '\n';
  return 0;
}

int cmd_witness(int d, int k, const std::string& out) {
  const Domain w = witness(d, k);
  emit(write_domain(w), out);
  if (!out.empty()) {
    std::cout << "size=" << w.size() << " boundary=" << boundary_report(w).boundary.size()
              << " profile=" << profile_value(d, k) << '\n';
  }
  return 0;
}

int cmd_analyze(const std::string& file) {
  const Domain dom = parse_domain(read_file(file));
  const BoundaryReport r = boundary_report(dom);
  std::cout << "size=" << dom.size() << " boundary=" << r.boundary.size()
            << " tau=" << (r.tau ? std::to_string(*r.tau) : "undefined")
            << " optimal=" << yes_no(is_optimal(dom)) << '\n';
  std::cout << "d=" << dom.d() << " leaves=" << r.leaves.size() << " residual=" << r.residual.size()
            << " outer=" << r.outer_size << " edge_boundary=" << r.edge_boundary_size
            << " full=" << yes_no(r.full) << " profile=" << profile_value(dom.d(), dom.size())
            << '\n';
  if (dom.size() < 2) {
    std::cout << "components=undefined stem=undefined\n";
    return 0;
  }
  const Decomposition dec = full_components(dom);
  const StemCounts c = validate_stem(dec.stem.diagram, dom.d());
  std::cout << "components=" << dec.components.size() << " stem r=" << c.r << " m=" << c.m
            << " l=" << c.l << " tau*=" << c.tau_star << '\n';
  return 0;
}

int cmd_decompose(const std::string& file, const std::string& out) {
  const Domain dom = parse_domain(read_file(file));
  emit(write_datum(decompose(dom), dom.d()), out);
  return 0;
}

int cmd_stems(int tau_max, std::optional<int> d, const std::string& out_dir) {
  check_budget(2 * tau_max + 1);
  const auto stems = enumerate_stems(tau_max, d);
  std::map<int, int> counts;
  for (int t = 0; t <= tau_max; ++t) counts[t] = 0;
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  for (const StemDiagram& sd : stems) {
    const int t = tau_star(sd);
    const int idx = counts[t]++;
    if (!out_dir.empty()) {
      emit(write_stem(sd), (std::filesystem::path(out_dir) /
                            ("stem_t" + std::to_string(t) + "_" + std::to_string(idx) + ".txt"))
                               .string());
    }
  }
  bool first = true;
  for (const auto& [t, count] : counts) {
    std::cout << (first ? "" : " ") << t << ':' << count;
    first = false;
  }
  std::cout << '\n';
  return 0;
}

int cmd_enumerate(int d, int k, const std::string& out_dir) {
  check_budget(k);
  const auto domains = enumerate_domains(d, k);
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  std::cout << "d=" << d << " k=" << k << " classes=" << domains.size()
            << " profile=" << profile_value(d, k) << '\n';
  for (std::size_t i = 0; i < domains.size(); ++i) {
    const Domain& dom = domains[i];
    const BoundaryReport r = boundary_report(dom);
    std::cout << i << " boundary=" << r.boundary.size()
              << " tau=" << (r.tau ? std::to_string(*r.tau) : "undefined")
              << " full=" << yes_no(r.full) << " optimal=" << yes_no(is_optimal(dom)) << '\n';
    if (!out_dir.empty()) {
      emit(write_domain(dom),
           (std::filesystem::path(out_dir) / ("domain_" + std::to_string(i) + ".txt")).string());
    }
  }
  return 0;
}

int cmd_reconstruct(const std::string& file, const std::string& out) {
  const DatumFile df = parse_datum(read_file(file));
  const Reconstruction rec = reconstruct(df.datum, df.d);
  emit(write_domain(rec.domain), out);
  if (!out.empty()) {
    std::cout << "size=" << rec.domain.size() << " tau=" << tau_star(df.datum.stem)
              << " optimal=" << yes_no(reconstruct_optimal(df.datum, df.d)) << '\n';
  }
  return 0;
}

int cmd_verify(int d, int kmax, const std::string& jsonl) {
  check_budget(kmax);
  const VerificationReport report = verify_suite(d, kmax);
  std::cout << format_report(report);
  if (!jsonl.empty()) emit(report_jsonl(report), jsonl);
  return report.all_passed() ? 0 : kDataError;
}

int cmd_export_dot(const std::string& file, const std::string& out) {
  const std::string text = read_file(file);
  switch (detect_kind(text)) {
    case FileKind::kDomain:
      emit(domain_to_dot(parse_domain(text)), out);
      return 0;
    case FileKind::kStem:
      emit(stem_to_dot(parse_stem(text)), out);
      return 0;
    default:
      throw Error(ErrorCode::kParseError, "line 1: expected a domain or stem header");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact inner vertex-isoperimetry on the d-regular tree"};
  app.require_subcommand(1);

  int d = 3;
  int k = 1;
  int kmax = 12;
  int tau_max = 3;
  std::optional<int> stem_d;
  std::string file;
  std::string out;
  std::string out_dir;
  std::string jsonl;

  auto* profile = app.add_subcommand("profile", "Print I_d(k) for k = 1..kmax");
  profile->add_option("--d", d, "Ambient degree")->required()->check(CLI::Range(2, 1 << 20));
  profile->add_option("--kmax", kmax, "Largest size")->required()->check(CLI::Range(1, 1 << 24));

  auto* witness_cmd = app.add_subcommand("witness", "Write an optimal domain of size k");
  witness_cmd->add_option("--d", d, "Ambient degree")->required()->check(CLI::Range(2, 1 << 20));
  witness_cmd->add_option("--k", k, "Domain size")->required()->check(CLI::Range(1, 1 << 24));
  witness_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* analyze = app.add_subcommand("analyze", "Report boundary, tau, optimality and stem");
  analyze->add_option("file", file, "Domain file")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Write the reconstruction datum of a domain");
  decompose_cmd->add_option("file", file, "Domain file")->required();
  decompose_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* stems = app.add_subcommand("stems", "Enumerate stem diagrams with tau* <= T");
  stems->add_option("--tau-max", tau_max, "Largest tau*")->required()->check(CLI::Range(0, 64));
  stems->add_option("--d", stem_d, "Ambient degree bounding red degrees")->check(CLI::Range(2, 1 << 20));
  stems->add_option("--out-dir", out_dir, "Write one stem file per diagram here");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate domains of size k up to isomorphism");
  enumerate->add_option("--d", d, "Ambient degree")->required()->check(CLI::Range(2, 1 << 20));
  enumerate->add_option("--k", k, "Domain size")->required()->check(CLI::Range(1, 1 << 20));
  enumerate->add_option("--out-dir", out_dir, "Write one domain file per class here");

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Rebuild a domain from a datum file");
  reconstruct_cmd->add_option("file", file, "Datum file")->required();
  reconstruct_cmd->add_option("--out", out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Brute-force verification sweep");
  verify->add_option("--d", d, "Ambient degree")->required()->check(CLI::Range(2, 1 << 20));
  verify->add_option("--kmax", kmax, "Largest domain size")->required()->check(CLI::Range(2, 1 << 20));
  verify->add_option("--jsonl", jsonl, "Also write line-delimited JSON records here");

  auto* dot = app.add_subcommand("export-dot", "Render a domain or stem file as Graphviz DOT");
  dot->add_option("file", file, "Domain or stem file")->required();
  dot->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*profile) return cmd_profile(d, kmax);
    if (*witness_cmd) return cmd_witness(d, k, out);
    if (*analyze) return cmd_analyze(file);
    if (*decompose_cmd) return cmd_decompose(file, out);
    if (*stems) return cmd_stems(tau_max, stem_d, out_dir);
    if (*enumerate) return cmd_enumerate(d, k, out_dir);
    if (*reconstruct_cmd) return cmd_reconstruct(file, out);
    if (*verify) return cmd_verify(d, kmax, jsonl);
    if (*dot) return cmd_export_dot(file, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kBadParameter ? kUsageError : kDataError;
  }
  return kUsageError;
}
