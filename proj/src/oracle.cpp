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

#include "isotree/oracle.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "isotree/decomposition.hpp"
#include "isotree/error.hpp"
#include "isotree/format.hpp"
#include "isotree/glue.hpp"
#include "isotree/profile.hpp"
#include "isotree/stem.hpp"

namespace isotree {

std::vector<Domain> enumerate_domains(int d, int k) {
  if (d < 2 || k < 1) throw Error(ErrorCode::kBadParameter, "need d >= 2 and k >= 1");
  std::vector<Domain> out;
  for (FiniteTree& t : enumerate_trees(k, d)) out.emplace_back(std::move(t), d);
  return out;
}

BruteProfile brute_profile(int d, int k) {
  std::vector<Domain> all = enumerate_domains(d, k);
  BruteProfile result;
  result.min_boundary = k + 1;
  for (Domain& dom : all) {
    std::int64_t b = 0;
    for (Vertex v = 0; v < dom.size(); ++v) b += dom.on_boundary(v) ? 1 : 0;
    if (b < result.min_boundary) {
      result.min_boundary = b;
      result.minimizers.clear();
    }
    if (b == result.min_boundary) result.minimizers.push_back(std::move(dom));
  }
  return result;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed == 0; });
}

namespace {

class Ledger {
 public:
  explicit Ledger(std::vector<std::string> names) {
    for (auto& n : names) {
      index_[n] = results_.size();
      results_.push_back(CheckResult{.name = std::move(n), .passed = 0, .failed = 0, .counterexample = {}, .first_failure = {}});
    }
  }

  void record(const std::string& name, bool ok, const Domain& dom, const std::string& why) {
    CheckResult& c = results_.at(index_.at(name));
    if (ok) {
      ++c.passed;
      return;
    }
    ++c.failed;
    if (!c.counterexample) {
      c.counterexample = write_domain(dom);
      c.first_failure = why;
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<CheckResult> results_;
};

const std::vector<std::string> kCheckNames = {
    "outer_boundary",  "lower_bound", "tau_closed_form", "tau_bounds",
    "optimality",      "full_equivalences", "minimizer_fullness", "decomposition",
    "stem",            "round_trip",  "embedding",
};

// Outer boundary of the embedded image, found by expanding T_d addresses.
struct OuterCheck {
  std::int64_t size = 0;
  bool unique_neighbor = true;
  bool independent = true;
};

OuterCheck expand_outer(const Domain& dom, const std::vector<TdAddress>& addr) {
  std::set<TdAddress> inside(addr.begin(), addr.end());
  std::set<TdAddress> outer;
  for (const TdAddress& a : addr) {
    for (TdAddress& y : td_neighbors(a, dom.d())) {
      if (!inside.count(y)) outer.insert(std::move(y));
    }
  }
  OuterCheck r;
  r.size = static_cast<std::int64_t>(outer.size());
  for (const TdAddress& y : outer) {
    int in_d = 0;
    for (const TdAddress& z : td_neighbors(y, dom.d())) {
      if (inside.count(z)) ++in_d;
      if (outer.count(z)) r.independent = false;
    }
    if (in_d != 1) r.unique_neighbor = false;
  }
  return r;
}

bool extends_by_one_digit(const TdAddress& shorter, const TdAddress& longer) {
  return longer.size() == shorter.size() + 1 &&
         std::equal(shorter.begin(), shorter.end(), longer.begin());
}

void check_domain(const Domain& dom, std::int64_t brute_min, Ledger& ledger) {
  const int d = dom.d();
  const std::int64_t n = dom.size();
  const FiniteTree& t = dom.tree();
  const BoundaryReport r = boundary_report(dom);
  const std::int64_t nb = r.boundary.size();

  const std::vector<TdAddress> addr = embed_in_Td(dom);
  {
    std::set<TdAddress> distinct(addr.begin(), addr.end());
    bool ok = static_cast<std::int64_t>(distinct.size()) == n;
    for (const auto& [u, v] : t.edges()) {
      ok = ok && (extends_by_one_digit(addr[u], addr[v]) || extends_by_one_digit(addr[v], addr[u]));
    }
    ledger.record("embedding", ok, dom, "embedding is not an injective tree map");
  }
  {
    std::int64_t missing = 0;
    for (Vertex v : r.boundary) missing += d - dom.degree(v);
    const OuterCheck outer = expand_outer(dom, addr);
    const bool ok = outer.size == (d - 2) * n + 2 && missing == outer.size &&
                    r.outer_size == outer.size && r.edge_boundary_size == outer.size &&
                    outer.unique_neighbor && outer.independent;
    ledger.record("outer_boundary", ok, dom, "outer boundary identity");
  }

  const std::int64_t profile = profile_value(d, n);
  const bool minimal = nb == brute_min;
  if (n == 1) {
    ledger.record("optimality", minimal && nb == profile && is_optimal(dom) && !r.tau, dom,
                  "singleton optimality");
    return;
  }

  ledger.record("lower_bound", (d - 1) * nb >= (d - 2) * n + 2, dom, "lower bound");

  const std::int64_t tau = *r.tau;
  {
    std::int64_t over_residual = 0;
    for (Vertex x : r.residual) over_residual += dom.degree(x) - 1;
    ledger.record("tau_closed_form", tau == tau_closed(dom) && tau == over_residual, dom,
                  "tau definition vs closed form");
  }
  {
    const bool all_boundary = nb == n;
    const bool ok = r.residual.size() <= tau && tau <= n - 2 && ((tau == n - 2) == all_boundary);
    ledger.record("tau_bounds", ok, dom, "|R| <= tau <= |D|-2");
  }
  {
    const bool by_tau = tau <= d - 2;
    const bool ok = by_tau == (nb == profile) && by_tau == minimal && by_tau == is_optimal(dom);
    ledger.record("optimality", ok, dom, "optimality criterion disagreement");
  }
  if (n >= 3) {
    bool ok = check_full_equivalences(dom);
    if ((n - 2) % (d - 1) == 0) ok = ok && (is_optimal(dom) == r.full);
    ledger.record("full_equivalences", ok, dom, "full-domain characterizations disagree");
  }
  if (minimal && n >= 2) {
    bool ok = true;
    if ((n - 2) % (d - 1) == 0) {
      ok = r.full;
    } else if (n >= d + 1) {
      ok = !r.full;
    }
    ledger.record("minimizer_fullness", ok, dom, "minimizer fullness vs |D| mod (d-1)");
  }

  const Decomposition dec = full_components(dom);
  const int m = static_cast<int>(dec.components.size());
  {
    bool ok = m <= tau + 1 && (!r.full || m == 1) && (!is_optimal(dom) || m <= d - 1) &&
              dec.residual == r.residual;
    std::vector<int> cover(n, 0);
    for (Vertex x : r.residual) ++cover[x];
    for (int i = 0; i < m; ++i) {
      const FullPart& part = dec.full_parts[i];
      ok = ok && is_full(part.domain);
      for (Vertex local = 0; local < part.domain.size(); ++local) {
        const Vertex host = part.to_host[local];
        if (dec.components[i].contains(host)) {
          ok = ok && part.domain.degree(local) == dom.degree(host);
        }
      }
      for (Vertex v : dec.components[i]) ++cover[v];
    }
    ok = ok && std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
    std::vector<Vertex> core;
    for (Vertex x : r.residual) {
      const auto nb_x = t.neighbors(x);
      const auto in_r = std::count_if(nb_x.begin(), nb_x.end(), [&](Vertex y) { return r.residual.contains(y); });
      if (in_r == dom.degree(x)) core.push_back(x);
    }
    ok = ok && dec.residual_core == VertexSet(std::move(core));
    ledger.record("decomposition", ok, dom, "canonical decomposition");
  }
  {
    const StemDiagram& sd = dec.stem.diagram;
    const auto& rho = dec.stem.projection;
    bool ok = true;
    try {
      const StemCounts counts = validate_stem(sd, d);
      ok = counts.tau_star == tau && tau_star(sd) == tau && counts.m == m;
    } catch (const Error&) {
      ok = false;
    }
    std::vector<char> hit(sd.size(), 0);
    for (Vertex v = 0; v < n; ++v) {
      hit[rho[v]] = 1;
      if (r.residual.contains(v)) {
        ok = ok && sd.is_red(rho[v]) && sd.tree().degree(rho[v]) == dom.degree(v);
      } else {
        ok = ok && sd.is_blue(rho[v]) && dec.components[rho[v]].contains(v);
      }
    }
    ok = ok && std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
    for (int i = 0; i < m; ++i) {
      int adjacent_red = 0;
      for (Vertex x : r.residual) {
        const auto nb_x = t.neighbors(x);
        if (std::any_of(nb_x.begin(), nb_x.end(), [&](Vertex y) { return dec.components[i].contains(y); })) {
          ++adjacent_red;
        }
      }
      ok = ok && sd.tree().degree(i) == adjacent_red;
    }
    ledger.record("stem", ok, dom, "stem properties");
  }
  {
    bool ok = true;
    try {
      const ReconstructionDatum datum = decompose(dom);
      const Reconstruction back = reconstruct(datum, d);
      ok = is_isomorphic(back.domain.tree(), t) &&
           reconstruct_optimal(datum, d) == is_optimal(dom) &&
           tau_closed(back.domain) == tau_star(datum.stem) &&
           is_isomorphic(stem_of(back.domain).diagram, datum.stem);
      std::vector<Vertex> red_images;
      for (Vertex x : datum.stem.red()) red_images.push_back(back.red_image[x]);
      ok = ok && boundary_report(back.domain).residual == VertexSet(std::move(red_images));
    } catch (const Error&) {
      ok = false;
    }
    ledger.record("round_trip", ok, dom, "reconstruct(decompose(D)) != D");
  }
}

}  // namespace

VerificationReport verify_suite(int d, int k_max) {
  if (d < 2 || k_max < 2) throw Error(ErrorCode::kBadParameter, "need d >= 2 and k_max >= 2");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.d = d;
  report.k_max = k_max;
  Ledger ledger(kCheckNames);
  for (int k = 1; k <= k_max; ++k) {
    const BruteProfile brute = brute_profile(d, k);
    for (const Domain& dom : enumerate_domains(d, k)) {
      ++report.domains;
      check_domain(dom, brute.min_boundary, ledger);
    }
  }
  report.checks = ledger.take();
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  out << "verify d=" << report.d << " kmax=" << report.k_max << " domains=" << report.domains
      << " elapsed_ms=" << report.elapsed.count() << '\n';
  out << std::left << std::setw(20) << "check" << std::right << std::setw(10) << "passed"
      << std::setw(10) << "failed" << "  status\n";
  for (const CheckResult& c : report.checks) {
    out << std::left << std::setw(20) << c.name << std::right << std::setw(10) << c.passed
        << std::setw(10) << c.failed << "  " << (c.failed == 0 ? "PASS" : "FAIL") << '\n';
  }
  for (const CheckResult& c : report.checks) {
    if (c.counterexample) {
      out << "counterexample for " << c.name << " (" << c.first_failure << "):\n"
          << *c.counterexample;
    }
  }
  out << (report.all_passed() ? "all checks passed" : "FAILURES present") << '\n';
  return out.str();
}

std::string report_jsonl(const VerificationReport& report) {
  std::string out;
  for (const CheckResult& c : report.checks) {
    nlohmann::json rec = {
        {"d", report.d},         {"k_max", report.k_max}, {"check", c.name},
        {"passed", c.passed},    {"failed", c.failed},    {"elapsed_ms", report.elapsed.count()},
    };
    if (c.counterexample) {
      rec["counterexample"] = *c.counterexample;
      rec["reason"] = c.first_failure;
    }
    out += rec.dump();
    out.push_back('\n');
  }
  return out;
}

}  // namespace isotree
