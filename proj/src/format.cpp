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

#include "isotree/format.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

#include "isotree/error.hpp"

namespace isotree {

namespace {

constexpr std::string_view kDomainHeader = "isotree-domain v1";
constexpr std::string_view kStemHeader = "isotree-stem v1";
constexpr std::string_view kDatumHeader = "isotree-datum v1";

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  for (std::string_view tok : split(line, ' ')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

// Line cursor over a text block; `first_line` offsets reported numbers so
// that embedded blocks point into the enclosing file.
class Reader {
 public:
  Reader(std::string_view text, int first_line = 1) : first_line_(first_line) {
    lines_ = split(text, '\n');
    if (!lines_.empty() && lines_.back().empty()) lines_.pop_back();
  }

  bool done() const { return pos_ >= lines_.size(); }
  int line_number() const { return first_line_ + static_cast<int>(pos_); }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line_number()) + ": " + what);
  }

  std::string_view peek() const {
    if (done()) fail("unexpected end of input");
    return lines_[pos_];
  }
  std::string_view next() {
    std::string_view line = peek();
    ++pos_;
    return line;
  }

  void expect(std::string_view exact) {
    if (peek() != exact) fail("expected '" + std::string(exact) + "'");
    ++pos_;
  }

  int parse_int(std::string_view tok, int lo, int hi) const {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail("'" + std::string(tok) + "' is not an integer");
    }
    if (value < lo || value > hi) {
      fail(std::string(tok) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return value;
  }

  // `<keyword> <int>`
  int keyed_int(std::string_view keyword, int lo, int hi) {
    auto tok = tokens(peek());
    if (tok.size() != 2 || tok[0] != keyword) fail("expected '" + std::string(keyword) + " <int>'");
    int value = parse_int(tok[1], lo, hi);
    ++pos_;
    return value;
  }

  std::vector<Edge> edges(int n) {
    std::vector<Edge> out;
    for (int i = 0; i + 1 < n; ++i) {
      auto tok = tokens(peek());
      if (tok.size() != 3 || tok[0] != "e") fail("expected 'e <u> <v>'");
      out.emplace_back(parse_int(tok[1], 0, n - 1), parse_int(tok[2], 0, n - 1));
      ++pos_;
    }
    return out;
  }

  // Lines up to the matching lone "}", returned with the line number of the
  // first one.
  std::pair<std::string, int> block() {
    const int start = line_number();
    std::string body;
    while (peek() != "}") {
      body += next();
      body.push_back('\n');
    }
    ++pos_;
    return {body, start};
  }

  void expect_end() const {
    if (!done()) fail("trailing content");
  }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
  int first_line_;
};

constexpr int kMaxInt = std::numeric_limits<int>::max();

Domain read_domain(Reader& in) {
  in.expect(kDomainHeader);
  const int d = in.keyed_int("d", 2, kMaxInt);
  const int n = in.keyed_int("n", 1, kMaxInt);
  std::vector<Edge> edges = in.edges(n);
  return Domain(FiniteTree(n, std::move(edges)), d);
}

StemDiagram read_stem(Reader& in) {
  in.expect(kStemHeader);
  const int n = in.keyed_int("n", 1, kMaxInt);
  std::vector<int> color(n, -1);
  for (auto [keyword, value] : {std::pair{"red", Color::kRed}, std::pair{"blue", Color::kBlue}}) {
    auto tok = tokens(in.peek());
    if (tok.empty() || tok[0] != keyword) in.fail("expected '" + std::string(keyword) + " <ids...>'");
    for (std::size_t i = 1; i < tok.size(); ++i) {
      const int v = in.parse_int(tok[i], 0, n - 1);
      if (color[v] >= 0) in.fail("vertex " + std::to_string(v) + " colored twice");
      color[v] = static_cast<int>(value);
    }
    if (value == Color::kBlue) {
      for (int v = 0; v < n; ++v) {
        if (color[v] < 0) in.fail("vertex " + std::to_string(v) + " has no color");
      }
    }
    in.next();
  }
  std::vector<Color> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = static_cast<Color>(color[v]);
  std::vector<Edge> edges = in.edges(n);
  return StemDiagram(FiniteTree(n, std::move(edges)), std::move(colors));
}

void write_edges(std::ostringstream& out, const FiniteTree& t) {
  for (const auto& [u, v] : t.edges()) out << "e " << u << ' ' << v << '\n';
}

}  // namespace

FileKind detect_kind(std::string_view text) {
  std::string_view first = text.substr(0, text.find('\n'));
  if (first == kDomainHeader) return FileKind::kDomain;
  if (first == kStemHeader) return FileKind::kStem;
  if (first == kDatumHeader) return FileKind::kDatum;
  return FileKind::kUnknown;
}

std::string write_domain(const Domain& dom) {
  std::ostringstream out;
  out << kDomainHeader << '\n' << "d " << dom.d() << '\n' << "n " << dom.size() << '\n';
  write_edges(out, dom.tree());
  return out.str();
}

Domain parse_domain(std::string_view text) {
  Reader in(text);
  Domain dom = read_domain(in);
  in.expect_end();
  return dom;
}

std::string write_stem(const StemDiagram& sd) {
  std::ostringstream out;
  out << kStemHeader << '\n' << "n " << sd.size() << '\n' << "red";
  for (Vertex v : sd.red()) out << ' ' << v;
  out << '\n' << "blue";
  for (Vertex v : sd.blue()) out << ' ' << v;
  out << '\n';
  write_edges(out, sd.tree());
  return out.str();
}

StemDiagram parse_stem(std::string_view text) {
  Reader in(text);
  StemDiagram sd = read_stem(in);
  in.expect_end();
  return sd;
}

std::string write_datum(const ReconstructionDatum& datum, int d) {
  std::ostringstream out;
  out << kDatumHeader << '\n' << "d " << d << '\n';
  out << "stem {\n" << write_stem(datum.stem) << "}\n";
  for (std::size_t i = 0; i < datum.parts.size(); ++i) {
    out << "component " << i << " {\n" << write_domain(datum.parts[i]) << "}\n";
  }
  for (std::size_t i = 0; i < datum.glue.size(); ++i) {
    for (const auto& [x, z] : datum.glue[i]) {
      out << "glue b=" << i << " red=" << x << " leaf=" << z << '\n';
    }
  }
  return out.str();
}

DatumFile parse_datum(std::string_view text) {
  Reader in(text);
  in.expect(kDatumHeader);
  DatumFile file;
  file.d = in.keyed_int("d", 2, kMaxInt);

  in.expect("stem {");
  {
    auto [body, start] = in.block();
    Reader sub(body, start);
    file.datum.stem = read_stem(sub);
    sub.expect_end();
  }
  const int m = file.datum.stem.blue().size();
  for (int i = 0; i < m; ++i) {
    if (in.peek() != "component " + std::to_string(i) + " {") {
      in.fail("expected 'component " + std::to_string(i) + " {'");
    }
    in.next();
    auto [body, start] = in.block();
    Reader sub(body, start);
    file.datum.parts.push_back(read_domain(sub));
    sub.expect_end();
  }

  file.datum.glue.resize(m);
  const int stem_n = file.datum.stem.size();
  while (!in.done()) {
    auto tok = tokens(in.peek());
    auto field = [&](std::size_t i, std::string_view key) {
      if (i >= tok.size() || tok[i].substr(0, key.size()) != key) {
        in.fail("expected 'glue b=<i> red=<x> leaf=<z>'");
      }
      return tok[i].substr(key.size());
    };
    if (tok.size() != 4 || tok[0] != "glue") in.fail("expected 'glue b=<i> red=<x> leaf=<z>'");
    const int b = in.parse_int(field(1, "b="), 0, m - 1);
    const int x = in.parse_int(field(2, "red="), 0, stem_n - 1);
    const int z = in.parse_int(field(3, "leaf="), 0, file.datum.parts[b].size() - 1);
    if (!file.datum.glue[b].emplace(x, z).second) {
      in.fail("duplicate gluing entry for b=" + std::to_string(b) + " red=" + std::to_string(x));
    }
    in.next();
  }
  return file;
}

std::string domain_to_dot(const Domain& dom) {
  const BoundaryReport r = boundary_report(dom);
  std::ostringstream out;
  out << "graph domain {\n";
  out << "  // d=" << dom.d() << " size=" << dom.size() << " boundary=" << r.boundary.size()
      << " tau=" << (r.tau ? std::to_string(*r.tau) : "undefined") << '\n';
  out << "  node [shape=circle, label=\"\", width=0.2];\n";
  for (Vertex v = 0; v < dom.size(); ++v) {
    out << "  " << v;
    if (r.leaves.contains(v) || (dom.size() == 1)) {
      out << " [style=filled, fillcolor=gray70]";
    } else if (r.residual.contains(v)) {
      out << " [shape=doublecircle, style=filled, fillcolor=gray70]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : dom.tree().edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string stem_to_dot(const StemDiagram& sd) {
  std::ostringstream out;
  out << "graph stem {\n";
  out << "  node [shape=circle, style=filled, label=\"\", width=0.2];\n";
  for (Vertex v = 0; v < sd.size(); ++v) {
    const char* c = sd.is_red(v) ? "red" : "blue";
    out << "  " << v << " [color=" << c << ", fillcolor=" << c << "];\n";
  }
  for (const auto& [u, v] : sd.tree().edges()) {
    out << "  " << u << " -- " << v;
    if (sd.is_red(u) && sd.is_red(v)) out << " [color=red]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace isotree
