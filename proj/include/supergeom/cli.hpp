// Copyright 2026 The Supergeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command dispatch for the `supergeom` tool. Reports go to `out`,
// diagnostics to `err`. Exit codes: 0 success, 1 usage, 2 parse error
// (including unreadable input), 3 domain error.

#ifndef SUPERGEOM_CLI_HPP_
#define SUPERGEOM_CLI_HPP_

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "supergeom/dsl.hpp"
#include "supergeom/localgeom.hpp"
#include "supergeom/report.hpp"
#include "supergeom/supergroups.hpp"
#include "supergeom/supermatrix.hpp"

namespace supergeom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ErrorKind::kParseError, 0, 0, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string DimString(const std::optional<SuperDim>& d) {
  return d ? d->ToString() : "-";
}

inline std::string ReportText(const Report& r) {
  std::ostringstream os;
  os << "verdict: " << r.verdict << "\n";
  os << "dim: " << DimString(r.dim) << "\n";
  os << "tangent: " << r.tangent.ToString() << "\n";
  os << "rank: " << r.rank.ToString() << "\n";
  os << "hilbert:";
  if (r.hilbert.empty()) os << " -";
  for (int h : r.hilbert) os << " " << h;
  os << "\n";
  os << "certificate:";
  if (r.certificate.complete_intersection) os << " complete intersection";
  if (r.certificate.witness_degree) os << " witness degree " << *r.certificate.witness_degree;
  if (r.certificate.failed_generator) {
    os << (r.certificate.witness_degree ? ";" : "") << " failed generator "
       << *r.certificate.failed_generator;
  }
  if (!r.certificate.complete_intersection && !r.certificate.witness_degree &&
      !r.certificate.failed_generator) {
    os << " all generators local consequences, Hilbert function free";
  }
  os << "\norder: " << r.order << "\n";
  return os.str();
}

struct Options {
  std::string file;
  std::optional<std::string> point;
  std::optional<int> order;
  int max_degree = -1;
  bool json = false;
  bool emit = false;
  std::string group_kind;
  int group_m = 0;
  int group_n = 0;
};

// Source file plus the point (from --point or the file's `point` line).
inline std::pair<Presentation, ClosedPoint> LoadWithPoint(const Options& o) {
  SourceFile src = ParseSource(ReadFile(o.file));
  if (o.point) return {src.presentation, ParsePoint(*o.point, src.presentation.vars)};
  if (!src.point) throw UsageError("no point given: add a 'point' line or pass --point");
  return {src.presentation, *src.point};
}

inline nlohmann::json DimJson(const SuperDim& d) { return d; }

inline int RunCheck(const Options& o, std::ostream& out) {
  auto [x, p] = LoadWithPoint(o);
  const bool on = PointOnVariety(x, p);
  if (o.json) {
    out << nlohmann::json{{"on_variety", on}}.dump(2) << "\n";
  } else {
    out << "on variety: " << (on ? "true" : "false") << "\n";
  }
  return kExitOk;
}

inline int RunTangent(const Options& o, std::ostream& out) {
  auto [x, p] = LoadWithPoint(o);
  RequirePointOnVariety(x, p);
  const SuperRank rank = ComputeSuperRank(JacobianAt(x, p));
  const SuperDim tangent = TangentDim(x, p);
  if (o.json) {
    out << nlohmann::json{{"tangent", tangent}, {"rank", rank}}.dump(2) << "\n";
  } else {
    out << "tangent: " << tangent.ToString() << "\nrank: " << rank.ToString() << "\n";
  }
  return kExitOk;
}

inline int RunSmooth(const Options& o, std::ostream& out) {
  auto [x, p] = LoadWithPoint(o);
  const int order = o.order.value_or(DefaultOrder(x));
  const auto start = std::chrono::steady_clock::now();
  const SmoothnessVerdict v = SmoothTest(x, p, order);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const Report report = MakeReport(v, ms);
  if (o.json) {
    out << nlohmann::json(report).dump(2) << "\n";
  } else {
    out << ReportText(report);
  }
  return kExitOk;
}

inline int RunHilbert(const Options& o, std::ostream& out) {
  if (o.max_degree < 1) throw UsageError("--max-degree must be at least 1");
  auto [x, p] = LoadWithPoint(o);
  const TruncatedLocalRing ring = TruncatedQuotient(x, p, o.max_degree);
  if (o.json) {
    nlohmann::json split = nlohmann::json::array();
    for (int d = 0; d <= ring.order(); ++d) split.push_back(ring.HilbertSplit(d));
    out << nlohmann::json{{"hilbert", ring.HilbertTable()},
                          {"hilbert_split", split},
                          {"t", ring.TTable()},
                          {"order", ring.order()}}
               .dump(2)
        << "\n";
  } else {
    for (int d = 0; d <= ring.order(); ++d) {
      const SuperDim h = ring.HilbertSplit(d);
      out << "h(" << d << ") = " << ring.Hilbert(d) << "  (" << h.ToString() << ")\n";
    }
  }
  return kExitOk;
}

inline int RunBer(const Options& o, std::ostream& out) {
  const MatrixFile mf = ParseMatrixFile(ReadFile(o.file));
  const bool invertible = IsInvertible(mf.matrix);
  std::optional<SuperPolynomial> ber;
  if (!BareissDeterminant(mf.matrix.s().Body()).is_zero()) ber = Berezinian(mf.matrix);
  if (!ber) throw Error(ErrorKind::kNotInvertible, "s block is not invertible");
  if (o.json) {
    out << nlohmann::json{{"berezinian", ber->ToString()}, {"invertible", invertible}}.dump(2)
        << "\n";
  } else {
    out << "ber: " << ber->ToString() << "\ninvertible: " << (invertible ? "true" : "false")
        << "\n";
  }
  return kExitOk;
}

inline void PrintGroup(const GroupPresentation& g, const Options& o, std::ostream& out) {
  if (o.emit) {
    out << "# " << g.name << "\n" << PrintPresentation(g.base, g.identity);
    return;
  }
  const SuperDim dim = LieSuperdim(g);
  const int order = o.order.value_or(DefaultOrder(g.base));
  const SmoothnessVerdict v = SmoothTest(g.base, g.identity, order);
  if (o.json) {
    out << nlohmann::json{{"name", g.name},
                          {"lie_superdim", dim},
                          {"identity_verdict", VerdictName(v.verdict)},
                          {"relations", {g.base.even_gens.size(), g.base.odd_gens.size()}},
                          {"presentation", PrintPresentation(g.base, g.identity)}}
               .dump(2)
        << "\n";
    return;
  }
  out << "group: " << g.name << "\n"
      << "variables: " << g.base.num_even_vars() << "|" << g.base.num_odd_vars() << "\n"
      << "relations: " << g.base.even_gens.size() << "|" << g.base.odd_gens.size() << "\n"
      << "lie superdim: " << dim.ToString() << "\n"
      << "identity: " << VerdictName(v.verdict) << "\n";
}

inline int RunGroup(const Options& o, std::ostream& out) {
  PrintGroup(GroupByName(o.group_kind, o.group_m, o.group_n), o, out);
  return kExitOk;
}

inline int RunStabilizer(const Options& o, std::ostream& out) {
  const ActionFile af = ParseActionFile(ReadFile(o.file));
  PrintGroup(StabilizerIdeal(af.action, af.point), o, out);
  return kExitOk;
}

inline int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smoothness, dimensions and Berezinians for affine supervarieties", "supergeom"};
  app.require_subcommand(1);
  Options o;

  auto add_point_opts = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "presentation file")->required();
    sub->add_option("--point", o.point, "point coordinates, overriding the file");
    sub->add_flag("--json", o.json, "JSON output");
  };
  CLI::App* check = app.add_subcommand("check", "is the point on the variety");
  add_point_opts(check);
  CLI::App* tangent = app.add_subcommand("tangent", "Jacobian rank and tangent dimension");
  add_point_opts(tangent);
  CLI::App* smooth = app.add_subcommand("smooth", "decide smoothness at the point");
  add_point_opts(smooth);
  smooth->add_option("--order", o.order, "truncation order (default 2*deg + n + 2)")
      ->check(CLI::Range(2, 1000));
  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function of the local ring");
  add_point_opts(hilbert);
  hilbert->add_option("--max-degree", o.max_degree, "highest degree")->required();
  CLI::App* ber = app.add_subcommand("ber", "Berezinian of a supermatrix file");
  ber->add_option("file", o.file, "matrix file")->required();
  ber->add_flag("--json", o.json, "JSON output");
  CLI::App* group = app.add_subcommand("group", "classical supergroup presentations");
  group->add_option("kind", o.group_kind, "gl, sl, osp or psp")
      ->required()
      ->check(CLI::IsMember({"gl", "sl", "osp", "psp"}));
  group->add_option("m", o.group_m, "even dimension")->required();
  group->add_option("n", o.group_n, "odd dimension")->required();
  group->add_flag("--emit", o.emit, "print the presentation");
  group->add_flag("--json", o.json, "JSON output");
  group->add_option("--order", o.order, "truncation order")->check(CLI::Range(2, 1000));
  CLI::App* stab = app.add_subcommand("stabilizer", "stabilizer subgroup of an action file");
  stab->add_option("file", o.file, "action file")->required();
  stab->add_flag("--emit", o.emit, "print the presentation");
  stab->add_flag("--json", o.json, "JSON output");
  stab->add_option("--order", o.order, "truncation order")->check(CLI::Range(2, 1000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (check->parsed()) return RunCheck(o, out);
    if (tangent->parsed()) return RunTangent(o, out);
    if (smooth->parsed()) return RunSmooth(o, out);
    if (hilbert->parsed()) return RunHilbert(o, out);
    if (ber->parsed()) return RunBer(o, out);
    if (group->parsed()) return RunGroup(o, out);
    if (stab->parsed()) return RunStabilizer(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << (o.file.empty() ? "" : o.file + ":") << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace supergeom::cli

#endif  // SUPERGEOM_CLI_HPP_
