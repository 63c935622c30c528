// Copyright 2026 The polishtop Authors
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

// Command-line front end. Exit status: 0 Holds / success, 2 Fails,
// 3 Inconclusive, 1 malformed input or usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unistd.h>
#include <variant>
#include <vector>

#include "polishtop/checkers.hpp"
#include "polishtop/errors.hpp"
#include "polishtop/finite_net.hpp"
#include "polishtop/line.hpp"
#include "polishtop/presentation.hpp"
#include "polishtop/report.hpp"
#include "polishtop/sawtooth.hpp"
#include "polishtop/standard_spaces.hpp"
#include "polishtop/tendril.hpp"
#include "polishtop/w_table.hpp"

namespace pt = polishtop;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitFails = 2;
constexpr int kExitInconclusive = 3;

int exit_for(pt::Status status) {
  switch (status) {
    case pt::Status::Holds:
      return kExitOk;
    case pt::Status::Fails:
      return kExitFails;
    case pt::Status::Inconclusive:
      return kExitInconclusive;
  }
  return kExitInput;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pt::ParseError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Parsers report the line; prefix the file name.
template <typename F>
auto parse_file(const std::string& path, F&& parse) {
  const std::string text = slurp(path);
  try {
    return parse(text);
  } catch (const pt::ParseError& e) {
    throw pt::ParseError(path + ": " + e.what());
  }
}

// Temp file in the target directory, then rename.
void write_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(path + ": cannot write");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error(path + ": write failed");
  }
  std::filesystem::rename(tmp, target);
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    write_atomic(path, content);
  }
}

std::vector<pt::Rational> parse_grid(const std::string& text) {
  std::vector<pt::Rational> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(pt::parse_rational(part));
  }
  return out;
}

// "a:b:step" (inclusive range) or a comma-separated list.
std::vector<pt::Rational> parse_t_grid(const std::string& text) {
  if (text.find(':') == std::string::npos) return parse_grid(text);
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 3) throw pt::ParseError("grid range must be lo:hi:step");
  const pt::Rational lo = pt::parse_rational(parts[0]);
  const pt::Rational hi = pt::parse_rational(parts[1]);
  const pt::Rational step = pt::parse_rational(parts[2]);
  if (step <= 0) throw pt::ParseError("grid step must be positive");
  std::vector<pt::Rational> out;
  for (pt::Rational t = lo; t <= hi; t += step) out.push_back(t);
  return out;
}

bool looks_like_net(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.compare(first, 4, "net ") == 0;
  }
  return false;
}

using Input = std::variant<pt::Presentation, pt::FiniteNet>;

Input load_input(const std::string& path) {
  const std::string text = slurp(path);
  try {
    if (looks_like_net(text)) return pt::net_from_string(text);
    return pt::presentation_from_string(text);
  } catch (const pt::ParseError& e) {
    throw pt::ParseError(path + ": " + e.what());
  }
}

pt::FiniteNet net_of(const Input& input, std::size_t n, int k) {
  if (const auto* pres = std::get_if<pt::Presentation>(&input)) {
    return pt::build_net(*pres, n == 0 ? pres->size() : n, k);
  }
  const auto& net = std::get<pt::FiniteNet>(input);
  if (n == 0 || n == net.size()) return net;
  if (n > net.size()) throw pt::SizeError("net file has only " + std::to_string(net.size()) + " points");
  std::vector<std::size_t> positions(n);
  for (std::size_t i = 0; i < n; ++i) positions[i] = i;
  return net.restricted(positions);
}

struct ResolutionFlags {
  std::size_t n = 0;
  std::size_t vertices = 0;
  std::string eps;
  std::string delta;
  std::size_t max_path = 0;
  std::size_t budget = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "points taken from the input (default: all)");
    cmd->add_option("--vertices", vertices, "tuple vertices / LC centers (default: --n)");
    cmd->add_option("--eps-grid", eps, "comma-separated descending rationals");
    cmd->add_option("--delta-grid", delta, "comma-separated descending rationals");
    cmd->add_option("--max-path", max_path, "path hop cap, 0 = none");
    cmd->add_option("--budget", budget, "tuple / cover budget, 0 = none");
  }

  pt::Resolution build(std::size_t net_size) const {
    pt::Resolution res;
    res.n_points = vertices != 0 ? vertices : net_size;
    res.eps_grid = parse_grid(eps);
    res.delta_grid = parse_grid(delta);
    res.max_path_len = max_path;
    res.tuple_budget = budget;
    pt::validate(res);
    return res;
  }
};

struct StageFlags {
  int tendrils = pt::Sigma3Config{}.tendril_count;
  int main_cap = pt::Sigma3Config{}.main_cap;
  int arc_cap = pt::Sigma3Config{}.arc_cap;

  void attach(CLI::App* cmd) {
    cmd->add_option("--tendrils", tendrils, "number of tendrils kept");
    cmd->add_option("--main-cap", main_cap, "main-line grid exponent cap");
    cmd->add_option("--arc-cap", arc_cap, "arc grid exponent cap");
  }

  pt::Sigma3Config build() const { return pt::Sigma3Config{tendrils, main_cap, arc_cap}; }
};

std::string audit_text(const std::vector<pt::InvariantReport>& reports, bool& all_ok) {
  std::ostringstream out;
  all_ok = true;
  for (const auto& r : reports) {
    out << "stage " << r.stage << (r.ok() ? " ok" : " VIOLATION") << '\n';
    for (std::size_t i = 0; i < r.items.size(); ++i) {
      const auto& it = r.items[i];
      out << "  item " << (i + 1) << ' ';
      if (!it.applicable) {
        out << "n/a";
      } else {
        out << (it.ok ? "pass" : "fail");
      }
      if (!it.detail.empty()) out << "  " << it.detail;
      out << '\n';
    }
    all_ok = all_ok && r.ok();
  }
  return out.str();
}

std::string summary(const pt::CompositeReport& report) {
  std::ostringstream out;
  for (const auto& v : report.verdicts) {
    out << v.property << ' ' << pt::status_name(v.status);
    if (!v.note.empty()) out << "  (" << v.note << ')';
    out << '\n';
  }
  out << "overall " << pt::status_name(report.overall()) << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-resolution checks and constructions for rational-metric presentations"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate a presentation");
  gen->require_subcommand(1);
  std::string out_path;

  std::string w_path;
  int depth = 0;
  auto* g_saw = gen->add_subcommand("sawtooth", "graph of the sawtooth function");
  g_saw->add_option("--w", w_path, "W table file")->required();
  g_saw->add_option("--depth", depth, "enumeration depth")->required();
  g_saw->add_option("--out", out_path, "output file (default stdout)");
  g_saw->callback([&] {
    const auto w = parse_file(w_path, pt::w_table_from_string);
    emit(out_path, pt::presentation_to_string(pt::gen_sawtooth(w, depth, pt::default_params())));
  });

  int stages = 0;
  StageFlags stage_flags;
  auto* g_sigma = gen->add_subcommand("sigma3", "staged tendril space");
  g_sigma->add_option("--w", w_path, "W table file")->required();
  g_sigma->add_option("--stages", stages, "number of stages")->required();
  g_sigma->add_option("--out", out_path, "output file (default stdout)");
  stage_flags.attach(g_sigma);
  g_sigma->callback([&] {
    const auto w = parse_file(w_path, pt::w_table_from_string);
    emit(out_path, pt::presentation_to_string(pt::run_sigma3(w, stages, stage_flags.build())));
  });

  std::string u_path;
  int m_max = 0;
  auto* g_pi4 = gen->add_subcommand("pi4", "chain of staged spaces");
  g_pi4->add_option("--u", u_path, "U table file")->required();
  g_pi4->add_option("--m", m_max, "number of copies")->required();
  g_pi4->add_option("--stages", stages, "stages per copy")->required();
  g_pi4->add_option("--out", out_path, "output file (default stdout)");
  stage_flags.attach(g_pi4);
  g_pi4->callback([&] {
    const auto u = parse_file(u_path, pt::u_table_from_string);
    emit(out_path,
         pt::presentation_to_string(pt::run_pi4_chain(u, m_max, stages, stage_flags.build())));
  });

  int side_depth = 6;
  auto* g_circle = gen->add_subcommand("circle", "chain wrapped into a loop");
  g_circle->add_option("--u", u_path, "U table file (omit for a straight chain)");
  g_circle->add_option("--m", m_max, "number of copies");
  g_circle->add_option("--stages", stages, "stages per copy");
  g_circle->add_option("--side-depth", side_depth, "dyadic depth of the three sides");
  g_circle->add_option("--out", out_path, "output file (default stdout)");
  stage_flags.attach(g_circle);
  g_circle->callback([&] {
    pt::Presentation z;
    if (u_path.empty()) {
      z = pt::circle_wrap(pt::straight_chain(side_depth), side_depth);
    } else {
      const auto u = parse_file(u_path, pt::u_table_from_string);
      z = pt::circle_wrap(u, m_max, stages, side_depth, stage_flags.build());
    }
    emit(out_path, pt::presentation_to_string(z));
  });

  std::string tree_path;
  std::string grid_spec;
  auto* g_tree = gen->add_subcommand("tree-line", "image of a grid under the tree embedding");
  g_tree->add_option("--tree", tree_path, "tree file")->required();
  g_tree->add_option("--grid", grid_spec, "lo:hi:step or comma list")->required();
  g_tree->add_option("--out", out_path, "output file (default stdout)");
  g_tree->callback([&] {
    const auto tree = parse_file(tree_path, pt::tree_from_string);
    emit(out_path,
         pt::presentation_to_string(pt::gen_line_presentation(tree, parse_t_grid(grid_spec))));
  });

  std::string kind;
  std::size_t count = 64;
  int reach = 8;
  auto* g_std = gen->add_subcommand("standard", "reference spaces");
  g_std->add_option("--kind", kind, "interval | circle | line")
      ->required()
      ->check(CLI::IsMember({"interval", "circle", "line"}));
  g_std->add_option("--depth", depth, "dyadic depth (interval, line)");
  g_std->add_option("--count", count, "number of circle points");
  g_std->add_option("--reach", reach, "half-length of the line segment");
  g_std->add_option("--out", out_path, "output file (default stdout)");
  g_std->callback([&] {
    pt::Presentation p;
    if (kind == "interval") {
      p = pt::dyadic_interval(depth);
    } else if (kind == "circle") {
      p = pt::rational_circle(count);
    } else {
      p = pt::dyadic_line(reach, depth);
    }
    emit(out_path, pt::presentation_to_string(p));
  });

  // ---- check --------------------------------------------------------------
  auto* check = app.add_subcommand("check", "decide a property at a resolution");
  check->require_subcommand(1);
  std::string input_path;
  std::string report_path;
  ResolutionFlags res_flags;
  std::size_t bx = 0, by = 0, bz = 0;
  std::size_t base_id = 0;
  int precision = 0;

  auto run_check = [&](const std::string& prop) {
    const Input input = load_input(input_path);
    pt::CompositeReport report;
    if (prop == "real-line") {
      const auto* pres = std::get_if<pt::Presentation>(&input);
      if (pres == nullptr) throw pt::PreconditionError("check real-line needs a presentation");
      pt::Presentation prefix(pres->label());
      const std::size_t n = res_flags.n == 0 ? pres->size() : res_flags.n;
      if (n > pres->size()) throw pt::SizeError("presentation has fewer points than --n");
      for (std::size_t i = 0; i < n; ++i) prefix.add(pres->point(i));
      report = pt::check_real_line(prefix, base_id, res_flags.build(n + 1));
    } else {
      const pt::FiniteNet net = net_of(input, res_flags.n, precision);
      pt::NetIndex index(net);
      report.label = prop;
      if (prop == "ndegen") {
        report.verdicts.push_back(pt::check_ndegen(index));
      } else {
        const pt::Resolution res = res_flags.build(net.size());
        if (prop == "cpct") report.verdicts.push_back(pt::check_cpct(index, res));
        if (prop == "conn") report.verdicts.push_back(pt::check_conn(index, res));
        if (prop == "lc") report.verdicts.push_back(pt::check_lc(index, res));
        if (prop == "btw") report.verdicts.push_back(pt::check_btw(index, bx, by, bz, res));
        if (prop == "ord") report.verdicts.push_back(pt::check_ord(index, res));
        if (prop == "circ") report.verdicts.push_back(pt::check_circ(index, res));
        if (prop == "arc") report = pt::classify_arc(net, res);
        if (prop == "circle") report = pt::classify_circle(net, res);
      }
    }
    if (report_path.empty()) {
      std::cout << pt::render_report(report);
    } else {
      write_atomic(report_path, pt::render_report(report));
      std::cout << summary(report);
    }
    exit_code = exit_for(report.overall());
  };

  for (const char* prop :
       {"ndegen", "cpct", "conn", "lc", "btw", "ord", "circ", "arc", "circle", "real-line"}) {
    auto* cmd = check->add_subcommand(prop, std::string("check ") + prop);
    cmd->add_option("--pres", input_path, "presentation or net file")->required();
    cmd->add_option("--report", report_path, "report file (default stdout)");
    cmd->add_option("--precision", precision, "precision index recorded in the net");
    if (std::string(prop) != "ndegen") res_flags.attach(cmd);
    if (std::string(prop) == "btw") {
      cmd->add_option("--x", bx, "net position x")->required();
      cmd->add_option("--y", by, "net position y")->required();
      cmd->add_option("--z", bz, "net position z")->required();
    }
    if (std::string(prop) == "real-line") cmd->add_option("--base", base_id, "basepoint id");
    const std::string name = prop;
    cmd->callback([&, name] { run_check(name); });
  }

  // ---- compactify ---------------------------------------------------------
  std::size_t net_n = 0;
  auto* comp = app.add_subcommand("compactify", "one-point compactification as a net");
  comp->add_option("--pres", input_path, "presentation file")->required();
  comp->add_option("--base", base_id, "basepoint id");
  comp->add_option("--n", net_n, "positions kept, infinity included (default: all)");
  comp->add_option("--out", out_path, "output net file (default stdout)");
  comp->callback([&] {
    const auto pres = parse_file(input_path, pt::presentation_from_string);
    const auto hat = pt::compactify(pres, base_id);
    emit(out_path, pt::net_to_string(hat.net(net_n == 0 ? hat.size() : net_n)));
  });

  // ---- audit --------------------------------------------------------------
  auto* audit = app.add_subcommand("audit", "invariant audits");
  audit->require_subcommand(1);
  auto* a_stages = audit->add_subcommand("stages", "stage invariants of the tendril construction");
  a_stages->add_option("--w", w_path, "W table file")->required();
  a_stages->add_option("--stages", stages, "number of stages")->required();
  a_stages->add_option("--out", out_path, "report file (default stdout)");
  stage_flags.attach(a_stages);
  a_stages->callback([&] {
    const auto w = parse_file(w_path, pt::w_table_from_string);
    bool ok = true;
    emit(out_path, audit_text(pt::audit_stages(w, stages, stage_flags.build()), ok));
    exit_code = ok ? kExitOk : kExitFails;
  });

  // ---- replay -------------------------------------------------------------
  auto* rep = app.add_subcommand("replay", "re-verify every evidence item of a report");
  rep->add_option("--report", report_path, "report file")->required();
  rep->add_option("--pres", input_path, "presentation or net the report was made on")->required();
  rep->add_option("--n", net_n, "points taken from the input (default: all)");
  rep->add_option("--base", base_id, "basepoint for real-line reports");
  rep->callback([&] {
    const auto report = parse_file(report_path, [](const std::string& t) { return pt::parse_report(t); });
    const Input input = load_input(input_path);
    std::optional<pt::FiniteNet> hat_net;
    if (report.label == "real-line") {
      const auto* pres = std::get_if<pt::Presentation>(&input);
      if (pres == nullptr) throw pt::PreconditionError("real-line reports replay on a presentation");
      pt::Presentation prefix(pres->label());
      const std::size_t n = net_n == 0 ? pres->size() : net_n;
      for (std::size_t i = 0; i < n; ++i) prefix.add(pres->point(i));
      hat_net = pt::compactify(prefix, base_id).net(n + 1);
    }
    const pt::FiniteNet base_net = net_of(input, net_n, 0);
    bool all = true;
    for (const auto& v : report.verdicts) {
      const bool on_hat = hat_net && v.property != "noncompact";
      const auto outcome = pt::replay(on_hat ? *hat_net : base_net, v);
      std::cout << v.property << ' ' << pt::status_name(v.status) << ' '
                << (outcome.reproduced ? "reproduced" : "NOT reproduced") << "  "
                << outcome.detail << '\n';
      all = all && outcome.reproduced;
    }
    exit_code = all ? kExitOk : kExitFails;
  });

  // ---- net-export ---------------------------------------------------------
  auto* nexp = app.add_subcommand("net-export", "distance matrix of a presentation prefix");
  nexp->add_option("--pres", input_path, "presentation file")->required();
  nexp->add_option("--n", net_n, "number of points (default: all)");
  nexp->add_option("--precision", precision, "precision index recorded in the net");
  nexp->add_option("--out", out_path, "output net file (default stdout)");
  nexp->callback([&] {
    const auto pres = parse_file(input_path, pt::presentation_from_string);
    emit(out_path, pt::net_to_string(pt::build_net(pres, net_n == 0 ? pres.size() : net_n, precision)));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return exit_code;
}
