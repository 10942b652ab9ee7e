// Copyright 2026 The Trellis Authors. All Rights Reserved.
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

#pragma once

// Command implementations behind the command-line tool. Each returns its exit
// status and the text destined for stdout and stderr, so tests can drive them
// without a process boundary.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trellis/dot.hpp"
#include "trellis/io.hpp"
#include "trellis/lefschetz.hpp"
#include "trellis/pipeline.hpp"
#include "trellis/report.hpp"
#include "trellis/symbolic.hpp"

namespace trellis::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kValidationError = 3,
  kBudgetExceeded = 4,
};

struct RunConfig {
  std::string command;
  std::string input;  // path; unused by typen
  int type_n = 0;     // typen only
  std::optional<std::string> regions;
  double tol = 1e-9;
  unsigned max_len = 8;
  std::string format = "text";  // text | json | dot
  std::size_t budget = 1000000;
};

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

namespace detail {

inline AnalysisOptions options(const RunConfig& cfg) {
  AnalysisOptions opt;
  if (cfg.regions) opt.regions = RegionSelection::parse(*cfg.regions);
  opt.tol = cfg.tol;
  return opt;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string all_dot(const Analysis& an) {
  std::string out;
  if (an.map) out += dot::combinatorial_map(*an.map);
  if (an.cut) out += dot::region_adjacency(*an.cut);
  out += dot::divided_graph(an.graph);
  out += dot::shift(an.selected, edge_shift(an.selected));
  return out;
}

inline CommandResult render_analysis(const Analysis& an, const RunConfig& cfg) {
  CommandResult r;
  if (cfg.format == "json")
    r.out = dump(report::analysis_json(an, cfg.max_len));
  else if (cfg.format == "dot")
    r.out = all_dot(an);
  else
    r.out = report::analysis_text(an, cfg.max_len);
  return r;
}

inline CommandResult cmd_validate(const RunConfig& cfg) {
  const auto doc = load_document(cfg.input);
  CommandResult r;
  if (doc.trellis) {
    const auto rep = validate_spec(*doc.trellis);
    if (cfg.format == "json") {
      Json findings = Json::array();
      for (const auto& f : rep.findings)
        findings.push_back({{"severity", std::string(to_string(f.severity))},
                            {"code", f.code},
                            {"message", f.message},
                            {"element", f.element}});
      r.out = dump({{"schema", kSchemaVersion}, {"valid", rep.ok()}, {"findings", findings}});
    } else {
      r.out = report::validation_text(rep);
    }
    r.exit_code = rep.ok() ? kOk : kValidationError;
    return r;
  }
  // Graph and family documents are fully checked while parsing.
  r.out = cfg.format == "json" ? dump({{"schema", kSchemaVersion}, {"valid", true}})
                               : "valid " + to_string(doc.kind) + " document\n";
  return r;
}

inline CommandResult cmd_analyze(const RunConfig& cfg) {
  return render_analysis(analyze(load_document(cfg.input), options(cfg)), cfg);
}

inline CommandResult cmd_counts(const RunConfig& cfg) {
  const auto an = analyze(load_document(cfg.input), options(cfg));
  std::vector<PeriodicCounts> all;
  bool partial = false;
  for (unsigned n = 1; n <= cfg.max_len && !partial; ++n) {
    all.push_back(periodic_counts(an.selected, n, cfg.budget));
    partial = all.back().partial;
  }
  CommandResult r;
  r.out = cfg.format == "json" ? dump(report::counts_json(an.selected, all))
                               : report::counts_text(an.selected, all);
  if (partial) {
    r.exit_code = kBudgetExceeded;
    r.err = "enumeration budget exceeded; output is partial\n";
  }
  return r;
}

inline CommandResult cmd_shift(const RunConfig& cfg) {
  const auto an = analyze(load_document(cfg.input), options(cfg));
  const auto& ts = an.selected;
  const auto s = edge_shift(ts);
  CommandResult r;
  if (cfg.format == "dot") {
    r.out = dot::shift(ts, s);
  } else if (cfg.format == "json") {
    Json nodes = Json::array(), arcs = Json::array();
    for (auto i : s.nodes)
      nodes.push_back({{"edge", ts.edge_names[i]}, {"region", ts.region_names[*ts.edge_region[i]]}});
    for (const auto& a : s.arcs)
      arcs.push_back({{"from", ts.edge_names[a.from]},
                      {"to", ts.edge_names[a.to]},
                      {"label", ts.region_names[a.label]}});
    r.out = dump({{"schema", kSchemaVersion}, {"kind", "edge_shift"}, {"nodes", nodes}, {"arcs", arcs}});
  } else {
    r.out = "edge shift over " + report::region_list(ts, ts.selection) + "\n";
    for (auto i : s.nodes)
      r.out += "  node " + ts.edge_names[i] + " (" + ts.region_names[*ts.edge_region[i]] + ")\n";
    for (const auto& a : s.arcs)
      r.out += "  arc " + ts.edge_names[a.from] + " -> " + ts.edge_names[a.to] + " [" +
               ts.region_names[a.label] + "]\n";
  }
  return r;
}

inline CommandResult cmd_lefschetz(const RunConfig& cfg) {
  const auto doc = load_document(cfg.input);
  GradedMatrixFamily fam;
  if (doc.family) {
    fam = *doc.family;
    if (cfg.regions) {
      const auto sel = RegionSelection::parse(*cfg.regions);
      if (sel.mode == RegionSelection::Mode::expanding)
        throw ValidationError("region keyword \"expanding\" needs a graph map");
      if (sel.mode == RegionSelection::Mode::named) {
        std::vector<std::size_t> keep;
        for (const auto& n : sel.names) {
          std::size_t k = 0;
          while (k < fam.regions.size() && fam.regions[k] != n) ++k;
          if (k == fam.regions.size()) throw ValidationError("unknown region " + n);
          keep.push_back(k);
        }
        fam = restrict_regions(fam, keep);
      }
    }
  } else {
    const auto an = analyze(doc, options(cfg));
    fam = restrict_regions(an.degree1.family, an.selected.selection);
  }
  std::vector<NonvanishingCodes> all;
  bool partial = false;
  for (unsigned n = 1; n <= cfg.max_len && !partial; ++n) {
    all.push_back(nonvanishing_codes(fam, n, cfg.budget));
    partial = all.back().partial;
  }
  CommandResult r;
  r.out = cfg.format == "json" ? dump(report::lefschetz_json(fam, all))
                               : report::lefschetz_text(fam, all);
  if (partial) {
    r.exit_code = kBudgetExceeded;
    r.err = "enumeration budget exceeded; output is partial\n";
  }
  return r;
}

inline CommandResult cmd_typen(const RunConfig& cfg) {
  const auto spec = make_type_n(cfg.type_n);
  const auto an = analyze_trellis(spec, options(cfg));
  auto r = render_analysis(an, cfg);
  const auto expected = expected_type_n_poly(cfg.type_n);
  const bool match = an.essential_char_poly == expected;
  if (cfg.format == "text") {
    r.out = "generated type-" + std::to_string(cfg.type_n) + " trellis\n" + r.out;
    r.out += "\n[type-n check]\n  expected " + to_string(expected) + ": " +
             (match ? "matches" : "DOES NOT MATCH") + " the expanding-region polynomial\n";
  }
  if (!match) {
    r.exit_code = kFailure;
    r.err = "type-n polynomial check failed\n";
  }
  return r;
}

}  // namespace detail

inline CommandResult run(const RunConfig& cfg) {
  CommandResult r;
  try {
    if (!(cfg.tol > 0)) throw ValidationError("tolerance must be positive");
    if (cfg.max_len < 1) throw ValidationError("max length must be at least 1");
    if (cfg.format != "text" && cfg.format != "json" && cfg.format != "dot")
      throw ValidationError("unknown format " + cfg.format);
    if (cfg.command == "validate") return detail::cmd_validate(cfg);
    if (cfg.command == "analyze") return detail::cmd_analyze(cfg);
    if (cfg.command == "counts") return detail::cmd_counts(cfg);
    if (cfg.command == "shift") return detail::cmd_shift(cfg);
    if (cfg.command == "lefschetz") return detail::cmd_lefschetz(cfg);
    if (cfg.command == "typen") return detail::cmd_typen(cfg);
    r.exit_code = kFailure;
    r.err = "unknown command " + cfg.command + "\n";
  } catch (const ParseError& e) {
    r = {kParseError, "", std::string("parse error: ") + e.what() + "\n"};
  } catch (const ValidationError& e) {
    r = {kValidationError, "", std::string("validation error: ") + e.what() + "\n"};
  } catch (const EmbeddingError& e) {
    r = {kValidationError, "", std::string("validation error: ") + e.what() + "\n"};
  } catch (const AmbiguousMapError& e) {
    r = {kValidationError, "", std::string("validation error: ") + e.what() + "\n"};
  } catch (const DimensionError& e) {
    r = {kValidationError, "", std::string("validation error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    r = {kFailure, "", std::string("error: ") + e.what() + "\n"};
  }
  return r;
}

}  // namespace trellis::cli
