#include "equicolor/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "equicolor/closed_forms.hpp"
#include "equicolor/coloring_io.hpp"
#include "equicolor/constructor.hpp"
#include "equicolor/oracle.hpp"
#include "equicolor/sweep.hpp"

namespace equicolor::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

/// Exit with a specific code after printing `what` to the diagnostic stream.
struct Failure {
  int code;
  std::string what;
};

[[noreturn]] void fail(int code, std::string what) { throw Failure{code, std::move(what)}; }

struct Options {
  Int m = 0;
  Int n = 0;
  Int r = 1;
  Int k = 0;
  std::string family = "kronecker";
  std::string format;
  bool use_oracle = false;
  std::string out_path;
  std::string in_path;
  std::string m_range;
  std::string n_range;
  std::string r_range;
};

OracleBudget oracle_budget() {
  OracleBudget budget;
  if (const char* env = std::getenv("EQUICOLOR_ORACLE_NODE_LIMIT")) {
    Int limit = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), limit);
    if (ec != std::errc() || ptr != s.data() + s.size() || limit < 1) {
      fail(kUsage, "EQUICOLOR_ORACLE_NODE_LIMIT must be a positive integer (got \"" +
                       std::string(s) + "\")");
    }
    budget.node_limit = limit;
  }
  return budget;
}

Params make_params(Int m, Int n, Int r) {
  try {
    return Params(m, n, r);
  } catch (const DomainError& e) {
    fail(kUsage, e.what());
  }
}

IntRange parse_range(const std::string& text, const char* name) {
  auto number = [&](std::string_view s) {
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      fail(kUsage, std::string("bad range for ") + name + ": \"" + text + "\" (expected a or a..b)");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const Int v = number(text);
    return {v, v};
  }
  return {number(std::string_view(text).substr(0, dots)),
          number(std::string_view(text).substr(dots + 2))};
}

ordered_json gamma_json(const GammaResult& g) {
  return {{"value", g.value}, {"trichotomy", to_string(g.trichotomy)}, {"residue", g.residue}};
}

ordered_json params_json(const Options& o, bool with_k) {
  ordered_json p;
  p["m"] = o.m;
  p["n"] = o.n;
  p["r"] = o.r;
  if (with_k) p["k"] = o.k;
  return p;
}

// key: value lines, nested keys joined with '.'.
void write_text(std::ostream& out, const ordered_json& value, const std::string& prefix) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      write_text(out, child, prefix.empty() ? key : prefix + "." + key);
    }
    return;
  }
  out << prefix << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

void emit(std::ostream& out, const Options& o, const std::string& command, ordered_json params,
          ordered_json result) {
  ordered_json envelope;
  envelope["schema_version"] = kSchemaVersion;
  envelope["command"] = command;
  envelope["params"] = std::move(params);
  envelope["result"] = std::move(result);
  if (o.format == "text") {
    write_text(out, envelope, "");
  } else {
    out << envelope.dump(2) << '\n';
  }
}

ordered_json canonical_json(const Params& p, bool swapped) {
  ordered_json c;
  c["m"] = p.m;
  c["n"] = p.n;
  c["swapped"] = swapped;
  return c;
}

bool is_edgeless(const Options& o) {
  return o.family == "kronecker" ? std::min(o.m, o.n) == 1 : o.m == 1;
}

int cmd_threshold(const Options& o, std::ostream& out) {
  const Params p = make_params(o.m, o.n, o.r);
  ordered_json result;
  result["family"] = o.family;
  if (is_edgeless(o)) {
    result["value"] = 1;
    result["case"] = "edgeless";
    result["note"] = "edgeless";
  } else if (o.family == "kronecker") {
    const Params c = p.canonical();
    const ThresholdResult t = threshold_kronecker(c);
    result["value"] = t.value;
    result["case"] = to_string(t.threshold_case);
    result["theta"] = t.theta ? json(*t.theta) : json(nullptr);
    result["gamma"] = gamma_json(t.gamma);
    result["canonical"] = canonical_json(c, c != p);
  } else {
    result["value"] = threshold_multipartite(p);
    result["case"] = "multipartite";
    result["theta"] = theta_balanced(p.n, p.r);
    result["gamma"] = gamma_json(gamma(p));
  }
  emit(out, o, "threshold", params_json(o, false), std::move(result));
  return kOk;
}

int cmd_decide(const Options& o, std::ostream& out) {
  const Params p = make_params(o.m, o.n, o.r);
  if (o.k < 1) fail(kUsage, "k must be >= 1 (got " + std::to_string(o.k) + ")");

  ordered_json result;
  result["family"] = o.family;
  const bool kronecker = o.family == "kronecker";
  const Params target = kronecker ? p.canonical() : p;
  bool colorable = true;
  if (is_edgeless(o)) {
    result["colorable"] = true;
    result["reason"] = "edgeless";
  } else {
    const Decision d = kronecker ? decide_kronecker(target, o.k) : decide_multipartite(target, o.k);
    colorable = d.colorable;
    result["colorable"] = d.colorable;
    result["reason"] = to_string(d.reason);
  }
  if (kronecker) result["canonical"] = canonical_json(target, target != p);

  if (o.use_oracle) {
    const OracleBudget budget = oracle_budget();
    bool oracle = false;
    try {
      oracle = kronecker ? oracle_kronecker_colorable(target, o.k, budget)
                         : oracle_multipartite_colorable(target, o.k, budget);
    } catch (const BudgetExceeded& e) {
      fail(kOracleBudget, std::string("oracle budget exceeded: ") + e.what());
    }
    if (oracle != colorable) {
      fail(kInvariantFalsified, "oracle says " + std::string(oracle ? "colorable" : "not colorable") +
                                    " but the closed form says otherwise");
    }
    result["oracle"] = {{"colorable", oracle}, {"agrees", true}};
  }
  emit(out, o, "decide", params_json(o, true), std::move(result));
  return kOk;
}

int cmd_color(const Options& o, std::ostream& out) {
  const Params p = make_params(o.m, o.n, o.r);
  if (o.k < 1) fail(kUsage, "k must be >= 1 (got " + std::to_string(o.k) + ")");
  const Params c = p.canonical();

  Coloring coloring;
  if (c.m == 1) {
    coloring = color_edgeless(c.m, c.n, o.k);
  } else {
    try {
      coloring = color_kronecker(c, o.k);
    } catch (const NotColorable& e) {
      fail(kNotColorable, e.what());
    }
  }
  const VerificationReport report = verify(c.r, coloring);
  if (!report.valid()) {
    fail(kInvariantFalsified, "constructed coloring failed verification: " +
                                  report.violations.front().detail);
  }

  const std::string text = write_coloring(coloring);
  ordered_json result;
  result["canonical"] = canonical_json(c, c != p);
  result["k"] = coloring.k();
  result["class_sizes"] = coloring.class_sizes();
  result["valid"] = true;
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file || !(file << text)) fail(kUsage, "cannot write " + o.out_path);
    result["file"] = o.out_path;
  } else {
    result["coloring"] = text;
  }
  emit(out, o, "color", params_json(o, true), std::move(result));
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.r < 0) fail(kUsage, "r must be >= 0");
  std::ifstream file(o.in_path, std::ios::binary);
  if (!file) fail(kUsage, "cannot read " + o.in_path);
  std::stringstream buffer;
  buffer << file.rdbuf();

  Coloring coloring;
  VerificationReport report;
  try {
    coloring = parse_coloring(buffer.str());
    report = verify(o.r, coloring);
  } catch (const ParseError& e) {
    fail(kUsage, o.in_path + ": " + e.what());
  } catch (const StructuralError& e) {
    fail(kUsage, o.in_path + ": " + e.what());
  }

  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json item;
    item["kind"] = to_string(v.kind);
    item["classes"] = v.class_indices;
    ordered_json vertices = ordered_json::array();
    for (const Vertex& x : v.vertices) vertices.push_back({x.row, x.col});
    item["vertices"] = std::move(vertices);
    item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }
  ordered_json result;
  result["valid"] = report.valid();
  result["m"] = coloring.m;
  result["n"] = coloring.n;
  result["k"] = coloring.k();
  result["class_sizes"] = coloring.class_sizes();
  result["violations"] = std::move(violations);

  ordered_json params;
  params["r"] = o.r;
  params["file"] = o.in_path;
  emit(out, o, "verify", std::move(params), std::move(result));
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const IntRange ms = parse_range(o.m_range, "-m");
  const IntRange ns = parse_range(o.n_range, "-n");
  const IntRange rs = parse_range(o.r_range, "-r");
  if (!ms.empty() && ms.lo < 2) fail(kUsage, "table requires m >= 2");
  if (!ns.empty() && ns.lo < 1) fail(kUsage, "table requires n >= 1");
  if (!rs.empty() && rs.lo < 1) fail(kUsage, "table requires r >= 1");

  const std::vector<ThresholdRow> rows = threshold_table_parallel(ms, ns, rs);
  for (const ThresholdRow& row : rows) {
    if (row.falsifies_equivalence()) {
      fail(kInvariantFalsified, "m=" + std::to_string(row.m) + " n=" + std::to_string(row.n) +
                                    " r=" + std::to_string(row.r) + " clears the bound " +
                                    std::to_string(*row.equ_bound) + " but thresholds differ (" +
                                    std::to_string(row.kronecker.value) + " vs " +
                                    std::to_string(row.multipartite) + ")");
    }
  }

  const bool show_kron = o.family != "multipartite";
  const bool show_multi = o.family != "kronecker";
  auto row_json = [&](const ThresholdRow& row) {
    ordered_json j;
    j["m"] = row.m;
    j["n"] = row.n;
    j["r"] = row.r;
    if (show_kron) {
      j["kronecker"] = row.kronecker.value;
      j["kronecker_case"] = to_string(row.kronecker.threshold_case);
      j["kronecker_theta"] = row.kronecker.theta ? json(*row.kronecker.theta) : json(nullptr);
      j["gamma"] = row.kronecker.gamma.value;
      j["trichotomy"] = to_string(row.kronecker.gamma.trichotomy);
    }
    if (show_multi) {
      j["multipartite"] = row.multipartite;
      j["multipartite_theta"] = row.multipartite_theta;
    }
    if (show_kron && show_multi) j["equal"] = row.equal;
    j["equ_bound"] = row.equ_bound ? json(*row.equ_bound) : json(nullptr);
    j["clears_bound"] = row.clears_bound;
    return j;
  };

  if (o.format == "json") {
    ordered_json array = ordered_json::array();
    for (const ThresholdRow& row : rows) array.push_back(row_json(row));
    ordered_json params;
    params["m"] = o.m_range;
    params["n"] = o.n_range;
    params["r"] = o.r_range;
    params["family"] = o.family;
    ordered_json result;
    result["rows"] = std::move(array);
    emit(out, o, "table", std::move(params), std::move(result));
    return kOk;
  }

  // CSV: header from the column set, empty cell for null.
  const ordered_json header_row = row_json(ThresholdRow{});
  bool first = true;
  for (const auto& [key, value] : header_row.items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const ThresholdRow& row : rows) {
    first = true;
    const ordered_json cells = row_json(row);
    for (const auto& [key, value] : cells.items()) {
      out << (first ? "" : ",");
      first = false;
      if (value.is_null()) continue;
      out << (value.is_string() ? value.get<std::string>() : value.dump());
    }
    out << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"r-equitable chromatic thresholds of K_m x K_n and K_{m(n)}", "equicolor"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> families = {"kronecker", "multipartite"};

  auto* threshold = app.add_subcommand("threshold", "Chromatic threshold from the closed forms");
  threshold->add_option("-m", o.m, "parts / order of the first factor")->required();
  threshold->add_option("-n", o.n, "part size / order of the second factor")->required();
  threshold->add_option("-r", o.r, "allowed class-size gap")->required();
  threshold->add_option("--family", o.family)->check(CLI::IsMember(families));
  threshold->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* decide = app.add_subcommand("decide", "Is the graph r-equitably k-colorable?");
  decide->add_option("-m", o.m)->required();
  decide->add_option("-n", o.n)->required();
  decide->add_option("-r", o.r)->required();
  decide->add_option("-k", o.k, "number of colors")->required();
  decide->add_option("--family", o.family)->check(CLI::IsMember(families));
  decide->add_flag("--oracle", o.use_oracle, "cross-check with exhaustive search");
  decide->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* color = app.add_subcommand("color", "Construct a witness coloring of K_m x K_n");
  color->add_option("-m", o.m)->required();
  color->add_option("-n", o.n)->required();
  color->add_option("-r", o.r)->required();
  color->add_option("-k", o.k)->required();
  color->add_option("-o,--out", o.out_path, "coloring file to write");
  color->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check a coloring file");
  verify_cmd->add_option("-r", o.r)->required();
  verify_cmd->add_option("file", o.in_path)->required();
  verify_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* table = app.add_subcommand("table", "Threshold comparison over parameter ranges");
  table->add_option("-m", o.m_range, "range a..b")->required();
  table->add_option("-n", o.n_range, "range a..b")->required();
  table->add_option("-r", o.r_range, "range a..b")->required();
  table->add_option("--family", o.family)->check(CLI::IsMember({"kronecker", "multipartite", "both"}));
  table->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (threshold->parsed()) return cmd_threshold(o, out);
    if (decide->parsed()) return cmd_decide(o, out);
    if (color->parsed()) return cmd_color(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (table->parsed()) {
      if (o.family == "kronecker" && table->count("--family") == 0) o.family = "both";
      if (o.format.empty()) o.format = "csv";
      return cmd_table(o, out);
    }
  } catch (const Failure& f) {
    err << "equicolor: " << f.what << '\n';
    return f.code;
  } catch (const DomainError& e) {
    err << "equicolor: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "equicolor: internal invariant violated: " << e.what() << '\n';
    return kInvariantFalsified;
  } catch (const std::exception& e) {
    err << "equicolor: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}

}  // namespace equicolor::cli
