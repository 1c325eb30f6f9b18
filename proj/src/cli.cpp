#include "mgreen/cli.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mgreen/error.hpp"
#include "mgreen/green.hpp"
#include "mgreen/invariants.hpp"
#include "mgreen/io.hpp"
#include "mgreen/oracle.hpp"
#include "mgreen/potential.hpp"

namespace mgreen {

namespace {

using json = nlohmann::json;

// Input graph, repaired to an adequate vertex set when needed. Points and
// divisors given against the input graph are mapped through the repair.
class Session {
 public:
  explicit Session(const RunConfig& config)
      : file_(read_graph_file(config.input)),
        repair_(make_adequate(file_.graph)),
        prepared_(repair_.graph()),
        divisor_(repair_.map_divisor(config.divisor ? parse_divisor(*config.divisor) : file_.divisor)) {}

  const MetrizedGraph& input_graph() const { return file_.graph; }
  const PreparedGraph& prepared() const { return prepared_; }
  const Divisor& divisor() const { return divisor_; }
  bool repaired() const { return !repair_.is_identity(); }

  GraphPoint point(const std::optional<std::string>& text, const char* flag) const {
    if (!text) throw Error(ErrorKind::ParseError, std::string("missing ") + flag + " EDGE:OFFSET");
    return map(parse_point(*text));
  }

  GraphPoint map(const GraphPoint& x) const {
    file_.graph.check_point(x);
    return repair_.map_point(x);
  }

 private:
  GraphFile file_;
  Refinement repair_;
  PreparedGraph prepared_;
  Divisor divisor_;
};

json matrix_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json pair_function_json(const EdgePairFunction& z) {
  return {{"i", z.first},          {"j", z.second},          {"c0", to_string(z.c0)},
          {"cx", to_string(z.cx)}, {"cy", to_string(z.cy)},  {"cxx", to_string(z.cxx)},
          {"cyy", to_string(z.cyy)}, {"cxy", to_string(z.cxy)}, {"cabs", to_string(z.cabs)}};
}

json report_json(const CheckReport& report) {
  json mismatches = json::array();
  for (const auto& m : report.mismatches) {
    mismatches.push_back({{"location", m.location}, {"expected", to_string(m.expected)}, {"got", to_string(m.got)}});
  }
  return {{"name", report.name},
          {"passed", report.passed()},
          {"comparisons", report.comparisons},
          {"mismatches", mismatches}};
}

class Command {
 public:
  Command(const RunConfig& config, std::ostream& out, std::ostream& err) : config_(config), out_(out), err_(err) {}

  int execute() {
    const std::string& c = config_.command;
    if (c == "info") return info();
    if (c == "laplacian") return matrix(session().prepared().laplacian());
    if (c == "pinv") return matrix(session().prepared().pseudo_inverse());
    if (c == "tau") return scalar("tau", session().prepared().tau());
    if (c == "resistance") {
      const Session& s = session();
      return scalar("resistance", resistance_point(s.prepared(), s.point(config_.x, "--x"), s.point(config_.y, "--y")));
    }
    if (c == "green") {
      const Session& s = session();
      return scalar("green",
                    evaluate_g(s.prepared(), s.divisor(), s.point(config_.x, "--x"), s.point(config_.y, "--y")));
    }
    if (c == "value-matrix") return value_matrix_command();
    if (c == "epsilon") return epsilon();
    if (c == "check") return check();
    if (c == "oracle") return oracle();
    throw Error(ErrorKind::ParseError, "unknown command '" + c + "'");
  }

 private:
  const Session& session() {
    if (!session_) {
      session_.emplace(config_);
      if (session_->repaired()) {
        err_ << "note: input vertex set is not adequate; working on the repaired graph with "
             << session_->prepared().graph().vertex_count() << " vertices and "
             << session_->prepared().graph().edge_count() << " edges\n";
      }
    }
    return *session_;
  }

  std::string exact(const Rational& v) const {
    std::string s = to_string(v);
    if (config_.decimal) s += " (" + to_decimal(v, *config_.decimal) + ")";
    return s;
  }

  int scalar(const char* name, const Rational& value) {
    if (config_.machine) {
      json doc{{"command", config_.command}, {name, to_string(value)}};
      if (config_.decimal) doc["decimal"] = to_decimal(value, *config_.decimal);
      out_ << doc.dump() << "\n";
    } else {
      out_ << exact(value) << "\n";
    }
    return kExitOk;
  }

  int matrix(const RationalMatrix& m) {
    if (config_.machine) {
      out_ << json{{"command", config_.command}, {"matrix", matrix_json(m)}}.dump() << "\n";
    } else {
      out_ << format_matrix(m);
    }
    return kExitOk;
  }

  int info() {
    const Session& s = session();
    const MetrizedGraph& g = s.prepared().graph();
    const ConnectivityMatrix& c = s.prepared().connectivity();
    std::vector<EdgeIndex> bridges;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e)
      if (c.is_bridge(e)) bridges.push_back(e);
    if (config_.machine) {
      json doc{{"command", "info"},
               {"input_adequate", !s.repaired()},
               {"vertices", g.vertex_count()},
               {"edges", g.edge_count()},
               {"total_length", to_string(g.total_length())},
               {"bridges", bridges},
               {"divisor", s.divisor().coefficients},
               {"degree", s.divisor().degree()},
               {"connectivity", c.codes()}};
      out_ << doc.dump() << "\n";
      return kExitOk;
    }
    out_ << "adequate: " << (s.repaired() ? "no (repaired)" : "yes") << "\n";
    out_ << "vertices: " << g.vertex_count() << "\n";
    out_ << "edges: " << g.edge_count() << "\n";
    out_ << "total length: " << exact(g.total_length()) << "\n";
    out_ << "bridges:";
    if (bridges.empty()) out_ << " none";
    for (EdgeIndex e : bridges) out_ << " " << e;
    out_ << "\ndivisor:";
    for (auto a : s.divisor().coefficients) out_ << " " << a;
    out_ << " (degree " << s.divisor().degree() << ")\nconnectivity:\n";
    for (const auto& row : c.codes()) {
      for (std::size_t k = 0; k < row.size(); ++k) out_ << (k ? " " : "") << row[k];
      out_ << "\n";
    }
    return kExitOk;
  }

  int value_matrix_command() {
    const Session& s = session();
    const ValueMatrix z = value_matrix(s.prepared(), s.divisor());
    if (config_.machine) {
      json entries = json::array();
      for (EdgeIndex i = 0; i < z.size(); ++i)
        for (EdgeIndex j = 0; j < z.size(); ++j) entries.push_back(pair_function_json(z(i, j)));
      out_ << json{{"command", "value-matrix"}, {"size", z.size()}, {"entries", entries}}.dump() << "\n";
      return kExitOk;
    }
    for (EdgeIndex i = 0; i < z.size(); ++i)
      for (EdgeIndex j = 0; j < z.size(); ++j)
        out_ << "z[" << i << "][" << j << "] = " << z(i, j).to_string() << "\n";
    return kExitOk;
  }

  int epsilon() {
    const Session& s = session();
    const std::string& method = config_.method;
    if (method != "green" && method != "resistance" && method != "both") {
      throw Error(ErrorKind::ParseError, "--method must be green, resistance or both");
    }
    std::optional<Rational> via_green;
    std::optional<Rational> via_resistance;
    if (method != "resistance") via_green = epsilon_via_green(s.prepared(), s.divisor());
    if (method != "green") via_resistance = epsilon_via_resistance(s.prepared(), s.divisor());
    const bool match = !(via_green && via_resistance) || *via_green == *via_resistance;
    if (config_.machine) {
      json doc{{"command", "epsilon"}};
      if (via_green) doc["green"] = to_string(*via_green);
      if (via_resistance) doc["resistance"] = to_string(*via_resistance);
      if (via_green && via_resistance) doc["match"] = match;
      out_ << doc.dump() << "\n";
    } else {
      if (via_green) out_ << exact(*via_green) << "\n";
      if (via_resistance) out_ << exact(*via_resistance) << "\n";
      if (via_green && via_resistance) out_ << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match ? kExitOk : kExitMismatch;
  }

  int check() {
    const Session& s = session();
    const ValueMatrix z = value_matrix(s.prepared(), s.divisor());
    const CheckReport reports[] = {check_representation_independence(s.prepared(), z),
                                   check_vertex_formula(s.prepared(), z)};
    bool ok = true;
    json docs = json::array();
    for (const auto& report : reports) {
      ok = ok && report.passed();
      if (config_.machine) {
        docs.push_back(report_json(report));
        continue;
      }
      out_ << report.name << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.comparisons
           << " comparisons)\n";
      for (const auto& m : report.mismatches) {
        out_ << "  " << m.location << ": expected " << to_string(m.expected) << ", got " << to_string(m.got) << "\n";
      }
    }
    if (config_.machine) out_ << json{{"command", "check"}, {"passed", ok}, {"reports", docs}}.dump() << "\n";
    return ok ? kExitOk : kExitMismatch;
  }

  int oracle() {
    if (!config_.points) throw Error(ErrorKind::ParseError, "oracle needs --points FILE");
    std::ifstream in(*config_.points);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + *config_.points + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto pairs = parse_point_pairs(buffer.str());

    const Session& s = session();
    const PreparedGraph& pg = s.prepared();
    const ValueMatrix z = value_matrix(pg, s.divisor());
    bool ok = true;
    json rows = json::array();
    for (const auto& [x_in, y_in] : pairs) {
      const GraphPoint x = s.map(x_in);
      const GraphPoint y = s.map(y_in);
      const Rational r_closed = resistance_point(pg, x, y);
      const Rational r_oracle = oracle_resistance(pg.graph(), x, y);
      const Rational g_closed = z.evaluate(x, y);
      const Rational g_oracle = oracle_green(pg.graph(), s.divisor(), x, y);
      const Rational r_diff = r_closed - r_oracle;
      const Rational g_diff = g_closed - g_oracle;
      ok = ok && r_diff == 0 && g_diff == 0;
      if (config_.machine) {
        rows.push_back({{"x", format_point(x_in)},
                        {"y", format_point(y_in)},
                        {"r", to_string(r_closed)},
                        {"r_oracle", to_string(r_oracle)},
                        {"r_diff", to_string(r_diff)},
                        {"g", to_string(g_closed)},
                        {"g_oracle", to_string(g_oracle)},
                        {"g_diff", to_string(g_diff)}});
      } else {
        out_ << format_point(x_in) << " " << format_point(y_in) << "  r " << exact(r_closed) << " "
             << exact(r_oracle) << " DIFF " << to_string(r_diff) << "  g " << exact(g_closed) << " "
             << exact(g_oracle) << " DIFF " << to_string(g_diff) << "\n";
      }
    }
    if (config_.machine) out_ << json{{"command", "oracle"}, {"passed", ok}, {"pairs", rows}}.dump() << "\n";
    return ok ? kExitOk : kExitMismatch;
  }

  const RunConfig& config_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<Session> session_;
};

}  // namespace

RunResult run(const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  RunResult result;
  try {
    result.exit_code = Command(config, out, err).execute();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = e.kind() == ErrorKind::Internal ? kExitInternal : kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    result.exit_code = kExitInternal;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace mgreen
