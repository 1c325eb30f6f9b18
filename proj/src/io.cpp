#include "mgreen/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "mgreen/error.hpp"

namespace mgreen {

namespace {

using json = nlohmann::json;
using PathStep = std::variant<std::string, std::size_t>;
using Path = std::vector<PathStep>;

std::string path_string(const Path& path) {
  std::string out;
  for (const auto& step : path) {
    if (const auto* key = std::get_if<std::string>(&step)) {
      out += out.empty() ? *key : "." + *key;
    } else {
      out += "[" + std::to_string(std::get<std::size_t>(step)) + "]";
    }
  }
  return out.empty() ? "<root>" : out;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) line += text[k] == '\n';
  return line;
}

// Line on which the value at `target` starts, found by a light scan of the
// (already validated) JSON text. Returns 0 if not found.
std::size_t locate_line(std::string_view text, const Path& target) {
  struct Frame {
    bool array;
    std::size_t index;
    std::string key;
    bool expect_key;
  };
  std::vector<Frame> stack;
  std::size_t line = 1;

  auto current_path_matches = [&]() {
    if (stack.size() != target.size()) return false;
    for (std::size_t k = 0; k < stack.size(); ++k) {
      const Frame& f = stack[k];
      if (f.array) {
        const auto* idx = std::get_if<std::size_t>(&target[k]);
        if (!idx || *idx != f.index) return false;
      } else {
        const auto* key = std::get_if<std::string>(&target[k]);
        if (!key || *key != f.key) return false;
      }
    }
    return true;
  };

  auto read_string = [&](std::size_t& k) {
    std::string out;
    ++k;
    while (k < text.size() && text[k] != '"') {
      if (text[k] == '\\' && k + 1 < text.size()) ++k;
      out += text[k++];
    }
    return out;
  };

  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch == '\n') {
      ++line;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ':') continue;
    if (ch == ',') {
      if (!stack.empty()) {
        if (stack.back().array) ++stack.back().index;
        else stack.back().expect_key = true;
      }
      continue;
    }
    if (ch == '}' || ch == ']') {
      if (!stack.empty()) stack.pop_back();
      continue;
    }
    if (!stack.empty() && !stack.back().array && stack.back().expect_key && ch == '"') {
      stack.back().key = read_string(k);
      stack.back().expect_key = false;
      continue;
    }
    // Start of a value.
    if (current_path_matches()) return line;
    if (ch == '{') {
      stack.push_back({false, 0, {}, true});
    } else if (ch == '[') {
      stack.push_back({true, 0, {}, false});
    } else if (ch == '"') {
      read_string(k);
    } else {
      while (k + 1 < text.size() && !std::isspace(static_cast<unsigned char>(text[k + 1])) &&
             text[k + 1] != ',' && text[k + 1] != '}' && text[k + 1] != ']')
        ++k;
    }
  }
  return 0;
}

class FieldReader {
 public:
  explicit FieldReader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const Path& path, const std::string& what, ErrorKind kind = ErrorKind::ParseError) const {
    const std::size_t line = locate_line(text_, path);
    std::string where = "field '" + path_string(path) + "'";
    if (line != 0) where += " (line " + std::to_string(line) + ")";
    throw Error(kind, where + ": " + what);
  }

  std::size_t index(const json& v, const Path& path, std::size_t bound) const {
    if (!v.is_number_integer()) fail(path, "expected a vertex index");
    const auto raw = v.get<std::int64_t>();
    if (raw < 0 || static_cast<std::size_t>(raw) >= bound) {
      fail(path, "vertex index " + std::to_string(raw) + " does not name one of the " + std::to_string(bound) +
                     " vertices", ErrorKind::IndexOutOfRange);
    }
    return static_cast<std::size_t>(raw);
  }

  Rational rational(const json& v, const Path& path) const {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) fail(path, "expected a rational as \"p/q\" or an integer");
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

 private:
  std::string_view text_;
};

}  // namespace

GraphFile parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError,
                "malformed JSON at line " + std::to_string(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1)) +
                    ": " + e.what());
  }
  const FieldReader reader(text);
  if (!doc.is_object()) reader.fail({}, "expected a JSON object");

  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    reader.fail({std::string("vertices")}, "expected an array of vertex labels");
  }
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < doc["vertices"].size(); ++k) {
    const json& v = doc["vertices"][k];
    if (v.is_string()) labels.push_back(v.get<std::string>());
    else if (v.is_number_integer()) labels.push_back(std::to_string(v.get<long>()));
    else reader.fail({std::string("vertices"), k}, "expected a string label");
  }
  if (labels.empty()) reader.fail({std::string("vertices")}, "at least one vertex is required");

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    reader.fail({std::string("edges")}, "expected an array of edges");
  }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < doc["edges"].size(); ++k) {
    const json& e = doc["edges"][k];
    const Path base{std::string("edges"), k};
    if (!e.is_object()) reader.fail(base, "expected an object with from, to, length");
    for (const char* key : {"from", "to", "length"}) {
      if (!e.contains(key)) reader.fail(base, std::string("missing '") + key + "'");
    }
    auto sub = [&](const char* key) {
      Path p = base;
      p.emplace_back(std::string(key));
      return p;
    };
    Edge edge{reader.index(e["from"], sub("from"), labels.size()), reader.index(e["to"], sub("to"), labels.size()),
              reader.rational(e["length"], sub("length"))};
    if (edge.length <= 0) {
      reader.fail(sub("length"), "length must be positive, got " + to_string(edge.length),
                  ErrorKind::NonpositiveLength);
    }
    edges.push_back(std::move(edge));
  }
  if (edges.empty()) reader.fail({std::string("edges")}, "at least one edge is required");

  Divisor divisor = Divisor::zero(labels.size());
  if (doc.contains("divisor")) {
    const json& d = doc["divisor"];
    if (!d.is_array()) reader.fail({std::string("divisor")}, "expected an array of integers");
    if (d.size() != labels.size()) {
      reader.fail({std::string("divisor")}, "has " + std::to_string(d.size()) + " entries, expected " +
                                                std::to_string(labels.size()));
    }
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (!d[k].is_number_integer()) reader.fail({std::string("divisor"), k}, "expected an integer");
      divisor.coefficients[k] = d[k].get<std::int64_t>();
    }
  }
  return GraphFile{MetrizedGraph(std::move(labels), std::move(edges)), std::move(divisor)};
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_graph(const MetrizedGraph& g, const Divisor& d) {
  json doc;
  doc["vertices"] = g.labels();
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    doc["edges"].push_back({{"from", e.tail}, {"to", e.head}, {"length", to_string(e.length)}});
  }
  doc["divisor"] = d.coefficients;
  return doc.dump(2) + "\n";
}

GraphPoint parse_point(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "point '" + std::string(text) + "' must look like EDGE:OFFSET");
  }
  const std::string edge_str(text.substr(0, colon));
  if (edge_str.empty() || edge_str.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::ParseError, "bad edge index in point '" + std::string(text) + "'");
  }
  return GraphPoint{static_cast<EdgeIndex>(std::stoull(edge_str)), parse_rational(text.substr(colon + 1))};
}

Divisor parse_divisor(std::string_view text) {
  Divisor d;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const Rational value = parse_rational(token);
    if (value.get_den() != 1 || !value.get_num().fits_slong_p()) {
      throw Error(ErrorKind::ParseError, "divisor entry '" + std::string(token) + "' is not an integer");
    }
    d.coefficients.push_back(value.get_num().get_si());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return d;
}

std::vector<std::pair<GraphPoint, GraphPoint>> parse_point_pairs(std::string_view text) {
  std::vector<std::pair<GraphPoint, GraphPoint>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected two points");
    }
    try {
      out.emplace_back(parse_point(a), parse_point(b));
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string format_point(const GraphPoint& x) { return std::to_string(x.edge) + ":" + to_string(x.offset); }

std::string format_matrix(const RationalMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += to_string(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace mgreen
