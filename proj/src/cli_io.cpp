#include "toric/cli_io.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "toric/oracle.hpp"

namespace toric {

namespace {

bool blank(const std::string& line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

std::int64_t to_json_int(const Int& v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("emit_json: value exceeds the integer range of the format");
  return static_cast<std::int64_t>(v.get_si());
}

std::string subset_label(SubsetId s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

std::string offsets_label(const IntVector& k) {
  std::string out = "(";
  for (Index i = 0; i < k.size(); ++i) {
    if (i) out += ",";
    out += k(i).get_str();
  }
  return out + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string mode_name(ArrangementKind kind) {
  return kind == ArrangementKind::toric ? "toric" : "hyperplane";
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Int>> rows;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string line(text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                      : end - start));
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || blank(line)) continue;

    std::vector<Int> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      const std::size_t token_start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::string token = line.substr(token_start, i - token_start);
      std::size_t p = (token[0] == '+' || token[0] == '-') ? 1 : 0;
      bool ok = p < token.size();
      for (std::size_t q = p; q < token.size(); ++q)
        if (!std::isdigit(static_cast<unsigned char>(token[q]))) ok = false;
      if (!ok)
        throw ParseError(line_no, static_cast<int>(token_start) + 1,
                         "malformed integer '" + token + "'");
      row.emplace_back(token);
    }
    rows.push_back(std::move(row));
  }

  if (rows.empty()) throw EmptyMatrix("the input contains no rows");
  const std::size_t width = rows.front().size();
  if (width == 0) throw EmptyMatrix("the input contains no columns");
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() != width)
      throw RaggedRows("row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(width));

  IntMatrix x(static_cast<Index>(rows.size()), static_cast<Index>(width));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j)
      x(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
  return x;
}

std::string emit_json(const HasseDiagram& h, const MobiusTable* mobius_table,
                      const CharPolynomial* char_poly) {
  nlohmann::json j;
  j["d"] = h.d;
  j["n"] = h.n;
  j["mode"] = mode_name(h.kind);

  nlohmann::json vertices = nlohmann::json::array();
  for (const LayerRecord& v : h.vertices) {
    nlohmann::json rec;
    rec["id"] = v.id;
    rec["rank"] = v.rank;
    rec["dim"] = v.dim;
    nlohmann::json subset = nlohmann::json::array();
    for (int i : v.canonical_name.subset.members()) subset.push_back(i + 1);
    rec["max_subset"] = subset;
    nlohmann::json offsets = nlohmann::json::array();
    for (Index i = 0; i < v.canonical_name.k.size(); ++i)
      offsets.push_back(to_json_int(v.canonical_name.k(i)));
    rec["canonical_k"] = offsets;
    vertices.push_back(rec);
  }
  j["vertices"] = vertices;

  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [lo, hi] : h.arcs) edges.push_back(nlohmann::json::array({lo, hi}));
  j["edges"] = edges;

  if (mobius_table != nullptr) {
    nlohmann::json mu;
    for (std::size_t v = 0; v < mobius_table->values.size(); ++v)
      mu[std::to_string(v)] = to_json_int(mobius_table->values[v]);
    j["mobius"] = mu;
  }
  if (char_poly != nullptr) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Int& c : char_poly->coeffs) coeffs.push_back(to_json_int(c));
    j["char_poly"] = coeffs;
  }
  return j.dump(2) + "\n";
}

std::string emit_dot(const HasseDiagram& h) {
  std::ostringstream out;
  out << "digraph poset {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (int rho = 0; rho <= h.d; ++rho) {
    bool any = false;
    for (const LayerRecord& v : h.vertices)
      if (v.rank == rho) any = true;
    if (!any) continue;
    out << "  { rank=same;";
    for (const LayerRecord& v : h.vertices)
      if (v.rank == rho) out << " v" << v.id << ";";
    out << " }\n";
  }
  for (const LayerRecord& v : h.vertices)
    out << "  v" << v.id << " [label=\"" << subset_label(v.canonical_name.subset) << ": "
        << offsets_label(v.canonical_name.k) << "\"];\n";
  for (const auto& [lo, hi] : h.arcs) out << "  v" << lo << " -> v" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string emit_summary(const HasseDiagram& h, const MobiusTable* mobius_table,
                         const CharPolynomial* char_poly,
                         const std::optional<bool>& verified) {
  std::ostringstream out;
  out << "mode: " << mode_name(h.kind) << "\n";
  out << "d: " << h.d << "\n";
  out << "n: " << h.n << "\n";
  out << "vertices: " << h.vertices.size() << "\n";
  out << "edges: " << h.arcs.size() << "\n";
  const std::vector<std::size_t> counts = rank_counts(h);
  for (std::size_t rho = 0; rho < counts.size(); ++rho)
    out << "rank " << rho << ": " << counts[rho] << "\n";
  if (char_poly != nullptr) {
    out << "char_poly:";
    for (const Int& c : char_poly->coeffs) out << " " << c.get_str();
    out << "\n";
  }
  if (mobius_table != nullptr) {
    out << "mobius:";
    for (const Int& m : mobius_table->values) out << " " << m.get_str();
    out << "\n";
  }
  if (verified.has_value())
    out << "verify: " << (*verified ? "ok" : "MISMATCH") << "\n";
  return out.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string text = read_file(config.input_path);
    const IntMatrix x = parse_matrix(text);
    const HasseDiagram h = config.mode == ArrangementKind::toric
                               ? build_layer_poset(x, config.max_ground_set)
                               : build_intersection_lattice(x, config.max_ground_set);

    std::optional<MobiusTable> mu;
    std::optional<CharPolynomial> chi;
    if (config.compute_invariants) {
      mu = mobius(h);
      chi = characteristic_polynomial(h);
    }

    std::optional<bool> verified;
    if (config.verify) {
      const HasseDiagram reference = config.mode == ArrangementKind::toric
                                         ? brute_force_layer_poset(x)
                                         : brute_force_flat_lattice(x);
      verified = isomorphic_diagrams(h, reference);
    }

    switch (config.format) {
      case OutputFormat::json:
        out << emit_json(h, mu ? &*mu : nullptr, chi ? &*chi : nullptr);
        break;
      case OutputFormat::dot:
        out << emit_dot(h);
        break;
      case OutputFormat::summary:
        out << emit_summary(h, mu ? &*mu : nullptr, chi ? &*chi : nullptr, verified);
        break;
    }
    if (verified.has_value() && !*verified) {
      err << "verification mismatch: the output disagrees with the brute-force "
             "reconstruction\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace toric
