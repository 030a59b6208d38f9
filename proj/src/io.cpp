#include "sepkit/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "sepkit/errors.hpp"

namespace sepkit {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

void expect_header(std::istream& in) {
  std::string line;
  while (std::getline(in, line) && skippable(line)) {
  }
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  if (line != kFormatHeader) {
    throw InputError("expected header line \"" + std::string(kFormatHeader) + "\", got \"" + line + "\"");
  }
}

int parse_count(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InputError("bad " + what + " \"" + text + "\"");
  }
}

}  // namespace

Graph read_graph(std::istream& in) {
  expect_header(in);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    if (!skippable(line)) rows.push_back(line);
  }
  if (rows.empty()) throw InputError("graph file has no \"V E\" line");
  std::istringstream head(rows[0]);
  std::string v_text, e_text, extra;
  if (!(head >> v_text >> e_text) || (head >> extra)) throw InputError("first graph line must be \"V E\"");
  const int v = parse_count(v_text, "vertex count");
  const int e = parse_count(e_text, "edge count");
  if (static_cast<int>(rows.size()) - 1 != e) {
    throw InputError("graph declares " + std::to_string(e) + " edges but lists " + std::to_string(rows.size() - 1));
  }
  Graph g(v);
  for (int i = 0; i < e; ++i) {
    std::istringstream row(rows[static_cast<std::size_t>(i) + 1]);
    std::string a, b, flag;
    if (!(row >> a >> b)) throw InputError("edge line " + std::to_string(i + 1) + " needs \"tail head\"");
    row >> flag;
    if (!flag.empty() && flag != "*") throw InputError("unknown edge flag \"" + flag + "\"");
    if (row >> extra) throw InputError("trailing text on edge line " + std::to_string(i + 1));
    const int tail = parse_count(a, "vertex");
    const int headv = parse_count(b, "vertex");
    if (tail >= v || headv >= v) throw InputError("edge " + std::to_string(i + 1) + " has a vertex out of range");
    g.add_edge(tail, headv, flag == "*");
  }
  return g;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << kFormatHeader << '\n' << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.tail << ' ' << e.head << (e.distinguished ? " *" : "") << '\n';
}

Json matroid_json(const Matroid& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.matrix().rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.matrix().cols(); ++j) row.push_back(m.matrix()(i, j));
    entries.push_back(std::move(row));
  }
  return Json{{"kind", "tu_matrix"},
              {"rows", m.matrix().rows()},
              {"cols", m.matrix().cols()},
              {"entries", std::move(entries)},
              {"labels", m.labels()},
              {"verified_tu", m.representation().verified()}};
}

Matroid read_matroid(std::istream& in) {
  expect_header(in);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(std::string("matroid JSON: ") + e.what());
  }
  try {
    if (doc.at("kind") != "tu_matrix") throw InputError("matroid kind must be \"tu_matrix\"");
    const long rows = doc.at("rows").get<long>();
    const long cols = doc.at("cols").get<long>();
    const auto& entries = doc.at("entries");
    if (rows < 0 || cols < 0 || static_cast<long>(entries.size()) != rows) {
      throw InputError("matroid entries do not match the declared row count");
    }
    IntMatrix a(rows, cols);
    for (long i = 0; i < rows; ++i) {
      const auto& row = entries.at(static_cast<std::size_t>(i));
      if (static_cast<long>(row.size()) != cols) throw InputError("matroid row " + std::to_string(i) + " has the wrong length");
      for (long j = 0; j < cols; ++j) a(i, j) = row.at(static_cast<std::size_t>(j)).get<long>();
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    return Matroid(std::move(a), std::move(labels));
  } catch (const Json::exception& e) {
    throw InputError(std::string("matroid JSON: ") + e.what());
  }
}

void write_matroid(std::ostream& out, const Matroid& m) {
  out << kFormatHeader << '\n' << matroid_json(m).dump() << '\n';
}

namespace {

std::vector<int> builtin_args(const std::string& spec, std::size_t colon, int want) {
  std::vector<int> out;
  std::stringstream ss(spec.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_count(item, "builtin parameter"));
  if (static_cast<int>(out.size()) != want) {
    throw InputError("builtin \"" + spec + "\" takes " + std::to_string(want) + " parameter(s)");
  }
  return out;
}

Input graph_input(std::string name, Graph g) {
  Input in;
  in.name = std::move(name);
  in.matroid = cycle_matroid(g);
  in.graph = std::move(g);
  return in;
}

}  // namespace

Input load_input(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos && !std::filesystem::exists(spec)) {
    const std::string kind = spec.substr(0, colon);
    if (kind == "gamma") {
      const int n = builtin_args(spec, colon, 1)[0];
      GammaGraph gg = gamma_graph(n);
      Input in = graph_input(spec, gg.graph);
      in.gamma = std::move(gg);
      return in;
    }
    if (kind == "dual-k3n") {
      Input in;
      in.name = spec;
      in.matroid = dual_k3n(builtin_args(spec, colon, 1)[0]);
      return in;
    }
    if (kind == "cycle") return graph_input(spec, cycle_graph(builtin_args(spec, colon, 1)[0]));
    if (kind == "complete-bipartite") {
      const auto mn = builtin_args(spec, colon, 2);
      return graph_input(spec, complete_bipartite(mn[0], mn[1]));
    }
    throw InputError("unknown builtin \"" + kind + "\"");
  }
  std::ifstream file(spec);
  if (!file) throw InputError("cannot open \"" + spec + "\"");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  // Past the header, JSON starts with '{'.
  std::istringstream probe(text);
  std::string line;
  bool json = false;
  bool seen_header = false;
  while (std::getline(probe, line)) {
    if (skippable(line)) continue;
    if (!seen_header) {
      seen_header = true;
      continue;
    }
    json = line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] == '{';
    break;
  }
  std::istringstream in(text);
  if (json) {
    Input out;
    out.name = spec;
    out.matroid = read_matroid(in);
    return out;
  }
  return graph_input(spec, read_graph(in));
}

Json integer_json(const Integer& v) {
  if (fits_int64(v)) return v.get_si();
  return v.get_str();
}

Json rational_json(const Rational& v) {
  if (v.get_den() == 1) return integer_json(v.get_num());
  return v.get_str();
}

Json polynomial_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(integer_json(c));
  return out;
}

Json polynomial_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(rational_json(c));
  return out;
}

HstarRecord make_record(int dim, IntPolynomial hstar, std::vector<Integer> counts) {
  HstarRecord r;
  r.dim = dim;
  r.counts = std::move(counts);
  r.hstar = std::move(hstar);
  r.predicates = predicates(r.hstar);
  if (r.predicates.symmetric) r.gamma = gamma_from_hstar(r.hstar);
  return r;
}

Json record_json(const HstarRecord& r) {
  Json out;
  out["dim"] = r.dim;
  if (!r.counts.empty()) {
    Json counts = Json::array();
    for (const auto& c : r.counts) counts.push_back(integer_json(c));
    out["counts"] = std::move(counts);
  }
  out["hstar"] = polynomial_json(r.hstar);
  if (r.gamma) out["gamma"] = polynomial_json(*r.gamma);
  out["volume"] = integer_json(r.volume());
  out["predicates"] = {{"symmetric", r.predicates.symmetric},
                       {"unimodal", r.predicates.unimodal},
                       {"gamma_nonnegative", r.predicates.gamma_nonnegative}};
  return out;
}

std::string record_csv(const HstarRecord& r, const std::string& name) {
  auto join = [](const auto& values) {
    std::string s;
    for (const auto& v : values) {
      if (!s.empty()) s += ' ';
      s += to_string(v);
    }
    return s;
  };
  std::ostringstream out;
  out << "input,dim,counts,hstar,gamma,volume,symmetric,unimodal,gamma_nonnegative\n";
  out << name << ',' << r.dim << ',' << join(r.counts) << ',' << join(r.hstar.coefficients()) << ','
      << (r.gamma ? join(r.gamma->coefficients()) : std::string()) << ',' << to_string(r.volume()) << ','
      << r.predicates.symmetric << ',' << r.predicates.unimodal << ',' << r.predicates.gamma_nonnegative << '\n';
  return out.str();
}

namespace {

std::vector<std::vector<long>> sorted_columns(const LatticePolytope& p) {
  std::vector<std::vector<long>> cols;
  for (int j = 0; j < p.vertex_count(); ++j) {
    std::vector<long> c(static_cast<std::size_t>(p.ambient_dim()));
    for (int i = 0; i < p.ambient_dim(); ++i) c[static_cast<std::size_t>(i)] = p.vertices(i, j);
    cols.push_back(std::move(c));
  }
  std::sort(cols.begin(), cols.end());
  return cols;
}

}  // namespace

std::uint64_t vertex_set_hash(const LatticePolytope& p) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](long v) {
    auto u = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(p.ambient_dim());
  for (const auto& c : sorted_columns(p))
    for (long v : c) mix(v);
  return h;
}

CountCache::CountCache(std::string dir) {
  if (const char* env = std::getenv("SEPKIT_CACHE"); env != nullptr && *env != '\0') dir = env;
  dir_ = dir;
}

std::filesystem::path CountCache::path_for(const LatticePolytope& p) const {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << vertex_set_hash(p) << ".json";
  return dir_ / name.str();
}

std::optional<EhrhartData> CountCache::load(const LatticePolytope& p) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(path_for(p));
  if (!in) return std::nullopt;
  try {
    std::string header;
    std::getline(in, header);
    if (header != kFormatHeader) return std::nullopt;
    const Json doc = Json::parse(in);
    if (doc.at("vertices").get<std::vector<std::vector<long>>>() != sorted_columns(p)) return std::nullopt;
    EhrhartData data;
    data.dim = doc.at("dim").get<int>();
    for (const auto& c : doc.at("counts")) data.counts.emplace_back(c.is_string() ? c.get<std::string>() : std::to_string(c.get<long>()));
    data.hstar = hstar_from_counts(data.counts, data.dim);
    return data;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void CountCache::store(const LatticePolytope& p, const EhrhartData& data) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  Json counts = Json::array();
  for (const auto& c : data.counts) counts.push_back(integer_json(c));
  const Json doc{{"dim", data.dim}, {"counts", std::move(counts)}, {"vertices", sorted_columns(p)}};
  const auto path = path_for(p);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << kFormatHeader << '\n' << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

EhrhartData cached_ehrhart_data(const LatticePolytope& p, const CountCache& cache, const EhrhartOptions& opts) {
  if (auto hit = cache.load(p)) {
    // CI mode: recount one dilate, chosen by the hash, before trusting a hit.
    if (const char* env = std::getenv("SEPKIT_CACHE_VERIFY"); env != nullptr && *env != '\0' && *env != '0') {
      const int m = static_cast<int>(vertex_set_hash(p) % static_cast<std::uint64_t>(hit->counts.size()));
      if (count_points(p, m, opts) != hit->counts[static_cast<std::size_t>(m)]) {
        throw VerificationError("cache entry disagrees with a recount at dilate " + std::to_string(m));
      }
    }
    return *hit;
  }
  EhrhartData data = ehrhart_data(p, opts);
  cache.store(p, data);
  return data;
}

}  // namespace sepkit
