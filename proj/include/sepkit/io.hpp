#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "sepkit/ehrhart.hpp"
#include "sepkit/gamma_family.hpp"
#include "sepkit/matroid.hpp"

namespace sepkit {

using Json = nlohmann::ordered_json;

/// First line of every file this library reads or writes.
inline constexpr const char* kFormatHeader = "sepkit/1";

/// "V E", then E lines "tail head [*]"; `*` marks the distinguished edge.
/// Blank lines and lines starting with '#' are skipped.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

/// {"kind":"tu_matrix","rows":r,"cols":c,"entries":[[...]],"labels":[...],"verified_tu":b}
Matroid read_matroid(std::istream& in);
void write_matroid(std::ostream& out, const Matroid& m);
Json matroid_json(const Matroid& m);

/// A resolved input: a builtin ("gamma:n", "dual-k3n:n", "cycle:n",
/// "complete-bipartite:m,n") or a file in either format.
struct Input {
  std::string name;
  Matroid matroid;
  std::optional<Graph> graph;
  std::optional<GammaGraph> gamma;
};

Input load_input(const std::string& spec);

/// Integers that fit in 64 bits become JSON numbers, others strings.
Json integer_json(const Integer& v);
Json rational_json(const Rational& v);
Json polynomial_json(const IntPolynomial& p);
Json polynomial_json(const RationalPolynomial& p);

struct HstarRecord {
  int dim = 0;
  std::vector<Integer> counts;  // empty unless the brute-force engine ran
  IntPolynomial hstar;
  std::optional<RationalPolynomial> gamma;
  Predicates predicates;
  Integer volume() const { return hstar(Integer(1)); }
};

HstarRecord make_record(int dim, IntPolynomial hstar, std::vector<Integer> counts = {});
Json record_json(const HstarRecord& r);
/// Header line plus one row; polynomials as space-separated coefficients.
std::string record_csv(const HstarRecord& r, const std::string& name);

/// FNV-1a over the sorted vertex columns and the ambient dimension.
std::uint64_t vertex_set_hash(const LatticePolytope& p);

/// Lattice-point counts cached on disk, keyed by the vertex set. A hit is
/// only accepted when the stored vertices match exactly.
class CountCache {
 public:
  /// `dir` empty disables the cache. SEPKIT_CACHE, when set, wins.
  explicit CountCache(std::string dir);

  bool enabled() const { return !dir_.empty(); }
  std::optional<EhrhartData> load(const LatticePolytope& p) const;
  void store(const LatticePolytope& p, const EhrhartData& data) const;

 private:
  std::filesystem::path path_for(const LatticePolytope& p) const;
  std::filesystem::path dir_;
};

/// Cached front end to ehrhart_data. With SEPKIT_CACHE_VERIFY set, every
/// hit is spot-checked by recounting one dilate.
EhrhartData cached_ehrhart_data(const LatticePolytope& p, const CountCache& cache, const EhrhartOptions& opts);

}  // namespace sepkit
