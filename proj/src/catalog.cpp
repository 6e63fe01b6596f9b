#include "coxfold/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>

#include "coxfold/errors.hpp"

namespace coxfold {

namespace {

struct Builder {
  std::vector<VertexId> ids;
  std::vector<Edge> edges;

  void path(VertexId from, VertexId to) {
    for (VertexId v = from; v < to; ++v) edges.push_back({v, v + 1, Label(3)});
  }
  void edge(VertexId u, VertexId v, int label = 3) { edges.push_back({u, v, Label(label)}); }
  void edge_inf(VertexId u, VertexId v) { edges.push_back({u, v, Label::infinity()}); }
  void range(VertexId from, VertexId to) {
    for (VertexId v = from; v <= to; ++v) ids.push_back(v);
  }
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CatalogError(what);
}

// Reassigns the label of an existing path edge.
void relabel(Builder& b, VertexId u, VertexId v, int label) {
  for (Edge& e : b.edges)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) e.label = Label(label);
}

Builder finite_builder(Family f, int n) {
  Builder b;
  switch (f) {
    case Family::A:
      require(n >= 1, "A_n needs n >= 1");
      b.range(1, n);
      b.path(1, n);
      break;
    case Family::B:
      require(n >= 2, "B_n needs n >= 2");
      b.range(1, n);
      b.path(1, n);
      relabel(b, n - 1, n, 4);
      break;
    case Family::D:
      require(n >= 4, "D_n needs n >= 4");
      b.range(1, n);
      b.path(1, n - 2);
      b.edge(n - 2, n - 1);
      b.edge(n - 2, n);
      break;
    case Family::E:
      require(n >= 6 && n <= 8, "E_n needs 6 <= n <= 8");
      b.range(1, n);
      b.edge(1, 3);
      b.path(3, n);
      b.edge(2, 4);
      break;
    case Family::F:
      require(n == 4, "F_n exists only for n = 4");
      b.range(1, 4);
      b.path(1, 4);
      relabel(b, 2, 3, 4);
      break;
    case Family::G:
      require(n == 2, "G_n exists only for n = 2");
      b.range(1, 2);
      b.edge(1, 2, 6);
      break;
    case Family::H:
      require(n == 3 || n == 4, "H_n needs n = 3 or 4");
      b.range(1, n);
      b.path(1, n);
      relabel(b, 1, 2, 5);
      break;
    case Family::I2:
      require(n >= 3, "I2(p) needs p >= 3");
      b.range(1, 2);
      b.edge(1, 2, n);
      break;
    default:
      throw CatalogError("not a finite family");
  }
  return b;
}

Builder build(Family f, int n) {
  Builder b;
  switch (f) {
    case Family::tA:
      require(n >= 1, "tA_n needs n >= 1");
      b.range(0, n);
      if (n == 1) {
        b.edge_inf(0, 1);
      } else {
        b.path(0, n);
        b.edge(n, 0);
      }
      return b;
    case Family::tB:
      require(n >= 2, "tB_n needs n >= 2");
      if (n == 2) {
        b.range(0, 2);
        b.edge(0, 1, 4);
        b.edge(1, 2, 4);
        return b;
      }
      b = finite_builder(Family::B, n);
      b.ids.insert(b.ids.begin(), 0);
      b.edge(0, 2);
      return b;
    case Family::tC:
      require(n >= 3, "tC_n needs n >= 3 (the rank 2 graph is tB2)");
      b.range(0, n);
      b.path(0, n);
      relabel(b, 0, 1, 4);
      relabel(b, n - 1, n, 4);
      return b;
    case Family::tD:
      require(n >= 4, "tD_n needs n >= 4");
      b = finite_builder(Family::D, n);
      b.ids.insert(b.ids.begin(), 0);
      b.edge(0, 2);
      return b;
    case Family::tE:
      require(n >= 6 && n <= 8, "tE_n needs 6 <= n <= 8");
      b = finite_builder(Family::E, n);
      b.ids.insert(b.ids.begin(), 0);
      b.edge(0, n == 6 ? 2 : (n == 7 ? 1 : 8));
      return b;
    case Family::tF:
      require(n == 4, "tF_n exists only for n = 4");
      b = finite_builder(Family::F, 4);
      b.ids.insert(b.ids.begin(), 0);
      b.edge(0, 1);
      return b;
    case Family::tG:
      require(n == 2, "tG_n exists only for n = 2");
      b = finite_builder(Family::G, 2);
      b.ids.insert(b.ids.begin(), 0);
      b.edge(0, 2);
      return b;
    case Family::Ainf:
      require(n >= 1, "Ainf truncation needs size >= 1");
      b.range(1, n);
      b.path(1, n);
      return b;
    case Family::iAi:
      require(n >= 1, "iAi truncation needs size >= 1");
      b.range(-n, n);
      b.path(-n, n);
      return b;
    case Family::Dinf:
      require(n >= 4, "Dinf truncation needs size >= 4");
      b.range(1, n);
      b.edge(1, 3);
      b.edge(2, 3);
      b.path(3, n);
      return b;
    case Family::unknown:
      throw CatalogError("unknown family");
    default:
      return finite_builder(f, n);
  }
}

using IdMap = std::map<VertexId, VertexId>;

IdMap swaps(std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  IdMap m;
  for (auto [a, b] : pairs) {
    m[a] = b;
    m[b] = a;
  }
  return m;
}

IdMap cycle_map(int modulus, int shift, bool reflect) {
  IdMap m;
  for (int i = 0; i < modulus; ++i) {
    const int image = reflect ? shift - i : i + shift;
    m[i] = ((image % modulus) + modulus) % modulus;
  }
  return m;
}

std::vector<std::pair<std::string, IdMap>> named_maps(Family f, int n) {
  std::vector<std::pair<std::string, IdMap>> out;
  auto reversal = [](VertexId lo, VertexId hi) {
    IdMap m;
    for (VertexId v = lo; v <= hi; ++v) m[v] = lo + hi - v;
    return m;
  };
  switch (f) {
    case Family::A:
      if (n >= 2) out.emplace_back("g", reversal(1, n));
      break;
    case Family::D:
      out.emplace_back("g", swaps({{n - 1, n}}));
      if (n == 4) {
        out.emplace_back("g1", IdMap{{1, 3}, {3, 4}, {4, 1}});
        out.emplace_back("g2", swaps({{3, 4}}));
      }
      break;
    case Family::E:
      if (n == 6) out.emplace_back("g", swaps({{1, 6}, {3, 5}}));
      break;
    case Family::tA:
      if (n == 1) {
        out.emplace_back("edge", swaps({{0, 1}}));
        break;
      }
      out.emplace_back("g", cycle_map(n + 1, n + 1, true));
      out.emplace_back("g'", cycle_map(n + 1, 2, true));
      out.emplace_back("rot", cycle_map(n + 1, 1, false));
      out.emplace_back("edge", cycle_map(n + 1, 1, true));
      break;
    case Family::tD:
      out.emplace_back("g", swaps({{n - 1, n}}));
      out.emplace_back("ends", swaps({{0, 1}, {n - 1, n}}));
      if (n % 2 == 0) out.emplace_back("rev", reversal(0, n));
      if (n == 4) {
        out.emplace_back("g1", IdMap{{1, 3}, {3, 4}, {4, 1}});
        out.emplace_back("g2", swaps({{3, 4}}));
        out.emplace_back("rot4", IdMap{{0, 4}, {1, 0}, {3, 1}, {4, 3}});
      }
      break;
    case Family::tE:
      if (n == 6) {
        out.emplace_back("g", swaps({{1, 6}, {3, 5}}));
        out.emplace_back("rot3", IdMap{{0, 6}, {1, 0}, {2, 5}, {3, 2}, {5, 3}, {6, 1}});
      }
      if (n == 7) out.emplace_back("g", swaps({{0, 7}, {1, 6}, {3, 5}}));
      break;
    case Family::iAi:
      out.emplace_back("g", reversal(-n, n));
      break;
    case Family::Dinf:
      out.emplace_back("g", swaps({{1, 2}}));
      break;
    default:
      break;
  }
  return out;
}

const std::vector<std::pair<std::string, Family>>& family_prefixes() {
  // Longer prefixes first so that "tA" is not read as "t" + "A".
  static const std::vector<std::pair<std::string, Family>> table = {
      {"Ainf", Family::Ainf}, {"Dinf", Family::Dinf}, {"iAi", Family::iAi}, {"tA", Family::tA},
      {"tB", Family::tB},     {"tC", Family::tC},     {"tD", Family::tD},   {"tE", Family::tE},
      {"tF", Family::tF},     {"tG", Family::tG},     {"A", Family::A},     {"B", Family::B},
      {"D", Family::D},       {"E", Family::E},       {"F", Family::F},     {"G", Family::G},
      {"H", Family::H}};
  return table;
}

std::string prefix_of(Family f) {
  for (const auto& [prefix, fam] : family_prefixes())
    if (fam == f) return prefix;
  return "unknown";
}

int default_truncation(Family f) { return f == Family::iAi ? 4 : 8; }

std::string normalize_long_form(const std::string& name) {
  static const std::regex tilde(R"(^tilde-([A-G])\s*(\d+)$)", std::regex::icase);
  static const std::regex infinite(R"(^(A|D)-infinity(?:,\s*truncation\s+(\d+))?$)", std::regex::icase);
  static const std::regex two_sided(R"(^infinity-A-infinity(?:,\s*truncation\s+(\d+))?$)",
                                    std::regex::icase);
  std::smatch m;
  if (std::regex_match(name, m, tilde))
    return "t" + std::string(1, static_cast<char>(std::toupper(m[1].str()[0]))) + m[2].str();
  if (std::regex_match(name, m, infinite))
    return std::string(1, static_cast<char>(std::toupper(m[1].str()[0]))) + "inf" + m[2].str();
  if (std::regex_match(name, m, two_sided)) return "iAi" + m[1].str();
  return name;
}

}  // namespace

std::string family_name(Family f, int rank) {
  switch (f) {
    case Family::I2:
      return "I2(" + std::to_string(rank) + ")";
    case Family::unknown:
      return "unknown";
    default:
      break;
  }
  return prefix_of(f) + std::to_string(rank);
}

bool is_spherical_family(Family f) {
  switch (f) {
    case Family::A:
    case Family::B:
    case Family::D:
    case Family::E:
    case Family::F:
    case Family::G:
    case Family::H:
    case Family::I2:
      return true;
    default:
      return false;
  }
}

bool is_affine_family(Family f) {
  switch (f) {
    case Family::tA:
    case Family::tB:
    case Family::tC:
    case Family::tD:
    case Family::tE:
    case Family::tF:
    case Family::tG:
      return true;
    default:
      return false;
  }
}

bool is_infinite_family(Family f) {
  return f == Family::Ainf || f == Family::iAi || f == Family::Dinf;
}

const NamedSymmetry& CatalogEntry::symmetry(const std::string& name) const {
  for (const auto& s : symmetries)
    if (s.name == name) return s;
  throw CatalogError(family_name(family, rank) + " has no symmetry named '" + name + "'");
}

CatalogEntry catalog_graph(Family f, int rank) {
  Builder b = build(f, rank);
  CoxeterGraph graph(b.ids, b.edges, family_name(f, rank));
  if (is_infinite_family(f))
    graph = graph.with_truncation({prefix_of(f), rank});
  CatalogEntry entry{f, rank, graph, {}};
  for (const auto& [name, map] : named_maps(f, rank))
    entry.symmetries.push_back({name, validate_symmetry(graph, map)});
  return entry;
}

ParsedToken parse_catalog_token(const std::string& token) {
  ParsedToken out;
  std::string body = token;
  const auto colon = token.find(':');
  if (colon != std::string::npos) {
    body = token.substr(0, colon);
    out.symmetry = token.substr(colon + 1);
    if (out.symmetry.empty()) throw CatalogError("empty symmetry suffix in '" + token + "'");
  }
  body = normalize_long_form(body);
  static const std::regex dihedral(R"(^I2\((\d+)\)$)");
  std::smatch m;
  if (std::regex_match(body, m, dihedral)) {
    out.family = Family::I2;
    out.rank = std::stoi(m[1].str());
    return out;
  }
  for (const auto& [prefix, fam] : family_prefixes()) {
    if (body.rfind(prefix, 0) != 0) continue;
    const std::string digits = body.substr(prefix.size());
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
      continue;
    if (digits.empty()) {
      if (!is_infinite_family(fam)) continue;
      out.rank = default_truncation(fam);
    } else {
      if (digits.size() > 6) throw CatalogError("parameter too large in '" + token + "'");
      out.rank = std::stoi(digits);
    }
    out.family = fam;
    return out;
  }
  throw CatalogError("unknown catalog name '" + token + "'");
}

CatalogEntry catalog_graph(const std::string& name) {
  const ParsedToken t = parse_catalog_token(name);
  return catalog_graph(t.family, t.rank);
}

SymmetricGraph catalog_pair(const std::string& token) {
  const ParsedToken t = parse_catalog_token(token);
  const CatalogEntry entry = catalog_graph(t.family, t.rank);
  std::vector<NamedSymmetry> gens;
  if (t.symmetry == "g1g2") {
    gens = {entry.symmetry("g1"), entry.symmetry("g2")};
  } else if (t.symmetry == "gg") {
    gens = {entry.symmetry("g"), entry.symmetry("g'")};
  } else if (!t.symmetry.empty()) {
    gens = {entry.symmetry(t.symmetry)};
  }
  return {entry.graph, SymmetryGroup(entry.graph, std::move(gens))};
}

Vector highest_root(Family f, int n) {
  std::vector<int> c;
  switch (f) {
    case Family::A:
      require(n >= 1, "A_n needs n >= 1");
      c.assign(static_cast<size_t>(n), 1);
      break;
    case Family::D:
      require(n >= 4, "D_n needs n >= 4");
      c.assign(static_cast<size_t>(n), 2);
      c[0] = 1;
      c[static_cast<size_t>(n - 2)] = 1;
      c[static_cast<size_t>(n - 1)] = 1;
      break;
    case Family::E:
      if (n == 6)
        c = {1, 2, 2, 3, 2, 1};
      else if (n == 7)
        c = {2, 2, 3, 4, 3, 2, 1};
      else if (n == 8)
        c = {2, 3, 4, 6, 5, 4, 3, 2};
      else
        throw CatalogError("E_n needs 6 <= n <= 8");
      break;
    default:
      throw CatalogError("no tabulated highest root for " + family_name(f, n));
  }
  Vector v(static_cast<Eigen::Index>(c.size()));
  for (size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = Surd(c[i]);
  return v;
}

Family finite_part(Family affine) {
  switch (affine) {
    case Family::tA:
      return Family::A;
    case Family::tB:
      return Family::B;
    case Family::tC:
      return Family::B;
    case Family::tD:
      return Family::D;
    case Family::tE:
      return Family::E;
    case Family::tF:
      return Family::F;
    case Family::tG:
      return Family::G;
    default:
      throw CatalogError(family_name(affine, 0) + " is not an affine family");
  }
}

Vector null_root(Family f, int rank) {
  const Vector beta = highest_root(finite_part(f), rank);
  Vector delta(beta.size() + 1);
  delta(0) = Surd(1);
  delta.tail(beta.size()) = beta;
  return delta;
}

}  // namespace coxfold
