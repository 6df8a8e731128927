#include "skew/families.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "skew/char_poly.hpp"
#include "skew/graph_io.hpp"
#include "skew/orientations.hpp"
#include "skew/structure.hpp"

namespace skew {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

char kind_letter(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::path: return 'P';
    case FamilyKind::star: return 'S';
    case FamilyKind::cycle: return 'C';
    case FamilyKind::tree: return 'T';
    case FamilyKind::unicyclic: return 'U';
    case FamilyKind::bicyclic: return 'B';
  }
  return '?';
}

std::size_t expected_signs(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::cycle:
    case FamilyKind::unicyclic: return 1;
    case FamilyKind::bicyclic: return 3;
    default: return 0;
  }
}

std::vector<CycleSign> signs_or_default(const FamilySpec& spec) {
  if (!spec.orientation.empty()) return spec.orientation;
  return std::vector<CycleSign>(expected_signs(spec.kind), CycleSign::minus);
}

CycleSign sign_from(CycleParity parity) { return parity == CycleParity::oddly ? CycleSign::plus : CycleSign::minus; }

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  if (text.size() < 2 || text[1] != ':') throw ParseError("family spec must start with a kind letter and ':'", text.empty() ? 0 : 1);
  switch (text[0]) {
    case 'P': spec.kind = FamilyKind::path; break;
    case 'S': spec.kind = FamilyKind::star; break;
    case 'C': spec.kind = FamilyKind::cycle; break;
    case 'T': spec.kind = FamilyKind::tree; break;
    case 'U': spec.kind = FamilyKind::unicyclic; break;
    case 'B': spec.kind = FamilyKind::bicyclic; break;
    default: throw ParseError("unknown family kind '" + std::string(1, text[0]) + "'", 0);
  }
  bool have_n = false;
  std::size_t pos = 2;
  while (pos < text.size()) {
    const std::size_t eq = text.find('=', pos);
    if (eq == std::string_view::npos) throw ParseError("expected key=value", pos);
    const std::string_view key = text.substr(pos, eq - pos);
    std::size_t end = text.find(',', eq + 1);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view value = text.substr(eq + 1, end - eq - 1);
    const std::size_t value_pos = eq + 1;
    if (key == "n" || key == "d") {
      int parsed = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
      if (ec != std::errc() || ptr != value.data() + value.size() || value.empty())
        throw ParseError("expected an integer for '" + std::string(key) + "'", value_pos);
      if (key == "n") {
        spec.n = parsed;
        have_n = true;
      } else {
        spec.d = parsed;
      }
    } else if (key == "orient") {
      spec.orientation.clear();
      for (std::size_t i = 0; i < value.size(); ++i) {
        if (value[i] == '-') spec.orientation.push_back(CycleSign::minus);
        else if (value[i] == '+') spec.orientation.push_back(CycleSign::plus);
        else throw ParseError("orientation labels must be '+' or '-'", value_pos + i);
      }
      if (spec.orientation.size() != expected_signs(spec.kind))
        throw ParseError("expected " + std::to_string(expected_signs(spec.kind)) + " orientation label(s)", value_pos);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", pos);
    }
    pos = end + 1;
  }
  if (!have_n) throw ParseError("missing n", text.size());
  const bool needs_d = spec.kind == FamilyKind::tree || spec.kind == FamilyKind::unicyclic ||
                       spec.kind == FamilyKind::bicyclic;
  if (needs_d && !spec.d) throw ParseError("missing d", text.size());
  if (!needs_d && spec.d) throw ParseError("this family takes no d", text.size());
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(1, kind_letter(spec.kind));
  out += ":n=" + std::to_string(spec.n);
  if (spec.d) out += ",d=" + std::to_string(*spec.d);
  const auto signs = signs_or_default(spec);
  if (!signs.empty()) {
    out += ",orient=";
    for (CycleSign s : signs) out += s == CycleSign::plus ? '+' : '-';
  }
  return out;
}

OrientedGraph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  return OrientedGraph(n, arcs);
}

OrientedGraph star_graph(int n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<Arc> arcs;
  for (int i = 1; i < n; ++i) arcs.push_back({0, i});
  return OrientedGraph(n, arcs);
}

OrientedGraph cycle_graph(int n, CycleSign sign) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  // '-': every arc along the routing; '+': the closing arc reversed.
  arcs.push_back(sign == CycleSign::minus ? Arc{n - 1, 0} : Arc{0, n - 1});
  return OrientedGraph(n, arcs);
}

OrientedGraph tree_T(int n, int d) {
  require(d >= 2 && d <= n - 1, "T(n,d) needs 2 <= d <= n-1");
  // Spine 0..d-2 (P_{d-1}); d-2 doubles as a leaf of the star centred at d-1.
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 <= d - 2; ++i) arcs.push_back({i, i + 1});
  arcs.push_back({d - 2, d - 1});
  for (int leaf = d; leaf < n; ++leaf) arcs.push_back({d - 1, leaf});
  return OrientedGraph(n, arcs);
}

OrientedGraph unicyclic_U(int n, int d, CycleSign sign) {
  require(d >= 3 && d <= n - 2, "U(n,d) needs 3 <= d <= n-2");
  // Spine 0..d-3 ending at c0 = d-3; C_4 = c0 c1 c2 c3; pendants on c2.
  const int c0 = d - 3, c1 = d - 2, c2 = d - 1, c3 = d;
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 <= c0; ++i) arcs.push_back({i, i + 1});
  arcs.push_back({c0, c1});
  arcs.push_back({c1, c2});
  arcs.push_back({c2, c3});
  arcs.push_back(sign == CycleSign::minus ? Arc{c3, c0} : Arc{c0, c3});
  for (int p = d + 1; p < n; ++p) arcs.push_back({c2, p});
  return OrientedGraph(n, arcs);
}

OrientedGraph bicyclic_B(int n, int d, CycleSign a, CycleSign b, CycleSign c) {
  require(d >= 3 && d <= n - 3, "B(n,d) needs 3 <= d <= n-3");
  const int plus_count = (a == CycleSign::plus) + (b == CycleSign::plus) + (c == CycleSign::plus);
  if (plus_count % 2 != 0) throw std::invalid_argument("orientation not realizable");
  // Spine 0..d-3 ending at x = d-3; K_{2,3} with parts {x, y} and {p, q, r};
  // pendants on y.
  const int x = d - 3, y = d + 1;
  const int middle[3] = {d - 2, d - 1, d};
  std::vector<Arc> spine_and_pendants;
  for (int i = 0; i + 1 <= x; ++i) spine_and_pendants.push_back({i, i + 1});
  for (int p = d + 2; p < n; ++p) spine_and_pendants.push_back({y, p});

  // All arcs from {p, q, r} into {x, y} give two forward arcs on every 4-cycle,
  // i.e. (-,-,-). Reversing middle->y arcs toggles the two cycles through that vertex.
  const std::vector<CycleSign> wanted{a, b, c};
  for (int flips = 0; flips < 8; ++flips) {
    std::vector<Arc> arcs = spine_and_pendants;
    for (int k = 0; k < 3; ++k) {
      arcs.push_back({middle[k], x});
      arcs.push_back((flips >> k) & 1 ? Arc{y, middle[k]} : Arc{middle[k], y});
    }
    OrientedGraph og(n, arcs);
    const auto cycles = classify_bicyclic(og.base()).cycles();
    bool match = true;
    for (std::size_t i = 0; i < 3; ++i) match &= sign_from(cycle_parity(og, cycles[i])) == wanted[i];
    if (match) return og;
  }
  throw std::invalid_argument("orientation not realizable");
}

OrientedGraph build(const FamilySpec& spec) {
  const auto signs = signs_or_default(spec);
  require(signs.size() == expected_signs(spec.kind), "wrong number of orientation labels");
  switch (spec.kind) {
    case FamilyKind::path: return path_graph(spec.n);
    case FamilyKind::star: return star_graph(spec.n);
    case FamilyKind::cycle: return cycle_graph(spec.n, signs[0]);
    case FamilyKind::tree: return tree_T(spec.n, spec.d.value());
    case FamilyKind::unicyclic: return unicyclic_U(spec.n, spec.d.value(), signs[0]);
    case FamilyKind::bicyclic: return bicyclic_B(spec.n, spec.d.value(), signs[0], signs[1], signs[2]);
  }
  throw std::invalid_argument("unknown family");
}

bool verify_family_shape(const OrientedGraph& og, const FamilySpec& spec) {
  try {
    const Graph& g = og.base();
    const int n = spec.n;
    if (g.order() != n || !is_connected(g)) return false;
    const auto signs = signs_or_default(spec);
    const int m = static_cast<int>(g.size());
    switch (spec.kind) {
      case FamilyKind::path:
        return m == n - 1 && diameter(g) == n - 1;
      case FamilyKind::star: {
        if (n < 2 || m != n - 1) return false;
        for (Vertex v = 0; v < n; ++v)
          if (g.degree(v) == n - 1) return true;
        return false;
      }
      case FamilyKind::cycle: {
        if (m != n || all_cycles(g).size() != 1 || all_cycles(g)[0].size() != static_cast<std::size_t>(n)) return false;
        const Cycle c = all_cycles(g)[0];
        if (n % 2 == 0) return sign_from(cycle_parity(og, c)) == signs[0];
        const int forward = forward_arcs(og, c);
        const bool aligned = forward == 0 || forward == n;
        return aligned == (signs[0] == CycleSign::minus);
      }
      case FamilyKind::tree:
        return m == n - 1 && diameter(g) == spec.d.value();
      case FamilyKind::unicyclic: {
        if (m != n || diameter(g) != spec.d.value()) return false;
        const auto cycles = all_cycles(g);
        return cycles.size() == 1 && cycles[0].size() == 4 && sign_from(cycle_parity(og, cycles[0])) == signs[0];
      }
      case FamilyKind::bicyclic: {
        if (m != n + 1 || diameter(g) != spec.d.value()) return false;
        const BicyclicShape shape = classify_bicyclic(g);
        if (shape.t != 3 || shape.a != 4 || shape.b != 4 || shape.c != 4) return false;
        const auto cycles = shape.cycles();
        for (std::size_t i = 0; i < 3; ++i)
          if (sign_from(cycle_parity(og, cycles[i])) != signs[i]) return false;
        return true;
      }
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

SkewPolynomial path_polynomial(int k) {
  require(k >= 0, "path order must be >= 0");
  if (k == 0) return SkewPolynomial::edgeless(0);
  return char_poly_expansion(path_graph(k));
}

SkewPolynomial star_polynomial(int k) {
  require(k >= 1, "star order must be >= 1");
  if (k == 1) return SkewPolynomial::edgeless(1);
  return char_poly_expansion(star_graph(k));
}

}  // namespace skew
