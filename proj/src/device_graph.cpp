#include "twirlc/device_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace twirlc {

std::string model_name(Model m) {
  switch (m) {
    case Model::All: return "all";
    case Model::ZType: return "Z";
    case Model::Heisenberg: return "heisenberg";
    case Model::Chirality: return "chirality";
    case Model::Custom: return "custom";
  }
  return "all";
}

Model model_from_name(const std::string& s) {
  if (s == "all") return Model::All;
  if (s == "Z" || s == "z" || s == "ztype") return Model::ZType;
  if (s == "heisenberg") return Model::Heisenberg;
  if (s == "chirality") return Model::Chirality;
  if (s == "custom") return Model::Custom;
  throw std::invalid_argument("unknown interaction model: " + s);
}

std::size_t DeviceGraph::k_locality() const {
  std::size_t k = 0;
  for (const auto& e : hyperedges) k = std::max(k, e.sites.size());
  return k;
}

void DeviceGraph::normalize() {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (auto& e : hyperedges) {
    if (e.model == Model::Custom) {
      if (e.alphabet.size() != e.sites.size())
        throw std::invalid_argument("custom alphabet arity mismatch");
      // keep alphabet aligned while sorting sites
      std::vector<std::size_t> idx(e.sites.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(),
                [&](std::size_t a, std::size_t b) { return e.sites[a] < e.sites[b]; });
      std::vector<int> s;
      std::vector<std::vector<char>> a;
      for (auto i : idx) { s.push_back(e.sites[i]); a.push_back(e.alphabet[i]); }
      e.sites = std::move(s);
      e.alphabet = std::move(a);
    } else {
      std::sort(e.sites.begin(), e.sites.end());
    }
    if (e.sites.size() < 2 ||
        std::adjacent_find(e.sites.begin(), e.sites.end()) != e.sites.end())
      throw std::invalid_argument("hyperedge needs >= 2 distinct vertices");
    for (int v : e.sites)
      if (!std::binary_search(vertices.begin(), vertices.end(), v))
        throw std::invalid_argument("hyperedge references unknown vertex");
  }
  std::sort(hyperedges.begin(), hyperedges.end());
  hyperedges.erase(std::unique(hyperedges.begin(), hyperedges.end()),
                   hyperedges.end());
}

std::vector<char> DeviceGraph::onsite_alphabet(int v) const {
  auto it = onsite.find(v);
  if (it == onsite.end()) return {'X', 'Y', 'Z'};
  return it->second;
}

int Coloring::chi() const {
  int m = 0;
  for (const auto& [v, c] : assignment) m = std::max(m, c);
  return m;
}

int Coloring::color_of(int v) const {
  auto it = assignment.find(v);
  if (it == assignment.end()) throw std::out_of_range("vertex has no color");
  return it->second;
}

SimpleGraph two_section(const DeviceGraph& g) {
  SimpleGraph s;
  s.vertices = g.vertices;
  for (const auto& e : g.hyperedges)
    for (std::size_t i = 0; i < e.sites.size(); ++i)
      for (std::size_t j = i + 1; j < e.sites.size(); ++j)
        s.edges.insert({e.sites[i], e.sites[j]});
  return s;
}

Coloring color(const DeviceGraph& g, const std::vector<int>* seed_order) {
  const SimpleGraph s = two_section(g);
  std::map<int, std::set<int>> adj;
  for (int v : s.vertices) adj[v];
  for (auto [u, v] : s.edges) { adj[u].insert(v); adj[v].insert(u); }

  // Rank used for tie-breaks: position in seed_order, then vertex id.
  std::map<int, int> rank;
  if (seed_order) {
    int r = 0;
    for (int v : *seed_order)
      if (adj.count(v) && !rank.count(v)) rank[v] = r++;
  }
  auto tie_rank = [&](int v) {
    auto it = rank.find(v);
    return it == rank.end() ? std::numeric_limits<int>::max() : it->second;
  };

  Coloring out;
  std::map<int, std::set<int>> neighbor_colors;
  const std::size_t total = s.vertices.size();
  while (out.assignment.size() < total) {
    int best = -1;
    std::size_t best_sat = 0;
    for (int v : s.vertices) {
      if (out.assignment.count(v)) continue;
      const std::size_t sat = neighbor_colors[v].size();
      if (best < 0 || sat > best_sat ||
          (sat == best_sat &&
           std::pair(tie_rank(v), v) < std::pair(tie_rank(best), best))) {
        best = v;
        best_sat = sat;
      }
    }
    int c = 1;
    while (neighbor_colors[best].count(c)) ++c;
    out.assignment[best] = c;
    for (int u : adj[best]) neighbor_colors[u].insert(c);
  }
  return out;
}

bool validate_coloring(const DeviceGraph& g, const Coloring& c) {
  for (int v : g.vertices)
    if (!c.assignment.count(v)) return false;
  for (const auto& e : g.hyperedges) {
    std::set<int> seen;
    for (int v : e.sites)
      if (!seen.insert(c.color_of(v)).second) return false;
  }
  return true;
}

namespace {

std::vector<int> color_tuple(const Hyperedge& e, const Coloring& c) {
  std::vector<int> t;
  for (int v : e.sites) t.push_back(c.color_of(v));
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

DeviceGraph expand(const DeviceGraph& g, const Coloring& c) {
  if (!validate_coloring(g, c))
    throw std::invalid_argument("expand: invalid coloring");
  DeviceGraph out = g;

  // Recorded color tuples with their models, and the color classes.
  std::set<std::pair<std::vector<int>, Model>> tuples;
  for (const auto& e : g.hyperedges) tuples.insert({color_tuple(e, c), e.model});
  std::map<int, std::vector<int>> by_color;
  for (int v : g.vertices) by_color[c.color_of(v)].push_back(v);

  for (const auto& [tuple, model] : tuples) {
    // All vertex tuples matching the color multiset (colors are distinct).
    std::vector<std::vector<int>> choices;
    for (int col : tuple) choices.push_back(by_color.at(col));
    std::vector<std::size_t> idx(tuple.size(), 0);
    for (;;) {
      Hyperedge e;
      e.model = model;
      for (std::size_t i = 0; i < idx.size(); ++i)
        e.sites.push_back(choices[i][idx[i]]);
      std::sort(e.sites.begin(), e.sites.end());
      out.hyperedges.push_back(std::move(e));
      std::size_t i = 0;
      for (; i < idx.size(); ++i) {
        if (++idx[i] < choices[i].size()) break;
        idx[i] = 0;
      }
      if (i == idx.size()) break;
    }
  }
  out.normalize();
  return out;
}

QuotientGraph quotient(const DeviceGraph& g, const Coloring& c) {
  if (!validate_coloring(g, c))
    throw std::invalid_argument("quotient: invalid coloring");
  QuotientGraph q;
  q.chi = c.chi();
  std::set<QuotientEdge> edges;
  for (const auto& e : g.hyperedges) {
    QuotientEdge qe;
    qe.model = e.model;
    if (e.model == Model::Custom) {
      // keep alphabets aligned with the sorted color tuple
      std::vector<std::pair<int, std::vector<char>>> paired;
      for (std::size_t i = 0; i < e.sites.size(); ++i)
        paired.push_back({c.color_of(e.sites[i]), e.alphabet[i]});
      std::sort(paired.begin(), paired.end());
      for (auto& [col, a] : paired) { qe.colors.push_back(col); qe.alphabet.push_back(a); }
    } else {
      qe.colors = color_tuple(e, c);
    }
    edges.insert(std::move(qe));
  }
  q.hyperedges.assign(edges.begin(), edges.end());
  q.onsite.assign(q.chi, {});
  std::vector<std::set<char>> merged(q.chi);
  for (int v : g.vertices)
    for (char l : g.onsite_alphabet(v)) merged[c.color_of(v) - 1].insert(l);
  for (int i = 0; i < q.chi; ++i)
    q.onsite[i].assign(merged[i].begin(), merged[i].end());
  return q;
}

std::vector<std::pair<int, int>> canonical_edge_list(const SimpleGraph& g) {
  // Brute-force minimum edge list over all vertex permutations; fine for
  // the <= 8 vertex graphs the tests compare.
  std::vector<int> vs = g.vertices;
  std::sort(vs.begin(), vs.end());
  if (vs.size() > 9) throw std::invalid_argument("graph too large to canonicalize");
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = i;

  std::vector<std::size_t> perm(vs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> mapped;
    for (auto [u, v] : g.edges) {
      int a = static_cast<int>(perm[pos[u]]);
      int b = static_cast<int>(perm[pos[v]]);
      if (a > b) std::swap(a, b);
      mapped.push_back({a, b});
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) { best = std::move(mapped); first = false; }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace twirlc
