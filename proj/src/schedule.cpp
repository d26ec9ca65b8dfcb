#include "twirlc/schedule.hpp"

#include <algorithm>
#include <stdexcept>

namespace twirlc {

std::vector<PauliString> gray_order(const DDGroup& g) {
  const std::size_t m = g.generators.size();
  std::vector<PauliString> frames;
  frames.reserve(std::size_t{1} << m);
  PauliString cur(g.chi);
  frames.push_back(cur);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
    // Gray code i^(i>>1): step i toggles generator ctz(i)
    std::uint64_t diff = (i ^ (i >> 1)) ^ ((i - 1) ^ ((i - 1) >> 1));
    int gen = 0;
    while (!((diff >> gen) & 1)) ++gen;
    cur *= g.generators[gen];
    frames.push_back(cur);
  }
  return frames;
}

Schedule emit_bang_bang(const DDGroup& g, const Coloring* coloring) {
  Schedule s;
  s.mode = ControlMode::BangBang;
  s.colors = g.chi;
  s.frames = gray_order(g);
  s.length = s.frames.size();
  for (std::size_t j = 0; j < s.length; ++j)
    s.interpulse.push_back(s.frames[(j + 1) % s.length] * s.frames[j]);
  if (coloring) s = lift(s, *coloring);
  return s;
}

std::vector<PauliString> cayley_cycle(const DDGroup& g,
                                      const std::vector<PauliString>& gamma) {
  const std::size_t m = g.generators.size();
  const std::size_t order = std::size_t{1} << m;
  if (gamma.empty()) throw std::invalid_argument("empty generating set");

  // Express every gamma_j and group element as a generator-exponent mask.
  AdditiveCode code = g.as_code();
  const auto elements = code.codewords();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i)
    index[elements[i].to_string()] = i;
  std::vector<std::size_t> step(gamma.size());
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    auto it = index.find(gamma[j].to_string());
    if (it == index.end())
      throw std::invalid_argument("generator outside the group");
    step[j] = it->second;
  }
  std::vector<std::size_t> mul(order * gamma.size());
  for (std::size_t v = 0; v < order; ++v)
    for (std::size_t j = 0; j < gamma.size(); ++j)
      mul[v * gamma.size() + j] = index.at((gamma[j] * elements[v]).to_string());

  // Iterative Hierholzer on the labeled multigraph, lowest label first,
  // starting at the identity.  lstack[i] is the label that entered
  // vstack[i+1]; popping a vertex records its entering label.
  std::vector<std::size_t> next_edge(order, 0);
  std::vector<std::size_t> vstack = {0};
  std::vector<std::size_t> lstack;
  std::vector<std::size_t> out_labels;
  while (!vstack.empty()) {
    const std::size_t v = vstack.back();
    if (next_edge[v] < gamma.size()) {
      const std::size_t j = next_edge[v]++;
      vstack.push_back(mul[v * gamma.size() + j]);
      lstack.push_back(j);
    } else {
      vstack.pop_back();
      if (!lstack.empty() && vstack.size() == lstack.size()) {
        out_labels.push_back(lstack.back());
        lstack.pop_back();
      }
    }
  }
  std::reverse(out_labels.begin(), out_labels.end());
  if (out_labels.size() != order * gamma.size())
    throw std::invalid_argument("generating set does not reach the whole group");

  std::vector<PauliString> labels;
  labels.reserve(out_labels.size());
  for (auto j : out_labels) labels.push_back(gamma[j]);
  return labels;
}

Schedule emit_bounded(const DDGroup& g, const std::vector<PauliString>& gamma,
                      const BoundedCheck& verdict, const Coloring* coloring) {
  if (!verdict.ok) {
    std::string msg = "bounded verdict failed";
    if (verdict.offending_term)
      msg += ": term " + verdict.offending_term->to_string() + " leaks to " +
             (verdict.leaked ? verdict.leaked->to_string() : "?");
    throw std::runtime_error(msg);
  }
  Schedule s;
  s.mode = ControlMode::Bounded;
  s.colors = g.chi;
  s.intervals = cayley_cycle(g, gamma);
  s.length = s.intervals.size();
  if (coloring) s = lift(s, *coloring);
  return s;
}

Schedule sign_flip_cycle(const DDGroup& g, const std::vector<std::size_t>& sites) {
  const auto inner = gray_order(g);
  Schedule s;
  s.mode = ControlMode::BangBang;
  s.colors = g.chi;
  for (char l : {'X', 'Y', 'Z'}) {
    PauliString conj(g.chi);
    for (std::size_t site : sites) conj.set_letter(site, l);
    for (const auto& f : inner) s.frames.push_back(conj * f);
  }
  s.length = s.frames.size();
  for (std::size_t j = 0; j < s.length; ++j)
    s.interpulse.push_back(s.frames[(j + 1) % s.length] * s.frames[j]);
  return s;
}

Schedule kitaev_cycle() {
  const KitaevInstance inst = kitaev_instance();
  DDGroup pair{6, {inst.w1, inst.w2}};
  std::vector<std::size_t> sites;
  for (int site : inst.conjugator_sites) sites.push_back(site - 1);
  return sign_flip_cycle(pair, sites);
}

Schedule lift(const Schedule& s, const Coloring& c) {
  Schedule out = s;
  const auto& source =
      s.mode == ControlMode::BangBang ? s.frames : s.intervals;
  for (const auto& [v, col] : c.assignment) {
    if (col < 1 || static_cast<std::size_t>(col) > s.colors)
      throw std::invalid_argument("schedule is missing color " + std::to_string(col));
    std::string train;
    train.reserve(source.size());
    for (const auto& f : source) train.push_back(f.letter(col - 1));
    out.lifted[v] = std::move(train);
  }
  return out;
}

PauliString interpulse_product(const Schedule& s) {
  PauliString p(s.colors);
  for (const auto& op : s.interpulse) p *= op;
  return p;
}

}  // namespace twirlc
