#include "twirlc/compiler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "twirlc/parallel.hpp"

namespace twirlc {

std::vector<PauliString> DDGroup::elements() const {
  const std::size_t m = generators.size();
  if (m > 24) throw std::runtime_error("group too large to enumerate");
  std::vector<PauliString> out;
  out.reserve(std::size_t{1} << m);
  out.push_back(PauliString::identity(chi));
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask)
    out.push_back(out[mask & (mask - 1)] * generators[std::countr_zero(mask)]);
  return out;
}

void TermSet::add(const PauliString& p, double coeff, TermRole role) {
  if (n == 0) n = p.num_sites();
  if (p.num_sites() != n) throw std::invalid_argument("term length mismatch");
  for (auto& t : terms)
    if (t.pauli == p) {
      t.coeff += coeff;
      return;
    }
  terms.push_back({p, coeff, role});
}

std::vector<PauliString> TermSet::paulis(TermRole role) const {
  std::vector<PauliString> out;
  for (const auto& t : terms)
    if (t.role == role) out.push_back(t.pauli);
  return out;
}

std::optional<TermVerdict> Verdict::first_preserved() const {
  for (const auto& t : terms)
    if (t.status == TermStatus::Preserved) return t;
  return std::nullopt;
}

bool suppresses(const DDGroup& g, const PauliString& t,
                std::optional<PauliString>* witness) {
  for (const auto& gen : g.generators) {
    if (symplectic_inner(gen, t)) {
      if (witness) *witness = gen;
      return true;
    }
  }
  if (witness) witness->reset();
  return false;
}

std::vector<int> twirl_sign_profile(const DDGroup& g, const PauliString& t) {
  std::vector<int> out;
  out.reserve(g.order());
  for (const auto& el : g.elements())
    out.push_back(symplectic_inner(el, t) ? -1 : +1);
  return out;
}

namespace {

void emit_subset_terms(const std::vector<int>& colors, std::size_t chi,
                       std::size_t k, Model model,
                       const std::vector<std::vector<char>>& alphabet,
                       std::set<PauliString>& out) {
  const std::size_t sz = colors.size();
  if (sz >= 20) throw std::invalid_argument("hyperedge too wide to enumerate");
  switch (model) {
    case Model::All: {
      // all letter assignments on subsets of 2..k sites
      std::vector<std::size_t> members(sz);
      std::iota(members.begin(), members.end(), 0);
      for (std::uint32_t mask = 1; mask < (1u << sz); ++mask) {
        const std::size_t w = std::popcount(mask);
        if (w < 2 || w > k) continue;
        std::vector<std::size_t> sel;
        for (std::size_t i = 0; i < sz; ++i)
          if (mask & (1u << i)) sel.push_back(i);
        std::vector<int> letter(sel.size(), 0);
        for (;;) {
          PauliString t(chi);
          for (std::size_t i = 0; i < sel.size(); ++i)
            t.set_site(colors[sel[i]] - 1, F4(static_cast<std::uint8_t>(letter[i] + 1)));
          out.insert(t);
          std::size_t i = 0;
          for (; i < letter.size(); ++i) {
            if (++letter[i] < 3) break;
            letter[i] = 0;
          }
          if (i == letter.size()) break;
        }
      }
      break;
    }
    case Model::ZType: {
      for (std::uint32_t mask = 1; mask < (1u << sz); ++mask) {
        const std::size_t w = std::popcount(mask);
        if (w < 2 || w > k) continue;
        PauliString t(chi);
        for (std::size_t i = 0; i < sz; ++i)
          if (mask & (1u << i)) t.set_letter(colors[i] - 1, 'Z');
        out.insert(t);
      }
      break;
    }
    case Model::Heisenberg: {
      if (k < 2) break;
      for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = i + 1; j < sz; ++j)
          for (char l : {'X', 'Y', 'Z'}) {
            PauliString t(chi);
            t.set_letter(colors[i] - 1, l);
            t.set_letter(colors[j] - 1, l);
            out.insert(t);
          }
      break;
    }
    case Model::Chirality: {
      if (k < 3) break;
      const char perms[6][3] = {{'X', 'Y', 'Z'}, {'X', 'Z', 'Y'}, {'Y', 'X', 'Z'},
                                {'Y', 'Z', 'X'}, {'Z', 'X', 'Y'}, {'Z', 'Y', 'X'}};
      for (std::size_t i = 0; i < sz; ++i)
        for (std::size_t j = i + 1; j < sz; ++j)
          for (std::size_t l = j + 1; l < sz; ++l)
            for (const auto& p : perms) {
              PauliString t(chi);
              t.set_letter(colors[i] - 1, p[0]);
              t.set_letter(colors[j] - 1, p[1]);
              t.set_letter(colors[l] - 1, p[2]);
              out.insert(t);
            }
      break;
    }
    case Model::Custom: {
      // product over per-site alphabets, weight 2..k
      std::vector<std::vector<char>> allowed = alphabet;
      if (allowed.size() != sz)
        throw std::invalid_argument("custom alphabet arity mismatch");
      std::vector<std::size_t> pick(sz, 0);
      for (;;) {
        PauliString t(chi);
        std::size_t w = 0;
        for (std::size_t i = 0; i < sz; ++i) {
          const char l = allowed[i][pick[i]];
          if (l != 'I') {
            t.set_letter(colors[i] - 1, l);
            ++w;
          }
        }
        if (w >= 2 && w <= k) out.insert(t);
        std::size_t i = 0;
        for (; i < sz; ++i) {
          if (++pick[i] < allowed[i].size()) break;
          pick[i] = 0;
        }
        if (i == sz) break;
      }
      break;
    }
  }
}

}  // namespace

std::vector<PauliString> enumerate_quotient_terms(
    const QuotientGraph& q, std::size_t k, std::optional<Model> model_override) {
  std::set<PauliString> out;
  for (int c = 1; c <= q.chi; ++c)
    for (char l : q.onsite[c - 1])
      out.insert(PauliString::single(q.chi, c - 1, l));
  for (const auto& e : q.hyperedges) {
    const Model m = model_override.value_or(e.model);
    emit_subset_terms(e.colors, q.chi, k, m, e.alphabet, out);
  }
  return {out.begin(), out.end()};
}

Verdict classify_terms(const DDGroup& g, const std::vector<PauliString>& terms) {
  Verdict v;
  v.terms.resize(terms.size());
  parallel_for(terms.size(), [&](std::size_t i) {
    TermVerdict& tv = v.terms[i];
    tv.term = terms[i];
    std::optional<PauliString> w;
    if (suppresses(g, terms[i], &w)) {
      tv.status = TermStatus::Suppressed;
      tv.witness = w;
    } else {
      tv.status = TermStatus::Preserved;
    }
  });
  v.universal = std::all_of(v.terms.begin(), v.terms.end(), [](const TermVerdict& t) {
    return t.status == TermStatus::Suppressed;
  });
  return v;
}

Verdict check_universal(const DDGroup& g, const QuotientGraph& q, std::size_t k,
                        std::optional<Model> model_override) {
  if (static_cast<std::size_t>(q.chi) != g.chi)
    throw std::invalid_argument("group and quotient disagree on color count");
  return classify_terms(g, enumerate_quotient_terms(q, k, model_override));
}

std::vector<PauliString> selective_nullspace(const TermSet& h_par) {
  const std::size_t n = h_par.n;
  // rows: for term h, coefficients of v are h's (z|x) bits
  std::vector<std::vector<std::uint64_t>> rows;
  const std::size_t words = (2 * n + 63) / 64;
  for (const auto& t : h_par.terms) {
    std::vector<std::uint64_t> row(words, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.pauli.z_bit(i)) row[i / 64] |= std::uint64_t{1} << (i % 64);
      if (t.pauli.x_bit(i)) row[(n + i) / 64] |= std::uint64_t{1} << ((n + i) % 64);
    }
    rows.push_back(std::move(row));
  }
  // reduced row echelon + free-column basis
  auto bit = [](const std::vector<std::uint64_t>& r, std::size_t c) {
    return (r[c / 64] >> (c % 64)) & 1u;
  };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < 2 * n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && !bit(rows[piv], c)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && bit(rows[i], c))
        for (std::size_t k2 = 0; k2 < words; ++k2) rows[i][k2] ^= rows[r][k2];
    pivots.push_back(c);
    ++r;
  }
  std::vector<PauliString> basis;
  for (std::size_t c = 0; c < 2 * n; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    PauliString v(n);
    auto set_flat = [&](std::size_t flat) {
      if (flat < n) v.set_x(flat, true);
      else v.set_z(flat - n, true);
    };
    set_flat(c);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (bit(rows[i], c)) set_flat(pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const std::vector<PauliString>& basis, const PauliString& p) {
  AdditiveCode c;
  c.n = p.num_sites();
  c.generators = basis;
  return c.contains(p);
}

CoverResult min_cover(const std::vector<PauliString>& candidates,
                      const TermSet& h_perp) {
  CoverResult res;
  const std::vector<PauliString> targets = h_perp.paulis(TermRole::Suppress);
  if (targets.empty()) return res;

  // candidate order: weight, then input position
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return candidates[a].weight() < candidates[b].weight();
  });

  // coverage bitmasks over targets
  const std::size_t nt = targets.size();
  const std::size_t tw = (nt + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cover(order.size(),
                                                std::vector<std::uint64_t>(tw, 0));
  for (std::size_t ci = 0; ci < order.size(); ++ci)
    for (std::size_t t = 0; t < nt; ++t)
      if (symplectic_inner(candidates[order[ci]], targets[t]))
        cover[ci][t / 64] |= std::uint64_t{1} << (t % 64);

  // feasibility
  for (std::size_t t = 0; t < nt; ++t) {
    bool any = false;
    for (std::size_t ci = 0; ci < order.size() && !any; ++ci)
      any = (cover[ci][t / 64] >> (t % 64)) & 1u;
    if (!any) {
      res.infeasible_term = targets[t];
      return res;
    }
  }

  auto full = [&](const std::vector<std::uint64_t>& m) {
    for (std::size_t t = 0; t < nt; ++t)
      if (!((m[t / 64] >> (t % 64)) & 1u)) return false;
    return true;
  };

  auto greedy = [&]() {
    std::vector<std::size_t> chosen;
    std::vector<std::uint64_t> got(tw, 0);
    while (!full(got)) {
      std::size_t best = order.size();
      std::size_t best_gain = 0;
      for (std::size_t ci = 0; ci < order.size(); ++ci) {
        std::size_t gain = 0;
        for (std::size_t k = 0; k < tw; ++k)
          gain += std::popcount(cover[ci][k] & ~got[k]);
        if (gain > best_gain) { best_gain = gain; best = ci; }
      }
      chosen.push_back(best);
      for (std::size_t k = 0; k < tw; ++k) got[k] |= cover[best][k];
    }
    return chosen;
  };

  if (candidates.size() > 24) {
    auto chosen = greedy();
    res.optimal = false;
    // crude lower bound: ceil(targets / max single coverage)
    std::size_t maxc = 1;
    for (std::size_t ci = 0; ci < order.size(); ++ci) {
      std::size_t c = 0;
      for (std::size_t k = 0; k < tw; ++k) c += std::popcount(cover[ci][k]);
      maxc = std::max(maxc, c);
    }
    const std::size_t lower = (nt + maxc - 1) / maxc;
    res.greedy_gap = chosen.size() > lower ? chosen.size() - lower : 0;
    for (auto ci : chosen) res.chosen.push_back(order[ci]);
    std::sort(res.chosen.begin(), res.chosen.end());
    return res;
  }

  // exact: iterative deepening in candidate order; the first cover found
  // at the minimum size is the canonical one
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t, std::size_t, std::vector<std::uint64_t>&)> rec =
      [&](std::size_t start, std::size_t remaining,
          std::vector<std::uint64_t>& got) -> bool {
    if (full(got)) return true;
    if (remaining == 0) return false;
    for (std::size_t ci = start; ci < order.size(); ++ci) {
      std::vector<std::uint64_t> next(tw);
      bool grows = false;
      for (std::size_t k = 0; k < tw; ++k) {
        next[k] = got[k] | cover[ci][k];
        grows = grows || next[k] != got[k];
      }
      if (!grows) continue;
      pick.push_back(ci);
      if (rec(ci + 1, remaining - 1, next)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= candidates.size(); ++size) {
    std::vector<std::uint64_t> got(tw, 0);
    pick.clear();
    if (rec(0, size, got)) {
      for (auto ci : pick) res.chosen.push_back(order[ci]);
      std::sort(res.chosen.begin(), res.chosen.end());
      return res;
    }
  }
  res.infeasible_term = targets.front();  // unreachable if feasibility held
  return res;
}

std::vector<PauliString> bounded_support(const PauliString& t,
                                         const std::vector<PauliString>& gamma) {
  std::set<PauliString> out;
  out.insert(t);
  for (const auto& g : gamma) {
    if (g.num_sites() != t.num_sites())
      throw std::invalid_argument("generator length mismatch");
    std::vector<std::size_t> anti;
    for (std::size_t i = 0; i < t.num_sites(); ++i) {
      const F4 a = t.site(i), b = g.site(i);
      if (a != F4::zero() && b != F4::zero() && a != b) anti.push_back(i);
    }
    if (anti.size() > 20)
      throw std::runtime_error("bounded support closure too large");
    for (std::uint32_t mask = 1; mask < (1u << anti.size()); ++mask) {
      PauliString v = t;
      for (std::size_t i = 0; i < anti.size(); ++i)
        if (mask & (1u << i))
          v.set_site(anti[i], f4_add(v.site(anti[i]), g.site(anti[i])));
      out.insert(v);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<PauliString> bounded_support_fixpoint(
    const PauliString& t, const std::vector<PauliString>& gamma) {
  std::set<PauliString> all;
  std::vector<PauliString> frontier = {t};
  all.insert(t);
  while (!frontier.empty()) {
    std::vector<PauliString> next;
    for (const auto& f : frontier)
      for (const auto& e : bounded_support(f, gamma))
        if (all.insert(e).second) next.push_back(e);
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

BoundedCheck check_bounded(const DDGroup& g,
                           const std::vector<PauliString>& gamma,
                           const std::vector<PauliString>& suppress_targets,
                           const std::vector<PauliString>& preserve_targets) {
  BoundedCheck out;
  std::unordered_set<PauliString, PauliStringHash> preserved(
      preserve_targets.begin(), preserve_targets.end());
  auto scan = [&](const std::vector<PauliString>& terms,
                  bool skip_self) -> bool {
    for (const auto& t : terms) {
      for (const auto& e : bounded_support(t, gamma)) {
        if (e.is_identity()) continue;
        if (skip_self && e == t) continue;
        if (preserved.count(e)) continue;
        if (!suppresses(g, e)) {
          out.offending_term = t;
          out.leaked = e;
          return false;
        }
      }
    }
    return true;
  };
  // suppressed targets must themselves be detected
  for (const auto& t : suppress_targets)
    if (!suppresses(g, t)) {
      out.offending_term = t;
      out.leaked = t;
      return out;
    }
  if (!scan(suppress_targets, false)) return out;
  if (!scan(preserve_targets, true)) return out;
  out.ok = true;
  return out;
}

BoundedCheck check_bounded(const DDGroup& g,
                           const std::vector<PauliString>& gamma,
                           const QuotientGraph& q, std::size_t k,
                           std::optional<Model> model_override,
                           const TermSet& preserve) {
  const auto all_terms = enumerate_quotient_terms(q, k, model_override);
  const auto pres = preserve.paulis(TermRole::Preserve);
  std::unordered_set<PauliString, PauliStringHash> pres_set(pres.begin(), pres.end());
  std::vector<PauliString> sup;
  for (const auto& t : all_terms)
    if (!pres_set.count(t)) sup.push_back(t);
  return check_bounded(g, gamma, sup, pres);
}

// --- scaling ---------------------------------------------------------------

std::string family_name(Family f) {
  switch (f) {
    case Family::ModRM: return "mod-RM";
    case Family::RM: return "RM";
    case Family::LinPGd3: return "lin-PG-d3";
    case Family::LinPGd4: return "lin-PG-d4";
    case Family::AddPGd3: return "add-PG-d3";
    case Family::ModLinPGd3: return "mod-lin-PG-d3";
    case Family::ModLinPGd4: return "mod-lin-PG-d4";
    case Family::ModAddPGd3: return "mod-add-PG-d3";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  for (Family f : all_families())
    if (family_name(f) == s) return f;
  throw std::invalid_argument("unknown family: " + s);
}

std::vector<Family> all_families() {
  return {Family::ModRM,      Family::RM,         Family::LinPGd3,
          Family::LinPGd4,    Family::AddPGd3,    Family::ModLinPGd3,
          Family::ModLinPGd4, Family::ModAddPGd3};
}

namespace {

std::size_t ceil_log2(std::size_t x) {
  std::size_t m = 0;
  while ((std::size_t{1} << m) < x) ++m;
  return m;
}

std::size_t ceil_log4(std::size_t x) {
  std::size_t m = 0;
  std::size_t p = 1;
  while (p < x) { p *= 4; ++m; }
  return m;
}

std::size_t parity_h(std::size_t even_bound, std::size_t odd_bound) {
  for (std::size_t h = 1;; ++h) {
    const std::size_t need = (h % 2 == 0) ? even_bound : odd_bound;
    if ((std::size_t{1} << h) >= need) return h;
  }
}

}  // namespace

std::size_t family_generators(Family f, std::size_t chi) {
  switch (f) {
    case Family::ModRM: return ceil_log2(chi + 1);
    case Family::RM: return ceil_log2(chi) + 1;
    case Family::LinPGd3: return 2 * ceil_log4(3 * chi + 1);
    case Family::LinPGd4:
      if (chi == 6) return 6;
      if (chi == 17) return 8;
      if (chi == 41) return 10;
      throw std::invalid_argument("lin-PG-d4 supports chi in {6,17,41}");
    case Family::AddPGd3: return parity_h(3 * chi + 1, 3 * chi + 5);
    case Family::ModLinPGd3: return 2 * ceil_log4(chi + 1);
    case Family::ModLinPGd4:
      if (chi == 5) return 4;
      if (chi == 12) return 6;
      if (chi == 34) return 8;
      if (chi == 82) return 10;
      throw std::invalid_argument("mod-lin-PG-d4 supports chi in {5,12,34,82}");
    case Family::ModAddPGd3: return parity_h(chi + 1, chi + 5);
  }
  throw std::logic_error("unreachable");
}

std::vector<ScalingRow> scaling_table(const std::vector<Family>& families,
                                      std::size_t chi_min, std::size_t chi_max) {
  std::vector<ScalingRow> rows;
  for (Family f : families)
    for (std::size_t chi = chi_min; chi <= chi_max; ++chi) {
      ScalingRow r;
      r.family = f;
      r.chi = chi;
      try {
        r.generators = family_generators(f, chi);
      } catch (const std::invalid_argument&) {
        continue;  // unsupported chi for the d=4 families
      }
      r.length = std::uint64_t{1} << r.generators;
      rows.push_back(r);
    }
  return rows;
}

AdditiveCode build_family_code(Family f, std::size_t chi) {
  switch (f) {
    case Family::ModRM:
      return rm_punctured(static_cast<int>(ceil_log2(chi + 1)), chi);
    case Family::RM:
      return rm_universal(static_cast<int>(ceil_log2(chi)), chi);
    case Family::LinPGd3: {
      const int n1 = static_cast<int>(ceil_log4(3 * chi + 1));
      auto pts = pg_points(n1 - 1, 4);
      pts.resize(chi);
      return linear_pg_code(n1 - 1, pts);
    }
    case Family::LinPGd4: {
      if (chi != 6) throw std::invalid_argument("constructed lin-PG-d4 needs chi=6");
      return linear_pg_code(2, cap_set(2));
    }
    case Family::AddPGd3: return additive_pg_code(chi);
    case Family::ModLinPGd3: {
      const std::size_t base = (chi + 2) / 3;
      const int n1 = static_cast<int>(ceil_log4(3 * base + 1));
      auto pts = pg_points(n1 - 1, 4);
      pts.resize(base);
      AdditiveCode expanded = heisenberg_expand(linear_pg_code(n1 - 1, pts));
      AdditiveCode out;
      out.n = chi;
      out.alphabet = Alphabet::F4;
      for (const auto& g : expanded.generators)
        out.generators.push_back(g.truncated(chi));
      if (!out.generators_independent())
        throw std::logic_error("restricted expansion lost independence");
      return out;
    }
    case Family::ModLinPGd4: {
      if (chi == 5) return chirality_group_5col();
      if (chi == 4) return chirality_group_4col();
      throw std::invalid_argument("constructed mod-lin-PG-d4 needs chi in {4,5}");
    }
    case Family::ModAddPGd3: {
      const std::size_t base = (chi + 2) / 3;
      AdditiveCode expanded = heisenberg_expand(additive_pg_code(base));
      AdditiveCode out;
      out.n = chi;
      out.alphabet = Alphabet::F4;
      for (const auto& g : expanded.generators)
        out.generators.push_back(g.truncated(chi));
      if (!out.generators_independent())
        throw std::logic_error("restricted expansion lost independence");
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<std::vector<std::size_t>> sign_flip_sites(const TermSet& preserve) {
  const std::size_t n = preserve.n;
  // each preserved pair (u,v) contributes the equation x_u + x_v = 1
  std::vector<std::pair<std::size_t, std::size_t>> eqs;
  for (const auto& t : preserve.terms) {
    if (t.role != TermRole::Preserve) continue;
    const auto sup = t.pauli.support();
    if (sup.size() != 2) return std::nullopt;
    if (t.pauli.site(sup[0]) != t.pauli.site(sup[1])) return std::nullopt;
    eqs.push_back({sup[0], sup[1]});
  }
  if (eqs.empty()) return std::nullopt;
  // Gaussian elimination on [A | b]
  std::vector<std::vector<int>> rows;
  for (const auto& [u, v] : eqs) {
    std::vector<int> r(n + 1, 0);
    r[u] = r[v] = 1;
    r[n] = 1;
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && !rows[piv][c]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i][c])
        for (std::size_t k = 0; k <= n; ++k) rows[i][k] ^= rows[rank][k];
    pivots.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (rows[i][n]) return std::nullopt;  // inconsistent
  std::vector<int> x(n, 0);
  for (std::size_t i = 0; i < rank; ++i) x[pivots[i]] = rows[i][n];
  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < n; ++i)
    if (x[i]) sites.push_back(i);
  return sites;
}

// --- Kitaev ------------------------------------------------------------------

KitaevInstance kitaev_instance() {
  KitaevInstance inst;
  inst.w1 = PauliString("ZXZXII");
  inst.w2 = PauliString("IIXZXZ");
  inst.w3 = PauliString("XZIIZX");
  inst.conjugator_sites = {1, 4, 5};

  // Derive the nine labeled edges: exactly one endpoint in {1,4,5} and the
  // term commutes with w1, w2, w3.  The constraint has a unique solution
  // forming three perfect matchings.
  std::vector<PauliString> ws = {inst.w1, inst.w2, inst.w3};
  for (int u = 1; u <= 6; ++u)
    for (int v = u + 1; v <= 6; ++v) {
      const bool ua = u == 1 || u == 4 || u == 5;
      const bool va = v == 1 || v == 4 || v == 5;
      if (ua == va) continue;
      for (char l : {'X', 'Y', 'Z'}) {
        PauliString t(6);
        t.set_letter(u - 1, l);
        t.set_letter(v - 1, l);
        bool ok = true;
        for (const auto& w : ws)
          if (symplectic_inner(w, t)) { ok = false; break; }
        if (ok) inst.edges.push_back({u, v, l});
      }
    }
  if (inst.edges.size() != 9)
    throw std::logic_error("folded Kitaev labeling is not the expected 9 edges");

  inst.preserve.n = inst.suppress.n = 6;
  for (const auto& e : inst.edges)
    for (char l : {'X', 'Y', 'Z'}) {
      PauliString t(6);
      t.set_letter(e.u - 1, l);
      t.set_letter(e.v - 1, l);
      if (l == e.label)
        inst.preserve.add(t, 1.0, TermRole::Preserve);
      else
        inst.suppress.add(t, 1.0, TermRole::Suppress);
    }

  // Fourth commutant generator completing {w1,w2,w3} to the full
  // 4-dimensional kernel.
  TermSet par;
  par.n = 6;
  for (const auto& t : inst.preserve.terms) par.add(t.pauli, 1.0, TermRole::Preserve);
  const auto basis = selective_nullspace(par);
  if (basis.size() != 4)
    throw std::logic_error("folded Kitaev kernel is not 4-dimensional");
  AdditiveCode sub;
  sub.n = 6;
  sub.generators = {inst.w1, inst.w2, inst.w3};
  PauliString fourth;
  bool found = false;
  AdditiveCode span;
  span.n = 6;
  span.generators = basis;
  for (const auto& el : span.codewords()) {
    if (el.is_identity() || sub.contains(el)) continue;
    if (!found || el.weight() < fourth.weight() ||
        (el.weight() == fourth.weight() && el < fourth)) {
      fourth = el;
      found = true;
    }
  }
  if (!found) throw std::logic_error("no independent fourth Kitaev generator");
  inst.w4 = fourth;
  return inst;
}

}  // namespace twirlc
