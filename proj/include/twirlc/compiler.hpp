#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twirlc/codes.hpp"
#include "twirlc/device_graph.hpp"
#include "twirlc/pauli.hpp"

namespace twirlc {

// Decoupling group on colored qubits, given by independent Pauli-string
// generators.  Products are phase-free, so the group is elementary
// abelian of order 2^m.
struct DDGroup {
  std::size_t chi = 0;
  std::vector<PauliString> generators;

  static DDGroup from_code(const AdditiveCode& c) { return {c.n, c.generators}; }
  AdditiveCode as_code() const { return {chi, generators, Alphabet::F4}; }

  std::uint64_t order() const { return std::uint64_t{1} << generators.size(); }
  // all 2^m products in generator-mask order: I, g1, g2, g1 g2, g3, ...
  std::vector<PauliString> elements() const;
};

enum class TermRole { Preserve, Suppress };

struct Term {
  PauliString pauli;
  double coeff = 1.0;
  TermRole role = TermRole::Suppress;
};

struct TermSet {
  std::size_t n = 0;
  std::vector<Term> terms;  // deduplicated by string

  void add(const PauliString& p, double coeff = 1.0,
           TermRole role = TermRole::Suppress);
  std::vector<PauliString> paulis(TermRole role) const;
};

enum class TermStatus { Suppressed, Preserved };

struct TermVerdict {
  PauliString term;
  TermStatus status = TermStatus::Preserved;
  std::optional<PauliString> witness;  // anticommuting generator when suppressed
};

struct Verdict {
  bool universal = false;  // all enumerated terms suppressed
  std::vector<TermVerdict> terms;

  std::optional<TermVerdict> first_preserved() const;
};

// True iff some generator anticommutes with t; the witness is the first
// such generator.
bool suppresses(const DDGroup& g, const PauliString& t,
                std::optional<PauliString>* witness = nullptr);

// Conjugation signs of t over the group elements, in codeword order.
// Sums to |G| when preserved and to 0 when suppressed.
std::vector<int> twirl_sign_profile(const DDGroup& g, const PauliString& t);

// Every Pauli term of weight <= k supported on a quotient hyperedge, per
// its interaction model, plus all 1-local on-site terms.
std::vector<PauliString> enumerate_quotient_terms(
    const QuotientGraph& q, std::size_t k,
    std::optional<Model> model_override = std::nullopt);

// Classifies every enumerated term; universal iff all are suppressed.
Verdict check_universal(const DDGroup& g, const QuotientGraph& q, std::size_t k,
                        std::optional<Model> model_override = std::nullopt);

Verdict classify_terms(const DDGroup& g, const std::vector<PauliString>& terms);

// F2 basis of the commutant of the given terms: all strings whose
// symplectic product with every term vanishes.  Gaussian elimination;
// dimension = 2n - rank.
std::vector<PauliString> selective_nullspace(const TermSet& h_par);

bool in_span(const std::vector<PauliString>& basis, const PauliString& p);

struct CoverResult {
  std::vector<std::size_t> chosen;  // indices into the candidate list
  bool optimal = true;              // false when the greedy fallback ran
  std::size_t greedy_gap = 0;       // upper bound minus lower bound when greedy
  std::optional<PauliString> infeasible_term;
};

// Minimum set cover: the smallest candidate subset such that every
// suppress-target anticommutes with a chosen generator.  Exact branch
// and bound up to 24 candidates (ties: first feasible in candidate
// order after sorting by weight), greedy with a reported gap beyond.
CoverResult min_cover(const std::vector<PauliString>& candidates,
                      const TermSet& h_perp);

// Support closure of t under bounded-control implementation of the
// generators: each generator acts as parallel single-site rotations, so
// every subset of the anticommuting sites may flip to the product
// letter.  Coefficients are not tracked.
std::vector<PauliString> bounded_support(const PauliString& t,
                                         const std::vector<PauliString>& gamma);

// Iterated closure (fixpoint); used by property tests.
std::vector<PauliString> bounded_support_fixpoint(
    const PauliString& t, const std::vector<PauliString>& gamma);

struct BoundedCheck {
  bool ok = false;
  std::optional<PauliString> offending_term;     // model term whose image leaks
  std::optional<PauliString> leaked;             // the undetected image
};

// Bounded-control verdict: for every model term, each element of its
// bounded support must either be suppressed by g or lie in the preserved
// set (leakage into preserved terms only renormalizes couplings).
BoundedCheck check_bounded(const DDGroup& g,
                           const std::vector<PauliString>& gamma,
                           const std::vector<PauliString>& suppress_targets,
                           const std::vector<PauliString>& preserve_targets);

// Convenience overload driven by a quotient graph model.
BoundedCheck check_bounded(const DDGroup& g,
                           const std::vector<PauliString>& gamma,
                           const QuotientGraph& q, std::size_t k,
                           std::optional<Model> model_override,
                           const TermSet& preserve);

// --- sequence-length scaling ---------------------------------------------

enum class Family {
  ModRM,
  RM,
  LinPGd3,
  LinPGd4,
  AddPGd3,
  ModLinPGd3,
  ModLinPGd4,
  ModAddPGd3,
};

std::string family_name(Family f);
Family family_from_name(const std::string& s);
std::vector<Family> all_families();

struct ScalingRow {
  Family family;
  std::size_t chi = 0;
  std::size_t generators = 0;
  std::uint64_t length = 0;  // 2^generators
};

// Generator counts per family:
//   mod-RM        ceil(log2(chi+1))
//   RM            ceil(log2(chi)) + 1
//   lin-PG d3     2 ceil(log4(3chi+1))
//   lin-PG d4     6,8,10 at chi = 6,17,41
//   add-PG d3     h with 2^h >= 3chi+1 (h even) / 3chi+5 (h odd)
//   mod-lin-PG d3 2 ceil(log4(chi+1))
//   mod-lin-PG d4 4,6,8,10 at chi = 5,12,34,82
//   mod-add-PG d3 h with 2^h >= chi+1 (h even) / chi+5 (h odd)
// Throws for unsupported chi of the d=4 families.
std::size_t family_generators(Family f, std::size_t chi);

std::vector<ScalingRow> scaling_table(const std::vector<Family>& families,
                                      std::size_t chi_min, std::size_t chi_max);

// Builds the family's code at the given chi (chi <= 8 intended); used to
// cross-check the table against real constructions.
AdditiveCode build_family_code(Family f, std::size_t chi);

// Vertex set with odd overlap with every preserved term's support, for
// preserve sets made of same-letter pairs.  Conjugating by X_S, Y_S and
// Z_S in turn then flips the sign of every preserved term while each
// suppressed term stays suppressed.  Empty when the F2 system has no
// solution or a preserve term is not a same-letter pair.
std::optional<std::vector<std::size_t>> sign_flip_sites(const TermSet& preserve);

// --- Kitaev instance -------------------------------------------------------

struct KitaevEdge {
  int u, v;     // 1-based vertices
  char label;   // 'X', 'Y' or 'Z'
};

// The folded six-vertex interaction graph with per-edge couplings,
// derived as the unique 9-edge labeling (three perfect matchings between
// {1,4,5} and {2,3,6}) whose terms commute with the three plaquette
// half-operators below.
struct KitaevInstance {
  std::vector<KitaevEdge> edges;          // 9 labeled edges
  PauliString w1, w2, w3, w4;             // commutant generators
  TermSet preserve;                       // the labeled edge terms
  TermSet suppress;                       // the mismatched pair terms
  std::vector<int> conjugator_sites;      // {1,4,5}
};

KitaevInstance kitaev_instance();

}  // namespace twirlc
