#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twirlc/pauli.hpp"

namespace twirlc {

enum class Alphabet { F2, F4 };

// Additive code over F4 (or binary code over F2) given by independent
// generators, stored as Pauli strings via I->0, X->1, Z->w, Y->1+w.
// |C| = 2^m for m generators.
struct AdditiveCode {
  std::size_t n = 0;
  std::vector<PauliString> generators;
  Alphabet alphabet = Alphabet::F4;

  std::size_t dimension() const { return generators.size(); }
  std::uint64_t size() const { return std::uint64_t{1} << generators.size(); }

  // All 2^m codewords, in generator-mask order.
  std::vector<PauliString> codewords() const;

  bool generators_independent() const;
  bool contains(const PauliString& word) const;
};

struct OrthogonalArray {
  std::vector<PauliString> rows;
  std::size_t columns = 0;
  std::size_t alphabet_size = 4;
  std::size_t strength = 0;  // verified
};

// Trace-Hermitian dual: all vectors whose symplectic pairing with every
// generator vanishes.  |C| * |dual| = 2^(2n).
AdditiveCode dual(const AdditiveCode& c);

// Exact minimum Hamming weight over the nonzero codewords; n+1 for the
// zero code.  Throws when |C| > 2^24.
std::size_t min_distance(const AdditiveCode& c);
std::size_t dual_distance(const AdditiveCode& c);

// Rows = all codewords; strength = dual_distance - 1, then re-verified
// exhaustively.  Throws if verification fails.
OrthogonalArray to_orthogonal_array(const AdditiveCode& c);

// Exhaustive strength check: every k-column projection covers each
// k-tuple of the alphabet equally often.
bool verify_oa_strength(const OrthogonalArray& oa, std::size_t k);

// --- Reed-Muller family -------------------------------------------------

// Binary RM(1,m): length 2^m, generators = constant-1 row plus the m
// coordinate rows; column j holds the bits of 2^m-1-j (x1 = msb).
AdditiveCode rm_code(int m);

// Pauli substitution of RM(1,m) columns restricted to chi colors, chosen
// so every kept column carries at least two distinct non-identity
// letters.  The m=3 pattern is the canonical X/Z/I/Y table; other m use
// the same row recipe (row 0 all X; row i>0 maps 1->X (last row 1->Y),
// 0 -> Z on odd rows and I on even rows, repaired if a column fails the
// two-letter rule).
AdditiveCode rm_universal(int m, std::size_t chi);

// Modified punctured RM(1,m): drop the constant row and the last column;
// chi <= 2^m - 1 columns remain, m generators.
AdditiveCode rm_punctured(int m, std::size_t chi);

// Pure X-substitution rows of RM(1,m) (1->X, 0->I).
AdditiveCode rm_xtype(int m, std::size_t chi, bool punctured);

// Appends the all-Z generator; used by bounded-control constructions.
AdditiveCode with_all_z_generator(const AdditiveCode& c);

// --- Projective geometry ------------------------------------------------

// Canonical points of PG(n,q), q in {2,4}: one representative per class
// with first nonzero coordinate 1, ordered by weight then descending
// lexicographic (so unit vectors come first).
std::vector<std::vector<F4>> pg_points(int n, int q);

// Linear code whose check matrix columns are the given projective points
// over F4; returns the additive generators of the dual (rows and w*rows
// of the check matrix), i.e. the decoupling-group side.
AdditiveCode linear_pg_code(int n, const std::vector<std::vector<F4>>& columns);

// Cap set in PG(n,4): no three collinear points.  n=2 returns the
// 6-point hyperoval formed by the hexacode generator-matrix columns;
// larger n fall back to a verified greedy (maximality not claimed).
std::vector<std::vector<F4>> cap_set(int n);

bool no_three_collinear(const std::vector<std::vector<F4>>& points);

// A line in PG(h-1,2) given by an ordered pair of independent points.
struct LineF2 {
  std::vector<std::uint8_t> p, q;
};

// The canonical complete 1-spread of PG(3,2): five pairwise disjoint
// lines covering all 15 points.
std::vector<LineF2> spread_pg32();

// Partial 1-spread of PG(h-1,2) with chi pairwise independent lines,
// found greedily with shallow backtracking.  Throws if the target size
// is infeasible for the search.
std::vector<LineF2> partial_spread(int h, std::size_t chi);

// Additive PG code: chi columns from a (partial) spread in PG(h-1,2)
// where h is the smallest integer with 2^h >= 3chi+1 (h even) or
// 2^h >= 3chi+5 (h odd); h generators, strength-2 OA after dualizing.
AdditiveCode additive_pg_code(std::size_t chi);

// Smallest h with 2^h >= 3chi+1 for even h / 3chi+5 for odd h.
int additive_pg_h(std::size_t chi);

// Column expansion c -> (c, w c, w^2 c): triples the colors and removes
// every equal-letter pair codeword, so Heisenberg terms become
// detectable.
AdditiveCode heisenberg_expand(const AdditiveCode& code);

// The self-dual hexacode as an additive code (six generators: the three
// F4-linear rows and their w multiples).
AdditiveCode hexacode();

// Tailored chirality groups for the 4- and 5-color quotients:
// 4 generators, 16 frames, suppressing single-qubit, Heisenberg-exchange
// and scalar-chirality terms.  `derive` reproduces the 4-column matrix
// from the hexacode tail plus a minimum cover.
AdditiveCode chirality_group_4col();
AdditiveCode chirality_group_5col();
AdditiveCode chirality_derive_4col();

// --- PG(2,2) sudoku construction ---------------------------------------

struct Pg22Cell {
  int row, col, entry;  // 1-based point indices; P_row + P_col = P_entry
};

struct Pg22Search {
  std::array<std::array<int, 7>, 7> table;  // P-addition table, 0 on diagonal
  std::vector<Pg22Cell> best;               // maximum assignment found
};

// Exhaustive search over the 7x7 point-addition table for a maximum set
// of cells with pairwise distinct rows, columns and entries.
Pg22Search pg22_sudoku_search();

// Canonical published 5-line solution and its 3-generator code,
// restricted to chi <= 5 columns.
std::vector<Pg22Cell> pg22_canonical_cells();
AdditiveCode pg22_code(std::size_t chi);

// Build the additive code whose columns are the given PG(h-1,2) lines
// (pair map (p_k, q_k) -> p_k + w q_k per coordinate, rows as gens).
AdditiveCode code_from_lines(int h, const std::vector<LineF2>& lines);

}  // namespace twirlc
