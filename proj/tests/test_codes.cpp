#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "twirlc/codes.hpp"

using namespace twirlc;

namespace {

AdditiveCode from_rows(std::vector<std::string> rows) {
  AdditiveCode c;
  c.alphabet = Alphabet::F4;
  for (const auto& r : rows) c.generators.emplace_back(r);
  c.n = c.generators.front().num_sites();
  return c;
}

std::set<std::string> word_set(const AdditiveCode& c) {
  std::set<std::string> s;
  for (const auto& w : c.codewords()) s.insert(w.to_string());
  return s;
}

// Independent random additive code on n sites with <= 2n generators.
AdditiveCode random_code(std::mt19937& rng, std::size_t n) {
  AdditiveCode c;
  c.n = n;
  const std::size_t want = 1 + rng() % (2 * n);
  while (c.generators.size() < want) {
    PauliString p(n);
    for (std::size_t i = 0; i < n; ++i)
      p.set_site(i, F4(static_cast<std::uint8_t>(rng() & 3)));
    if (p.is_identity()) continue;
    c.generators.push_back(p);
    if (!c.generators_independent()) c.generators.pop_back();
  }
  return c;
}

// Exact maximum strength by direct counting.
std::size_t brute_strength(const OrthogonalArray& oa) {
  std::size_t k = 0;
  while (k < oa.columns && verify_oa_strength(oa, k + 1)) ++k;
  return k;
}

}  // namespace

TEST_CASE("dual extremes") {
  AdditiveCode full;
  full.n = 2;
  full.generators = {PauliString("XI"), PauliString("ZI"), PauliString("IX"),
                     PauliString("IZ")};
  const AdditiveCode d = dual(full);
  CHECK(d.generators.empty());

  AdditiveCode zero;
  zero.n = 2;
  CHECK(dual(zero).generators.size() == 4);
}

TEST_CASE("dual is an involution on random small codes") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const AdditiveCode c = random_code(rng, n);
    const AdditiveCode dd = dual(dual(c));
    CHECK(word_set(dd) == word_set(c));
    CHECK(c.size() * dual(c).size() ==
          (std::uint64_t{1} << (2 * n)));
  }
}

TEST_CASE("hexacode is self-dual with distance 4") {
  const AdditiveCode h = hexacode();
  CHECK(h.size() == 64);
  CHECK(min_distance(h) == 4);
  CHECK(word_set(dual(h)) == word_set(h));
}

TEST_CASE("reed-muller binary generators") {
  const AdditiveCode rm13 = rm_code(3);
  REQUIRE(rm13.generators.size() == 4);
  CHECK(rm13.generators[0].to_string() == "XXXXXXXX");
  CHECK(rm13.generators[1].to_string() == "XXXXIIII");
  CHECK(rm13.generators[2].to_string() == "XXIIXXII");
  CHECK(rm13.generators[3].to_string() == "XIXIXIXI");
  CHECK(min_distance(rm13) == 4);          // d = 2^(m-r)
  CHECK(dual_distance(rm13) == 4);         // dual is RM(m-2,m)
  CHECK(rm13.size() == 16);                // 2^(m+1)

  const AdditiveCode rm11 = rm_code(1);
  CHECK(rm11.generators[0].to_string() == "XX");
  CHECK(rm11.generators[1].to_string() == "XI");
}

TEST_CASE("universal substitution reproduces the canonical m=3 table") {
  const AdditiveCode u = rm_universal(3, 8);
  REQUIRE(u.generators.size() == 4);
  CHECK(u.generators[0].to_string() == "XXXXXXXX");
  CHECK(u.generators[1].to_string() == "XXXXZZZZ");
  CHECK(u.generators[2].to_string() == "XXIIXXII");
  CHECK(u.generators[3].to_string() == "YZYZYZYZ");
}

TEST_CASE("punctured substitution reproduces the canonical m=3 table") {
  const AdditiveCode p = rm_punctured(3, 7);
  REQUIRE(p.generators.size() == 3);
  CHECK(p.generators[0].to_string() == "XXXXZZZ");
  CHECK(p.generators[1].to_string() == "XXIIXXI");
  CHECK(p.generators[2].to_string() == "YZYZYZY");
  CHECK_THROWS(rm_punctured(3, 8));
}

TEST_CASE("universal RM column rule holds for several m") {
  for (int m = 1; m <= 5; ++m) {
    const std::size_t cols = std::size_t{1} << m;
    const AdditiveCode u = rm_universal(m, cols);
    for (std::size_t j = 0; j < cols; ++j) {
      std::set<char> letters;
      for (const auto& g : u.generators)
        if (g.letter(j) != 'I') letters.insert(g.letter(j));
      CHECK(letters.size() >= 2);
    }
  }
}

TEST_CASE("orthogonal array from the 3-color universal group") {
  const AdditiveCode c = from_rows({"XIX", "XYZ", "YIY", "YZX"});
  const OrthogonalArray oa = to_orthogonal_array(c);
  CHECK(oa.rows.size() == 16);
  CHECK(oa.columns == 3);
  CHECK(oa.strength == 2);
  CHECK(verify_oa_strength(oa, 2));
  CHECK_FALSE(verify_oa_strength(oa, 3));  // 16 < 4^3
  // each letter appears exactly four times in every column
  for (std::size_t col = 0; col < 3; ++col) {
    std::map<char, int> count;
    for (const auto& r : oa.rows) ++count[r.letter(col)];
    for (char l : {'I', 'X', 'Y', 'Z'}) CHECK(count[l] == 4);
  }
}

TEST_CASE("trivial zero code gives the strength-0 single-row array") {
  AdditiveCode zero;
  zero.n = 1;
  const OrthogonalArray oa = to_orthogonal_array(zero);
  CHECK(oa.rows.size() == 1);
  CHECK(oa.strength == 0);
}

TEST_CASE("delsarte: OA strength is exactly dual distance minus one") {
  std::mt19937 rng(2024);
  int done = 0;
  while (done < 200) {
    const std::size_t n = 1 + rng() % 4;
    const AdditiveCode c = random_code(rng, n);
    const OrthogonalArray oa = to_orthogonal_array(c);  // verifies d'-1
    CHECK(brute_strength(oa) == oa.strength);
    ++done;
  }
}

TEST_CASE("projective points: counts and canonical order") {
  CHECK(pg_points(1, 4).size() == 5);
  CHECK(pg_points(2, 4).size() == 21);
  const auto p22 = pg_points(2, 2);
  REQUIRE(p22.size() == 7);
  // the canonical binary labels P1..P7
  auto as_bits = [](const std::vector<F4>& p) {
    std::string s;
    for (auto v : p) s += v == F4::zero() ? '0' : '1';
    return s;
  };
  CHECK(as_bits(p22[0]) == "100");
  CHECK(as_bits(p22[1]) == "010");
  CHECK(as_bits(p22[2]) == "001");
  CHECK(as_bits(p22[3]) == "110");
  CHECK(as_bits(p22[4]) == "101");
  CHECK(as_bits(p22[5]) == "011");
  CHECK(as_bits(p22[6]) == "111");
}

TEST_CASE("linear PG code over all points of PG(1,4)") {
  const AdditiveCode c = linear_pg_code(1, pg_points(1, 4));
  CHECK(c.n == 5);
  CHECK(c.generators.size() == 4);
  CHECK(min_distance(dual(c)) >= 3);  // point columns pairwise independent
  const OrthogonalArray oa = to_orthogonal_array(c);
  CHECK(oa.rows.size() == 16);
  CHECK(oa.strength == 2);
}

TEST_CASE("repeated projective point is rejected") {
  auto pts = pg_points(1, 4);
  pts[1] = pts[0];
  CHECK_THROWS(linear_pg_code(1, pts));
}

TEST_CASE("single projective column degenerates to the one-site code") {
  auto pts = pg_points(1, 4);
  pts.resize(1);
  const AdditiveCode c = linear_pg_code(1, pts);
  CHECK(c.n == 1);
  CHECK(c.generators.size() == 2);
  CHECK(c.generators_independent());
}

TEST_CASE("point columns give distance at least 3 for any subset") {
  // the kernel code of a projective check matrix has no weight-2 word
  std::mt19937 rng(41);
  const auto pts = pg_points(2, 4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<F4>> cols;
    for (const auto& p : pts)
      if (rng() % 3 == 0) cols.push_back(p);
    if (cols.size() < 2) continue;
    const AdditiveCode oa_side = linear_pg_code(2, cols);
    const AdditiveCode kernel = dual(oa_side);
    if (kernel.generators.empty()) continue;
    CHECK(min_distance(kernel) >= 3);
  }
}

TEST_CASE("RM(1,4) dual distance stays 4") {
  const AdditiveCode rm14 = rm_code(4);
  CHECK(min_distance(rm14) == 8);
  CHECK(dual_distance(rm14) == 4);
}

TEST_CASE("binary RM code yields a strength-3 two-letter array") {
  const OrthogonalArray oa = to_orthogonal_array(rm_code(3));
  CHECK(oa.alphabet_size == 2);
  CHECK(oa.rows.size() == 16);
  CHECK(oa.columns == 8);
  CHECK(oa.strength == 3);
  CHECK_FALSE(verify_oa_strength(oa, 4));
}

TEST_CASE("cap sets") {
  const auto cap2 = cap_set(2);
  CHECK(cap2.size() == 6);
  CHECK(no_three_collinear(cap2));
  const auto cap3 = cap_set(3);
  CHECK(cap3.size() >= 8);
  CHECK(no_three_collinear(cap3));
}

TEST_CASE("PG(3,2) spread matches the canonical table") {
  const auto s = spread_pg32();
  REQUIRE(s.size() == 5);
  // all 15 points covered exactly once
  std::set<std::vector<std::uint8_t>> pts;
  for (const auto& l : s) {
    std::vector<std::uint8_t> sum(4);
    for (int i = 0; i < 4; ++i) sum[i] = l.p[i] ^ l.q[i];
    pts.insert(l.p);
    pts.insert(l.q);
    pts.insert(sum);
  }
  CHECK(pts.size() == 15);

  const AdditiveCode c = code_from_lines(4, s);
  REQUIRE(c.generators.size() == 4);
  CHECK(c.generators[0].to_string() == "XIXXX");
  CHECK(c.generators[1].to_string() == "ZIYZY");
  CHECK(c.generators[2].to_string() == "IXZXY");
  CHECK(c.generators[3].to_string() == "IZXZZ");
}

TEST_CASE("additive PG code parameters") {
  CHECK(additive_pg_h(1) == 2);
  CHECK(additive_pg_h(5) == 4);
  CHECK(additive_pg_h(6) == 5);
  CHECK(additive_pg_h(9) == 5);
  CHECK(additive_pg_h(10) == 6);

  const AdditiveCode c1 = additive_pg_code(1);
  CHECK(c1.generators.size() == 2);  // single-qubit universal pair

  const AdditiveCode c5 = additive_pg_code(5);
  CHECK(c5.generators.size() == 4);
  CHECK(c5.generators[0].to_string() == "XIXXX");  // via the canonical spread

  for (std::size_t chi = 2; chi <= 9; ++chi) {
    const AdditiveCode c = additive_pg_code(chi);
    CHECK(c.generators.size() ==
          static_cast<std::size_t>(additive_pg_h(chi)));
    CHECK(verify_oa_strength(to_orthogonal_array(c), 2));
  }
}

TEST_CASE("heisenberg expansion triples the columns") {
  const AdditiveCode base = code_from_lines(4, spread_pg32());
  const AdditiveCode ex = heisenberg_expand(base);
  REQUIRE(ex.n == 15);
  REQUIRE(ex.generators.size() == 4);
  CHECK(ex.generators[0].to_string() == "XZYIIIXZYXZYXZY");
  CHECK(ex.generators[1].to_string() == "ZYXIIIYXZZYXYXZ");
  CHECK(ex.generators[2].to_string() == "IIIXZYZYXXZYYXZ");
  CHECK(ex.generators[3].to_string() == "IIIZYXXZYZYXZYX");

  // no equal-letter weight-two codeword on any column pair
  for (std::size_t i = 0; i < 15; ++i)
    for (std::size_t j = i + 1; j < 15; ++j)
      for (char l : {'X', 'Y', 'Z'}) {
        PauliString t(15);
        t.set_letter(i, l);
        t.set_letter(j, l);
        bool detected = false;
        for (const auto& g : ex.generators)
          if (symplectic_inner(g, t)) { detected = true; break; }
        CHECK(detected);
      }
}

TEST_CASE("single-column heisenberg expansion") {
  AdditiveCode c;
  c.n = 1;
  c.generators = {PauliString("X"), PauliString("Z")};
  const AdditiveCode ex = heisenberg_expand(c);
  CHECK(ex.n == 3);
  CHECK(ex.generators.size() == 2);
}

TEST_CASE("chirality groups match the tailored matrices") {
  const AdditiveCode c4 = chirality_group_4col();
  CHECK(c4.generators.size() == 4);  // L = 16
  const AdditiveCode c5 = chirality_group_5col();
  CHECK(c5.generators.size() == 4);

  const AdditiveCode derived = chirality_derive_4col();
  REQUIRE(derived.generators.size() == 4);
  CHECK(derived.generators[0].to_string() == "XXZY");
  CHECK(derived.generators[1].to_string() == "XZXZ");
  CHECK(derived.generators[2].to_string() == "ZZYX");
  CHECK(derived.generators[3].to_string() == "ZYZY");
}

TEST_CASE("pg22 sudoku table and canonical solution") {
  const Pg22Search s = pg22_sudoku_search();
  // published addition table rows
  const int expected[7][7] = {
      {0, 4, 5, 2, 3, 7, 6}, {4, 0, 6, 1, 7, 3, 5}, {5, 6, 0, 7, 1, 2, 4},
      {2, 1, 7, 0, 6, 5, 3}, {3, 7, 1, 6, 0, 4, 2}, {7, 3, 2, 5, 4, 0, 1},
      {6, 5, 4, 3, 2, 1, 0}};
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c) CHECK(s.table[r][c] == expected[r][c]);

  // exhaustive maximum is a complete 7-cell system
  CHECK(s.best.size() == 7);

  // the canonical 5-line solution is consistent and reproduces the
  // published 3-generator matrix
  for (const auto& cell : pg22_canonical_cells())
    CHECK(s.table[cell.row - 1][cell.col - 1] == cell.entry);
  const AdditiveCode code = pg22_code(5);
  REQUIRE(code.generators.size() == 3);
  CHECK(code.generators[0].to_string() == "XIZXY");
  CHECK(code.generators[1].to_string() == "ZXZYZ");
  CHECK(code.generators[2].to_string() == "IZXZY");
}

TEST_CASE("pg22 code detects single-qubit and heisenberg terms") {
  for (std::size_t chi : {4u, 5u}) {
    const AdditiveCode code = pg22_code(chi);
    for (std::size_t i = 0; i < chi; ++i)
      for (char l : {'X', 'Y', 'Z'}) {
        PauliString t = PauliString::single(chi, i, l);
        bool det = false;
        for (const auto& g : code.generators)
          det = det || symplectic_inner(g, t);
        CHECK(det);
      }
    for (std::size_t i = 0; i < chi; ++i)
      for (std::size_t j = i + 1; j < chi; ++j)
        for (char l : {'X', 'Y', 'Z'}) {
          PauliString t(chi);
          t.set_letter(i, l);
          t.set_letter(j, l);
          bool det = false;
          for (const auto& g : code.generators)
            det = det || symplectic_inner(g, t);
          CHECK(det);
        }
  }
}

TEST_CASE("codeword membership matches the dual-commutation criterion") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const AdditiveCode c = random_code(rng, n);
    const AdditiveCode d = dual(c);
    // P commutes with all generators of c iff its vector lies in dual(c)
    const std::size_t total = std::size_t{1} << (2 * n);
    for (std::size_t mask = 0; mask < total; ++mask) {
      PauliString p(n);
      for (std::size_t i = 0; i < n; ++i)
        p.set_site(i, F4(static_cast<std::uint8_t>((mask >> (2 * i)) & 3)));
      bool commutes = true;
      for (const auto& g : c.generators)
        commutes = commutes && symplectic_inner(g, p) == 0;
      CHECK(commutes == d.contains(p));
    }
  }
}
