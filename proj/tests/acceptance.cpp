// Acceptance suite: exercises the quantitative claims end to end and
// prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "twirlc/io.hpp"
#include "twirlc/oracle.hpp"
#include "twirlc/schedule.hpp"

using namespace twirlc;

namespace {

const std::string kData = TWIRLC_DATA_DIR;
int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::printf("[%s] criterion %d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL",
              number, label.c_str(), static_cast<long long>(ms),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

DDGroup group_from(std::vector<std::string> rows) {
  DDGroup g;
  for (const auto& r : rows) g.generators.emplace_back(r);
  g.chi = g.generators.front().num_sites();
  return g;
}

bool detects(const std::vector<PauliString>& gens, const PauliString& t) {
  for (const auto& g : gens)
    if (symplectic_inner(g, t)) return true;
  return false;
}

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

QuotientGraph hex_square_quotient() {
  const DeviceGraph dev = io::load_device(kData + "/devices/square.json");
  const Coloring col =
      io::load_coloring(kData + "/colorings/square_paper.json");
  return quotient(dev, col);
}

QuotientGraph trilinear_quotient() {
  const DeviceGraph dev = io::load_device(kData + "/devices/trilinear.json");
  const Coloring col =
      io::load_coloring(kData + "/colorings/trilinear_paper.json");
  return quotient(dev, col);
}

}  // namespace

int main() {
  criterion(1, "16-row strength-2 array from the 3-color group", [](std::string&) {
    const AdditiveCode c{3, {PauliString("XIX"), PauliString("XYZ"),
                             PauliString("YIY"), PauliString("YZX")}, Alphabet::F4};
    const OrthogonalArray oa = to_orthogonal_array(c);
    if (oa.rows.size() != 16 || oa.columns != 3 || oa.strength != 2) return false;
    if (!verify_oa_strength(oa, 2) || verify_oa_strength(oa, 3)) return false;
    for (std::size_t col = 0; col < 3; ++col) {
      std::map<char, int> count;
      for (const auto& r : oa.rows) ++count[r.letter(col)];
      for (char l : {'I', 'X', 'Y', 'Z'})
        if (count[l] != 4) return false;
    }
    return true;
  });

  criterion(2, "strength equals dual distance minus one on 200 random codes",
            [](std::string&) {
    std::mt19937 rng(20240617);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      const AdditiveCode c = random_code(rng, n);
      const OrthogonalArray oa = to_orthogonal_array(c);  // throws on mismatch
      std::size_t k = 0;
      while (k < oa.columns && verify_oa_strength(oa, k + 1)) ++k;
      if (k != oa.strength) return false;
    }
    return true;
  });

  criterion(3, "RM family tables, lengths and verdicts", [](std::string& detail) {
    const AdditiveCode bin = rm_code(3);
    const char* tab_a[4] = {"XXXXXXXX", "XXXXIIII", "XXIIXXII", "XIXIXIXI"};
    for (int i = 0; i < 4; ++i)
      if (bin.generators[i].to_string() != tab_a[i]) return false;
    const AdditiveCode uni = rm_universal(3, 8);
    const char* tab_b[4] = {"XXXXXXXX", "XXXXZZZZ", "XXIIXXII", "YZYZYZYZ"};
    for (int i = 0; i < 4; ++i)
      if (uni.generators[i].to_string() != tab_b[i]) return false;
    const AdditiveCode pun = rm_punctured(3, 7);
    const char* tab_c[3] = {"XXXXZZZ", "XXIIXXI", "YZYZYZY"};
    for (int i = 0; i < 3; ++i)
      if (pun.generators[i].to_string() != tab_c[i]) return false;

    const QuotientGraph q = hex_square_quotient();
    if (q.chi != 6) return false;

    const DDGroup g16 = DDGroup::from_code(rm_universal(3, 6));
    if (g16.order() != 16) return false;  // L = 16
    if (!check_universal(g16, q, 3).universal) return false;

    const DDGroup g8 = DDGroup::from_code(rm_punctured(3, 6));
    if (g8.order() != 8) return false;  // L = 8
    if (!check_universal(g8, q, 2).universal) return false;
    const Verdict v3 = check_universal(g8, q, 3);
    if (v3.universal) return false;  // a ZZZ term must survive
    const auto bad = v3.first_preserved();
    if (!bad || bad->term.weight() != 3) return false;
    for (std::size_t i = 0; i < 6; ++i) {
      const char l = bad->term.letter(i);
      if (l != 'I' && l != 'Z') return false;
    }
    detail = "ZZZ counterexample " + bad->term.to_string();
    return true;
  });

  criterion(4, "spin-qubit family: spread, expansion, chirality", [](std::string&) {
    const AdditiveCode spread_code = code_from_lines(4, spread_pg32());
    const char* iva[4] = {"XIXXX", "ZIYZY", "IXZXY", "IZXZZ"};
    for (int i = 0; i < 4; ++i)
      if (spread_code.generators[i].to_string() != iva[i]) return false;
    const OrthogonalArray oa = to_orthogonal_array(spread_code);
    if (oa.rows.size() != 16 || oa.columns != 5 || oa.strength != 2) return false;

    const AdditiveCode ex = heisenberg_expand(spread_code);
    if (ex.n != 15 || ex.generators.size() != 4) return false;
    const char* ivb[4] = {"XZYIIIXZYXZYXZY", "ZYXIIIYXZZYXYXZ",
                          "IIIXZYZYXXZYYXZ", "IIIZYXXZYZYXZYX"};
    for (int i = 0; i < 4; ++i)
      if (ex.generators[i].to_string() != ivb[i]) return false;
    for (std::size_t i = 0; i < 15; ++i)
      for (std::size_t j = i + 1; j < 15; ++j)
        for (char l : {'X', 'Y', 'Z'}) {
          PauliString t(15);
          t.set_letter(i, l);
          t.set_letter(j, l);
          if (!detects(ex.generators, t)) return false;
        }

    const QuotientGraph q = trilinear_quotient();
    const DDGroup c4 = DDGroup::from_code(chirality_group_4col());
    if (!check_universal(c4, q, 3).universal) return false;
    if (c4.order() != 16) return false;  // L = 16

    const DDGroup c5 = DDGroup::from_code(chirality_group_5col());
    QuotientGraph q5;  // worst-case 5-color spin quotient
    q5.chi = 5;
    q5.onsite.assign(5, {'X', 'Y', 'Z'});
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        q5.hyperedges.push_back({{i, j}, Model::Heisenberg, {}});
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j)
        for (int k = j + 1; k <= 5; ++k)
          q5.hyperedges.push_back({{i, j, k}, Model::Chirality, {}});
    if (!check_universal(c5, q5, 3).universal) return false;
    if (c5.order() != 16) return false;

    // universal three-local alternative needs 64 frames
    auto cap = cap_set(2);
    cap.resize(4);
    const DDGroup u3 = DDGroup::from_code(linear_pg_code(2, cap));
    if (u3.order() != 64) return false;
    if (!check_universal(u3, q, 3, Model::All).universal) return false;
    return true;
  });

  criterion(5, "PG(2,2) sudoku code for 4 and 5 colors", [](std::string&) {
    const Pg22Search s = pg22_sudoku_search();
    const auto canon = pg22_canonical_cells();
    for (const auto& cell : canon)
      if (s.table[cell.row - 1][cell.col - 1] != cell.entry) return false;
    const AdditiveCode code = pg22_code(5);
    const char* rows[3] = {"XIZXY", "ZXZYZ", "IZXZY"};
    for (int i = 0; i < 3; ++i)
      if (code.generators[i].to_string() != rows[i]) return false;
    for (std::size_t chi : {4u, 5u}) {
      const AdditiveCode c = pg22_code(chi);
      if (c.generators.size() != 3) return false;
      for (std::size_t i = 0; i < chi; ++i)
        for (char l : {'X', 'Y', 'Z'})
          if (!detects(c.generators, PauliString::single(chi, i, l))) return false;
      for (std::size_t i = 0; i < chi; ++i)
        for (std::size_t j = i + 1; j < chi; ++j)
          for (char l : {'X', 'Y', 'Z'}) {
            PauliString t(chi);
            t.set_letter(i, l);
            t.set_letter(j, l);
            if (!detects(c.generators, t)) return false;
          }
    }
    return true;
  });

  criterion(6, "selective synthesis on the folded Kitaev instance",
            [](std::string& detail) {
    const KitaevInstance inst = kitaev_instance();
    const auto basis = selective_nullspace(inst.preserve);
    if (basis.size() != 4) return false;
    for (const auto& w : {inst.w1, inst.w2, inst.w3, inst.w4})
      if (!in_span(basis, w)) return false;

    const std::vector<PauliString> cands = {inst.w1, inst.w2, inst.w3, inst.w4};
    const CoverResult cover = min_cover(cands, inst.suppress);
    if (cover.chosen.size() != 2) return false;
    const DDGroup g{6, {cands[cover.chosen[0]], cands[cover.chosen[1]]}};
    const DDGroup ref{6, {inst.w1, inst.w2}};
    for (const auto& t : inst.suppress.terms)
      if (!suppresses(g, t.pauli) || !suppresses(ref, t.pauli)) return false;
    for (const auto& t : inst.preserve.terms)
      if (suppresses(g, t.pauli) || suppresses(ref, t.pauli)) return false;

    const auto sup = inst.suppress.paulis(TermRole::Suppress);
    const auto pres = inst.preserve.paulis(TermRole::Preserve);
    const std::vector<PauliString> all4 = {inst.w1, inst.w2, inst.w3, inst.w4};
    if (!check_bounded(DDGroup{6, all4}, all4, sup, pres).ok) return false;
    for (std::size_t drop = 0; drop < 4; ++drop) {
      std::vector<PauliString> three;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != drop) three.push_back(all4[i]);
      if (check_bounded(DDGroup{6, three}, three, sup, pres).ok) return false;
    }
    detail = "fourth generator " + inst.w4.to_string();
    return true;
  });

  criterion(7, "numeric oracle: twirls, slopes, engineering identities",
            [](std::string& detail) {
    const std::vector<DDGroup> groups = {
        group_from({"X", "Z"}),
        group_from({"XYZ", "YZX"}),
        group_from({"XIX", "XYZ", "YIY", "YZX"}),
        group_from({"XXZY", "XZXZ", "ZZYX", "ZYZY"}),
        group_from({"XIXXX", "ZIYZY", "IXZXY", "IZXZZ"}),
    };
    for (const auto& g : groups) {
      const std::size_t total = std::size_t{1} << (2 * g.chi);
      for (std::size_t mask = 1; mask < total; ++mask) {
        PauliString p(g.chi);
        for (std::size_t i = 0; i < g.chi; ++i)
          p.set_site(i, F4(static_cast<std::uint8_t>((mask >> (2 * i)) & 3)));
        const Matrix tw = first_order_twirl(g, dense_pauli(p));
        const double err = suppresses(g, p)
                               ? tw.norm()
                               : (tw - dense_pauli(p)).norm();
        if (err > 1e-12) return false;
      }
    }

    std::mt19937 rng(77);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    const std::vector<double> deltas = {1e-3, 3e-3, 1e-2, 3e-2, 1e-1};
    auto slope_of = [&](const DDGroup& g, const TermSet& ts) {
      const Schedule s = emit_bang_bang(g);
      return stroboscopic_error(s, build_hamiltonian(ts), deltas).slope;
    };

    TermSet xy4;
    xy4.n = 1;
    for (char l : {'X', 'Y', 'Z'}) xy4.add(PauliString::single(1, 0, l), coeff(rng));
    const double s1 = slope_of(group_from({"X", "Z"}), xy4);

    TermSet two_local;
    two_local.n = 3;
    for (int i = 0; i < 3; ++i)
      for (char l : {'X', 'Y', 'Z'})
        two_local.add(PauliString::single(3, i, l), coeff(rng));
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        for (char a : {'X', 'Y', 'Z'})
          for (char b : {'X', 'Y', 'Z'}) {
            PauliString t(3);
            t.set_letter(i, a);
            t.set_letter(j, b);
            two_local.add(t, coeff(rng));
          }
    const double s2 = slope_of(group_from({"XIX", "XYZ", "YIY", "YZX"}), two_local);

    TermSet spin;
    spin.n = 4;
    for (int i = 0; i < 4; ++i)
      for (char l : {'X', 'Y', 'Z'})
        spin.add(PauliString::single(4, i, l), coeff(rng));
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (char l : {'X', 'Y', 'Z'}) {
          PauliString t(4);
          t.set_letter(i, l);
          t.set_letter(j, l);
          spin.add(t, coeff(rng));
        }
    const char perms[6][3] = {{'X', 'Y', 'Z'}, {'X', 'Z', 'Y'}, {'Y', 'X', 'Z'},
                              {'Y', 'Z', 'X'}, {'Z', 'X', 'Y'}, {'Z', 'Y', 'X'}};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k)
          for (const auto& p : perms) {
            PauliString t(4);
            t.set_letter(i, p[0]);
            t.set_letter(j, p[1]);
            t.set_letter(k, p[2]);
            spin.add(t, coeff(rng));
          }
    const double s3 =
        slope_of(group_from({"XXZY", "XZXZ", "ZZYX", "ZYZY"}), spin);

    char buf[96];
    std::snprintf(buf, sizeof buf, "slopes %.3f %.3f %.3f", s1, s2, s3);
    detail = buf;
    for (double s : {s1, s2, s3})
      if (s < 1.8 || s > 2.2) return false;

    const KitaevReport rep = kitaev_verify(1e-12);
    return rep.ok;
  });

  criterion(8, "bounded control lengths", [](std::string&) {
    // Eulerian length |G| |Gamma| across the constructed groups
    std::vector<DDGroup> groups = {
        group_from({"X", "Z"}),
        group_from({"XIX", "XYZ", "YIY", "YZX"}),
        group_from({"XXZY", "XZXZ", "ZZYX", "ZYZY"}),
        DDGroup::from_code(additive_pg_code(5)),
        DDGroup::from_code(with_all_z_generator(rm_xtype(3, 6, false))),
    };
    const KitaevInstance inst = kitaev_instance();
    groups.push_back(DDGroup{6, {inst.w1, inst.w2, inst.w3, inst.w4}});
    for (const auto& g : groups) {
      const auto walk = cayley_cycle(g, g.generators);
      if (walk.size() != g.order() * g.generators.size()) return false;
    }

    // bounded RM length 2^(ceil(log2(chi+1))+1) (ceil(log2(chi+1))+1)
    for (std::size_t chi : {6u, 7u}) {
      std::size_t m = 0;
      while ((std::size_t{1} << m) < chi + 1) ++m;
      const std::size_t expect = (std::size_t{1} << (m + 1)) * (m + 1);
      const AdditiveCode c =
          with_all_z_generator(rm_xtype(static_cast<int>(m), chi, true));
      const DDGroup g = DDGroup::from_code(c);
      const auto walk = cayley_cycle(g, g.generators);
      if (walk.size() != expect || walk.size() != 64) return false;
    }

    // bounded Kitaev slice count
    const DDGroup kg{6, {inst.w1, inst.w2, inst.w3, inst.w4}};
    return cayley_cycle(kg, kg.generators).size() == 64;
  });

  criterion(9, "scaling tables match formulas and constructions",
            [](std::string&) {
    const auto rows = scaling_table(all_families(), 2, 64);
    for (const auto& r : rows) {
      if (r.length != (std::uint64_t{1} << r.generators)) return false;
      if (family_generators(r.family, r.chi) != r.generators) return false;
    }
    // d=4 families appear only at their supported sizes
    std::set<std::size_t> lin4, mod4;
    for (const auto& r : rows) {
      if (r.family == Family::LinPGd4) lin4.insert(r.chi);
      if (r.family == Family::ModLinPGd4) mod4.insert(r.chi);
    }
    if (lin4 != std::set<std::size_t>{6, 17, 41}) return false;
    if (mod4 != std::set<std::size_t>{5, 12, 34}) return false;  // 82 > 64

    for (Family f : all_families())
      for (std::size_t chi = 2; chi <= 8; ++chi) {
        std::size_t expected;
        try {
          expected = family_generators(f, chi);
        } catch (const std::invalid_argument&) {
          continue;
        }
        if ((f == Family::LinPGd4 && chi != 6) ||
            (f == Family::ModLinPGd4 && chi != 5))
          continue;
        const AdditiveCode c = build_family_code(f, chi);
        if (c.generators.size() != expected || c.n != chi) return false;
      }
    return true;
  });

  if (failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
