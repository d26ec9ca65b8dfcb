#include "twirlc/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace twirlc {

namespace {

// Dense F2 row: the (x|z) bits of a length-n Pauli packed into words.
using F2Row = std::vector<std::uint64_t>;

F2Row to_f2_row(const PauliString& p) {
  const std::size_t n = p.num_sites();
  F2Row row((2 * n + 63) / 64, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.x_bit(i)) row[i / 64] |= std::uint64_t{1} << (i % 64);
    if (p.z_bit(i)) row[(n + i) / 64] |= std::uint64_t{1} << ((n + i) % 64);
  }
  return row;
}

PauliString from_f2_row(const F2Row& row, std::size_t n) {
  PauliString p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.set_x(i, (row[i / 64] >> (i % 64)) & 1u);
    p.set_z(i, (row[(n + i) / 64] >> ((n + i) % 64)) & 1u);
  }
  return p;
}

bool get_bit(const F2Row& r, std::size_t c) { return (r[c / 64] >> (c % 64)) & 1u; }

void xor_into(F2Row& a, const F2Row& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] ^= b[k];
}

std::size_t f2_rank(std::vector<F2Row> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && !get_bit(rows[piv], c)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && get_bit(rows[i], c)) xor_into(rows[i], rows[r]);
    ++r;
  }
  return r;
}

// Nullspace basis of the linear system rows * v = 0 over F2, in reduced
// column order (deterministic).
std::vector<F2Row> f2_nullspace(std::vector<F2Row> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && !get_bit(rows[piv], c)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && get_bit(rows[i], c)) xor_into(rows[i], rows[r]);
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<F2Row> basis;
  const std::size_t words = (cols + 63) / 64;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end())
      continue;
    F2Row v(words, 0);
    v[c / 64] |= std::uint64_t{1} << (c % 64);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      if (get_bit(rows[i], c))
        v[pivot_col[i] / 64] |= std::uint64_t{1} << (pivot_col[i] % 64);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<PauliString> AdditiveCode::codewords() const {
  std::vector<PauliString> out;
  const std::size_t m = generators.size();
  if (m > 24) throw std::runtime_error("code too large to enumerate");
  out.reserve(std::size_t{1} << m);
  PauliString cur(n);
  out.push_back(cur);
  // Gray-code walk: mask i differs from i-1 in bit ctz(i).
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << m); ++i) {
    cur *= generators[std::countr_zero(i)];
    out.push_back(cur);
  }
  return out;
}

bool AdditiveCode::generators_independent() const {
  std::vector<F2Row> rows;
  for (const auto& g : generators) rows.push_back(to_f2_row(g));
  return f2_rank(std::move(rows), 2 * n) == generators.size();
}

bool AdditiveCode::contains(const PauliString& word) const {
  std::vector<F2Row> rows;
  for (const auto& g : generators) rows.push_back(to_f2_row(g));
  const std::size_t base = f2_rank(rows, 2 * n);
  rows.push_back(to_f2_row(word));
  return f2_rank(std::move(rows), 2 * n) == base;
}

AdditiveCode dual(const AdditiveCode& c) {
  AdditiveCode d;
  d.n = c.n;
  d.alphabet = c.alphabet;
  if (c.alphabet == Alphabet::F2) {
    // binary code in X-type form: dual under the standard dot product
    std::vector<F2Row> sys;
    for (const auto& g : c.generators) {
      F2Row row((c.n + 63) / 64, 0);
      for (std::size_t i = 0; i < c.n; ++i)
        if (g.x_bit(i)) row[i / 64] |= std::uint64_t{1} << (i % 64);
      sys.push_back(std::move(row));
    }
    for (const auto& v : f2_nullspace(std::move(sys), c.n)) {
      PauliString p(c.n);
      for (std::size_t i = 0; i < c.n; ++i)
        p.set_x(i, (v[i / 64] >> (i % 64)) & 1u);
      d.generators.push_back(std::move(p));
    }
    return d;
  }
  // v is in the dual iff sym(g, v) = 0 for every generator g; the
  // coefficient row of v's (x|z) bits is g's (z|x) bits.
  std::vector<F2Row> sys;
  for (const auto& g : c.generators) {
    PauliString swapped(c.n);
    for (std::size_t i = 0; i < c.n; ++i) {
      swapped.set_x(i, g.z_bit(i));
      swapped.set_z(i, g.x_bit(i));
    }
    sys.push_back(to_f2_row(swapped));
  }
  for (const auto& v : f2_nullspace(std::move(sys), 2 * c.n))
    d.generators.push_back(from_f2_row(v, c.n));
  return d;
}

std::size_t min_distance(const AdditiveCode& c) {
  if (c.generators.empty()) return c.n + 1;  // zero code: no nonzero word
  if (c.generators.size() > 24) throw std::runtime_error("code too large to exhaust");
  std::size_t best = c.n + 1;
  PauliString cur(c.n);
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << c.generators.size()); ++i) {
    cur *= c.generators[std::countr_zero(i)];
    best = std::min(best, cur.weight());
  }
  return best;
}

std::size_t dual_distance(const AdditiveCode& c) { return min_distance(dual(c)); }

bool verify_oa_strength(const OrthogonalArray& oa, std::size_t k) {
  const std::size_t L = oa.rows.size();
  const std::size_t s = oa.alphabet_size;
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < k; ++i) tuples *= s;
  if (k == 0) return true;
  if (k > oa.columns || L % tuples != 0) return false;
  const std::size_t lambda = L / tuples;

  // letters -> symbol index 0..s-1 (F2 codes use {I,X} -> {0,1})
  auto symbol = [&](const PauliString& p, std::size_t col) -> std::size_t {
    return p.site(col).v;
  };

  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  for (;;) {
    std::vector<std::size_t> count(tuples, 0);
    for (const auto& r : oa.rows) {
      std::size_t key = 0;
      bool ok = true;
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t sym = symbol(r, cols[j]);
        if (sym >= s) { ok = false; break; }
        key = key * s + sym;
      }
      if (!ok) return false;
      ++count[key];
    }
    for (auto v : count)
      if (v != lambda) return false;
    // next k-combination
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cols[i] != i + oa.columns - k) break;
      if (i == 0) return true;
    }
    if (cols[i] == i + oa.columns - k) return true;
    ++cols[i];
    for (std::size_t j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
}

OrthogonalArray to_orthogonal_array(const AdditiveCode& c) {
  OrthogonalArray oa;
  oa.rows = c.codewords();
  oa.columns = c.n;
  oa.alphabet_size = c.alphabet == Alphabet::F2 ? 2 : 4;
  const std::size_t dd = dual_distance(c);
  oa.strength = std::min(dd == 0 ? 0 : dd - 1, oa.columns);
  if (!verify_oa_strength(oa, oa.strength))
    throw std::runtime_error("orthogonal array failed its strength check");
  return oa;
}

// --- Reed-Muller ---------------------------------------------------------

AdditiveCode rm_code(int m) {
  if (m < 1) throw std::invalid_argument("rm_code needs m >= 1");
  const std::size_t n = std::size_t{1} << m;
  AdditiveCode c;
  c.n = n;
  c.alphabet = Alphabet::F2;
  PauliString ones(n);
  for (std::size_t j = 0; j < n; ++j) ones.set_letter(j, 'X');
  c.generators.push_back(ones);
  for (int i = 0; i < m; ++i) {
    PauliString row(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t point = n - 1 - j;  // column j evaluates input 2^m-1-j
      if ((point >> (m - 1 - i)) & 1u) row.set_letter(j, 'X');
    }
    c.generators.push_back(row);
  }
  return c;
}

namespace {

AdditiveCode rm_substituted(int m, std::size_t columns,
                            bool mixed /* false = pure 1->X,0->I */) {
  const AdditiveCode bin = rm_code(m);
  const std::size_t full = std::size_t{1} << m;
  if (columns > full) throw std::invalid_argument("too many colors for RM(1,m)");
  AdditiveCode c;
  c.n = columns;
  c.alphabet = Alphabet::F4;
  const std::size_t rows = bin.generators.size();
  for (std::size_t r = 0; r < rows; ++r) {
    char one = 'X', zero = 'I';
    if (mixed) {
      if (r == 0) { one = 'X'; zero = 'I'; }                 // constant row
      else if (r + 1 == rows) { one = 'Y'; zero = 'Z'; }      // last row
      else { one = 'X'; zero = (r % 2 == 1) ? 'Z' : 'I'; }    // alternate Z,I
    }
    PauliString g(columns);
    for (std::size_t j = 0; j < columns; ++j)
      g.set_letter(j, bin.generators[r].letter(j) == 'X' ? one : zero);
    c.generators.push_back(g);
  }
  return c;
}

}  // namespace

AdditiveCode rm_universal(int m, std::size_t chi) {
  AdditiveCode c = rm_substituted(m, chi, /*mixed=*/true);
  // Column rule: every column needs two distinct non-identity letters.
  // The constant-X row plus the Y/Z last row already guarantee it.
  for (std::size_t j = 0; j < chi; ++j) {
    std::set<char> seen;
    for (const auto& g : c.generators)
      if (g.letter(j) != 'I') seen.insert(g.letter(j));
    if (seen.size() < 2)
      throw std::logic_error("universal RM substitution violated the column rule");
  }
  return c;
}

AdditiveCode rm_punctured(int m, std::size_t chi) {
  if (chi > (std::size_t{1} << m) - 1)
    throw std::invalid_argument("punctured RM(1,m) supports chi <= 2^m-1");
  AdditiveCode full = rm_substituted(m, (std::size_t{1} << m) - 1, /*mixed=*/true);
  AdditiveCode c;
  c.n = chi;
  c.alphabet = Alphabet::F4;
  for (std::size_t r = 1; r < full.generators.size(); ++r)
    c.generators.push_back(full.generators[r].truncated(chi));
  return c;
}

AdditiveCode rm_xtype(int m, std::size_t chi, bool punctured) {
  const std::size_t full = std::size_t{1} << m;
  const std::size_t limit = punctured ? full - 1 : full;
  if (chi > limit) throw std::invalid_argument("too many colors for RM(1,m)");
  AdditiveCode base = rm_substituted(m, chi, /*mixed=*/false);
  if (!punctured) return base;
  AdditiveCode c;
  c.n = chi;
  c.alphabet = Alphabet::F4;
  for (std::size_t r = 1; r < base.generators.size(); ++r)
    c.generators.push_back(base.generators[r]);
  return c;
}

AdditiveCode with_all_z_generator(const AdditiveCode& c) {
  AdditiveCode out = c;
  out.alphabet = Alphabet::F4;
  PauliString z(c.n);
  for (std::size_t j = 0; j < c.n; ++j) z.set_letter(j, 'Z');
  out.generators.push_back(z);
  if (!out.generators_independent())
    throw std::logic_error("all-Z generator is dependent on the code");
  return out;
}

// --- projective geometry -------------------------------------------------

std::vector<std::vector<F4>> pg_points(int n, int q) {
  if (q != 2 && q != 4) throw std::invalid_argument("pg_points supports q=2,4");
  const int len = n + 1;
  std::vector<std::vector<F4>> pts;
  std::vector<F4> cur(len, F4::zero());
  // enumerate all q^len tuples
  std::vector<int> digits(len, 0);
  const int base = q;
  for (;;) {
    bool nonzero = false;
    for (int i = 0; i < len; ++i) {
      cur[i] = q == 2 ? F4(static_cast<std::uint8_t>(digits[i]))
                      : F4(static_cast<std::uint8_t>(digits[i]));
      if (cur[i] != F4::zero()) nonzero = true;
    }
    if (nonzero) {
      F4 first = F4::zero();
      for (int i = 0; i < len; ++i)
        if (cur[i] != F4::zero()) { first = cur[i]; break; }
      if (first == F4::one()) pts.push_back(cur);
    }
    int i = len - 1;
    while (i >= 0 && ++digits[i] == base) digits[i--] = 0;
    if (i < 0) break;
  }
  // weight ascending, then descending lexicographic on raw values
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    std::size_t wa = 0, wb = 0;
    for (auto v : a) wa += v != F4::zero();
    for (auto v : b) wb += v != F4::zero();
    if (wa != wb) return wa < wb;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].v != b[i].v) return a[i].v > b[i].v;
    return false;
  });
  return pts;
}

AdditiveCode linear_pg_code(int n, const std::vector<std::vector<F4>>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].size() != static_cast<std::size_t>(n + 1))
      throw std::invalid_argument("projective point has wrong dimension");
    for (std::size_t j = i + 1; j < columns.size(); ++j)
      if (columns[i] == columns[j])
        throw std::invalid_argument("repeated projective point");
  }
  AdditiveCode c;
  c.n = columns.size();
  c.alphabet = Alphabet::F4;
  for (int r = 0; r < n + 1; ++r) {
    for (F4 scale : {F4::one(), F4::omega()}) {
      std::vector<F4> row(columns.size());
      for (std::size_t j = 0; j < columns.size(); ++j)
        row[j] = f4_mul(scale, columns[j][r]);
      c.generators.push_back(from_f4_vector(row));
    }
  }
  // degenerate column sets (fewer points than the ambient dimension)
  // leave dependent rows; keep an independent prefix basis
  if (!c.generators_independent()) {
    AdditiveCode reduced;
    reduced.n = c.n;
    reduced.alphabet = c.alphabet;
    for (const auto& g : c.generators) {
      reduced.generators.push_back(g);
      if (!reduced.generators_independent()) reduced.generators.pop_back();
    }
    return reduced;
  }
  return c;
}

bool no_three_collinear(const std::vector<std::vector<F4>>& points) {
  auto collinear = [](const std::vector<F4>& p, const std::vector<F4>& q,
                      const std::vector<F4>& r) {
    for (std::uint8_t a = 0; a < 4; ++a)
      for (std::uint8_t b = 0; b < 4; ++b) {
        if (a == 0 && b == 0) continue;
        bool eq = true;
        for (std::size_t i = 0; i < p.size(); ++i)
          if (f4_add(f4_mul(F4(a), p[i]), f4_mul(F4(b), q[i])) != r[i]) {
            eq = false;
            break;
          }
        if (eq) return true;
      }
    return false;
  };
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      for (std::size_t k = j + 1; k < points.size(); ++k)
        if (collinear(points[i], points[j], points[k])) return false;
  return true;
}

std::vector<std::vector<F4>> cap_set(int n) {
  if (n == 2) {
    // Hyperoval: the columns of the [6,3] hexacode generator matrix
    // [I | A] with A = [[1,1,w],[1,w,1],[w,1,1]].
    const F4 o = F4::one(), w = F4::omega();
    std::vector<std::vector<F4>> cap = {
        {o, F4::zero(), F4::zero()}, {F4::zero(), o, F4::zero()},
        {F4::zero(), F4::zero(), o}, {o, o, w}, {o, w, o}, {w, o, o}};
    if (!no_three_collinear(cap))
      throw std::logic_error("hexacode cap set failed collinearity check");
    return cap;
  }
  // Greedy over canonical points, always verified.
  std::vector<std::vector<F4>> cap;
  for (const auto& p : pg_points(n, 4)) {
    cap.push_back(p);
    if (!no_three_collinear(cap)) cap.pop_back();
  }
  return cap;
}

// --- spreads and additive PG codes ---------------------------------------

std::vector<LineF2> spread_pg32() {
  auto mk = [](std::initializer_list<int> p, std::initializer_list<int> q) {
    LineF2 l;
    for (int b : p) l.p.push_back(static_cast<std::uint8_t>(b));
    for (int b : q) l.q.push_back(static_cast<std::uint8_t>(b));
    return l;
  };
  return {mk({1, 0, 0, 0}, {0, 1, 0, 0}), mk({0, 0, 1, 0}, {0, 0, 0, 1}),
          mk({1, 1, 0, 1}, {0, 1, 1, 0}), mk({1, 0, 1, 0}, {0, 1, 0, 1}),
          mk({1, 1, 1, 0}, {0, 1, 1, 1})};
}

namespace {

std::uint32_t pack_point(const std::vector<std::uint8_t>& v) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) m |= 1u << i;
  return m;
}

std::vector<std::uint8_t> unpack_point(std::uint32_t m, int h) {
  std::vector<std::uint8_t> v(h, 0);
  for (int i = 0; i < h; ++i) v[i] = (m >> i) & 1u;
  return v;
}

}  // namespace

std::vector<LineF2> partial_spread(int h, std::size_t chi) {
  if (h == 4 && chi <= 5) {
    auto s = spread_pg32();
    s.resize(chi);
    return s;
  }
  if (h > 24) throw std::invalid_argument("spread dimension too large");
  const std::uint32_t npts = (1u << h) - 1;
  // canonical line list: ordered pairs p < q with key = sorted triple
  std::vector<std::array<std::uint32_t, 3>> lines;
  std::set<std::array<std::uint32_t, 3>> seen;
  for (std::uint32_t p = 1; p <= npts; ++p)
    for (std::uint32_t q = p + 1; q <= npts; ++q) {
      std::array<std::uint32_t, 3> key = {p, q, p ^ q};
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) lines.push_back({p, q, p ^ q});
    }

  std::vector<std::size_t> chosen;
  std::vector<char> used(npts + 1, 0);
  long long budget = 5'000'000;
  auto fits = [&](std::size_t i) {
    return !used[lines[i][0]] && !used[lines[i][1]] && !used[lines[i][2]];
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (chosen.size() == chi) return true;
    if (--budget < 0) return false;
    for (std::size_t i = start; i < lines.size(); ++i) {
      if (!fits(i)) continue;
      chosen.push_back(i);
      for (auto pt : lines[i]) used[pt] = 1;
      if (rec(i + 1)) return true;
      for (auto pt : lines[i]) used[pt] = 0;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(0))
    throw std::runtime_error("partial spread search failed at chi=" +
                             std::to_string(chi) + " (reached " +
                             std::to_string(chosen.size()) + ")");
  std::vector<LineF2> out;
  for (auto i : chosen)
    out.push_back({unpack_point(lines[i][0], h), unpack_point(lines[i][1], h)});
  return out;
}

int additive_pg_h(std::size_t chi) {
  for (int h = 1;; ++h) {
    const std::size_t need = (h % 2 == 0) ? 3 * chi + 1 : 3 * chi + 5;
    if ((std::size_t{1} << h) >= need) return h;
  }
}

AdditiveCode code_from_lines(int h, const std::vector<LineF2>& lines) {
  AdditiveCode c;
  c.n = lines.size();
  c.alphabet = Alphabet::F4;
  for (int r = 0; r < h; ++r) {
    std::vector<F4> row(lines.size());
    for (std::size_t j = 0; j < lines.size(); ++j) {
      const std::uint8_t a = lines[j].p[r], b = lines[j].q[r];
      row[j] = F4(static_cast<std::uint8_t>(a | (b << 1)));
    }
    c.generators.push_back(from_f4_vector(row));
  }
  if (!c.generators_independent())
    throw std::logic_error("spread lines gave dependent generators");
  return c;
}

AdditiveCode additive_pg_code(std::size_t chi) {
  if (chi == 0) throw std::invalid_argument("chi must be positive");
  const int h = additive_pg_h(chi);
  AdditiveCode c = code_from_lines(h, partial_spread(h, chi));
  // pairwise independence of the lines gives strength 2 (re-verified)
  if (chi >= 2) {
    OrthogonalArray oa = to_orthogonal_array(c);
    if (oa.strength < 2)
      throw std::logic_error("additive PG code failed strength-2 verification");
  }
  return c;
}

AdditiveCode heisenberg_expand(const AdditiveCode& code) {
  AdditiveCode out;
  out.n = 3 * code.n;
  out.alphabet = Alphabet::F4;
  for (const auto& g : code.generators) {
    PauliString row(out.n);
    for (std::size_t j = 0; j < code.n; ++j) {
      const F4 v = g.site(j);
      row.set_site(3 * j + 0, v);
      row.set_site(3 * j + 1, f4_mul(F4::omega(), v));
      row.set_site(3 * j + 2, f4_mul(F4::omega_bar(), v));
    }
    out.generators.push_back(row);
  }
  return out;
}

AdditiveCode hexacode() {
  const F4 o = F4::one(), w = F4::omega();
  const std::vector<std::vector<F4>> lin = {
      {o, F4::zero(), F4::zero(), o, o, w},
      {F4::zero(), o, F4::zero(), o, w, o},
      {F4::zero(), F4::zero(), o, w, o, o}};
  AdditiveCode c;
  c.n = 6;
  c.alphabet = Alphabet::F4;
  for (const auto& r : lin) c.generators.push_back(from_f4_vector(r));
  for (const auto& r : lin) {
    std::vector<F4> wr(6);
    for (int i = 0; i < 6; ++i) wr[i] = f4_mul(w, r[i]);
    c.generators.push_back(from_f4_vector(wr));
  }
  return c;
}

namespace {

AdditiveCode from_rows(std::initializer_list<const char*> rows) {
  AdditiveCode c;
  c.alphabet = Alphabet::F4;
  for (const char* r : rows) c.generators.emplace_back(std::string(r));
  c.n = c.generators.front().num_sites();
  return c;
}

// Single-qubit, Heisenberg-pair and scalar-chirality terms on chi colors.
std::vector<PauliString> spin_term_set(std::size_t chi) {
  std::vector<PauliString> terms;
  for (std::size_t i = 0; i < chi; ++i)
    for (char l : {'X', 'Y', 'Z'}) terms.push_back(PauliString::single(chi, i, l));
  for (std::size_t i = 0; i < chi; ++i)
    for (std::size_t j = i + 1; j < chi; ++j)
      for (char l : {'X', 'Y', 'Z'}) {
        PauliString t(chi);
        t.set_letter(i, l);
        t.set_letter(j, l);
        terms.push_back(t);
      }
  const char perms[6][3] = {{'X', 'Y', 'Z'}, {'X', 'Z', 'Y'}, {'Y', 'X', 'Z'},
                            {'Y', 'Z', 'X'}, {'Z', 'X', 'Y'}, {'Z', 'Y', 'X'}};
  for (std::size_t i = 0; i < chi; ++i)
    for (std::size_t j = i + 1; j < chi; ++j)
      for (std::size_t k = j + 1; k < chi; ++k)
        for (const auto& p : perms) {
          PauliString t(chi);
          t.set_letter(i, p[0]);
          t.set_letter(j, p[1]);
          t.set_letter(k, p[2]);
          terms.push_back(t);
        }
  return terms;
}

bool detects_all(const std::vector<PauliString>& gens,
                 const std::vector<PauliString>& terms) {
  for (const auto& t : terms) {
    bool hit = false;
    for (const auto& g : gens)
      if (symplectic_inner(g, t)) { hit = true; break; }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

AdditiveCode chirality_group_4col() {
  AdditiveCode c = from_rows({"XXZY", "XZXZ", "ZZYX", "ZYZY"});
  if (!detects_all(c.generators, spin_term_set(4)))
    throw std::logic_error("4-column chirality group failed verification");
  return c;
}

AdditiveCode chirality_group_5col() {
  AdditiveCode c = from_rows({"ZXXZY", "YZXXZ", "YZZYX", "XYZZY"});
  if (!detects_all(c.generators, spin_term_set(5)))
    throw std::logic_error("5-column chirality group failed verification");
  return c;
}

AdditiveCode chirality_derive_4col() {
  // Tail of the hexacode (last three columns) plus the w-multiple of the
  // final column, then the smallest generator subset that still detects
  // every single-qubit, Heisenberg and chirality term on four colors.
  const AdditiveCode hex = hexacode();
  AdditiveCode six;
  six.n = 4;
  six.alphabet = Alphabet::F4;
  for (const auto& g : hex.generators) {
    PauliString row(4);
    row.set_site(0, g.site(3));
    row.set_site(1, g.site(4));
    row.set_site(2, g.site(5));
    row.set_site(3, f4_mul(F4::omega(), g.site(5)));
    six.generators.push_back(row);
  }
  const auto terms = spin_term_set(4);
  const std::size_t m = six.generators.size();
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::vector<PauliString> sub;
      for (auto i : idx) sub.push_back(six.generators[i]);
      if (detects_all(sub, terms)) {
        AdditiveCode out;
        out.n = 4;
        out.alphabet = Alphabet::F4;
        out.generators = std::move(sub);
        return out;
      }
      std::size_t i = size;
      bool done = true;
      while (i > 0) {
        --i;
        if (idx[i] != i + m - size) { done = false; break; }
      }
      if (done) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw std::logic_error("no covering subset of the expanded hexacode tail");
}

// --- PG(2,2) sudoku -------------------------------------------------------

namespace {

constexpr std::uint8_t kPg22Points[7] = {
    0b001,  // P1 = (1,0,0), bit i = coordinate i+1
    0b010,  // P2
    0b100,  // P3
    0b011,  // P4
    0b101,  // P5
    0b110,  // P6
    0b111,  // P7
};

int point_index(std::uint8_t mask) {
  for (int i = 0; i < 7; ++i)
    if (kPg22Points[i] == mask) return i;
  return -1;
}

}  // namespace

Pg22Search pg22_sudoku_search() {
  Pg22Search s{};
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 7; ++c)
      s.table[r][c] =
          r == c ? 0 : point_index(kPg22Points[r] ^ kPg22Points[c]) + 1;

  // DFS over rows; each row either skipped or assigned a (col, entry)
  // cell with all rows/cols/entries pairwise distinct.
  std::vector<Pg22Cell> cur;
  std::array<bool, 8> used_col{}, used_entry{};
  std::function<void(int)> rec = [&](int row) {
    if (static_cast<int>(cur.size()) + (7 - row) <=
        static_cast<int>(s.best.size()))
      return;
    if (row == 7) {
      if (cur.size() > s.best.size()) s.best = cur;
      return;
    }
    for (int c = 0; c < 7; ++c) {
      if (c == row || used_col[c]) continue;
      const int e = s.table[row][c];
      if (used_entry[e]) continue;
      used_col[c] = used_entry[e] = true;
      cur.push_back({row + 1, c + 1, e});
      rec(row + 1);
      cur.pop_back();
      used_col[c] = used_entry[e] = false;
    }
    rec(row + 1);
  };
  rec(0);
  return s;
}

std::vector<Pg22Cell> pg22_canonical_cells() {
  return {{1, 2, 4}, {2, 3, 6}, {3, 4, 7}, {4, 6, 5}, {5, 7, 2}};
}

AdditiveCode pg22_code(std::size_t chi) {
  if (chi < 1 || chi > 5)
    throw std::invalid_argument("pg22 code supports 1..5 colors");
  std::vector<LineF2> lines;
  for (const auto& cell : pg22_canonical_cells()) {
    LineF2 l;
    for (int k = 0; k < 3; ++k) {
      l.p.push_back((kPg22Points[cell.row - 1] >> k) & 1u);
      l.q.push_back((kPg22Points[cell.col - 1] >> k) & 1u);
    }
    lines.push_back(std::move(l));
  }
  lines.resize(chi);
  return code_from_lines(3, lines);
}

}  // namespace twirlc
