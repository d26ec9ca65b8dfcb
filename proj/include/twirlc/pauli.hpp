#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twirlc {

// Element of GF(4) = {0, 1, w, 1+w} with w^2 = w + 1, stored as the bit
// pair (a,b) meaning a*1 + b*w.  Addition is XOR; multiplication follows
// from the defining relation.
struct F4 {
  std::uint8_t v = 0;

  constexpr F4() = default;
  constexpr explicit F4(std::uint8_t raw) : v(raw & 3u) {}

  static constexpr F4 zero() { return F4(0); }
  static constexpr F4 one() { return F4(1); }
  static constexpr F4 omega() { return F4(2); }
  static constexpr F4 omega_bar() { return F4(3); }  // 1 + w

  friend constexpr bool operator==(F4 a, F4 b) { return a.v == b.v; }
  friend constexpr bool operator!=(F4 a, F4 b) { return a.v != b.v; }
};

constexpr F4 f4_add(F4 a, F4 b) { return F4(a.v ^ b.v); }

constexpr F4 f4_mul(F4 a, F4 b) {
  const unsigned p = a.v & 1u, q = a.v >> 1, r = b.v & 1u, s = b.v >> 1;
  const unsigned c0 = (p & r) ^ (q & s);
  const unsigned c1 = (p & s) ^ (q & r) ^ (q & s);
  return F4(static_cast<std::uint8_t>(c0 | (c1 << 1)));
}

// x -> x^2, the conjugation of GF(4) over GF(2).
constexpr F4 f4_conj(F4 a) { return f4_mul(a, a); }

// Text form: "0", "1", "w", "1+w".
std::string f4_to_string(F4 a);
F4 f4_from_string(const std::string& s);

// Single-site Pauli letters.  The field view of a letter is
// I -> 0, X -> 1, Z -> w, Y -> 1+w, so the (a,b) bit pair of the field
// element is exactly the (x,z) symplectic pair of the letter.
constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};

constexpr char f4_to_letter(F4 a) { return kLetters[a.v]; }

constexpr F4 letter_to_f4(char c) {
  switch (c) {
    case 'I': return F4(0);
    case 'X': return F4(1);
    case 'Z': return F4(2);
    case 'Y': return F4(3);
  }
  return F4(0);
}

constexpr bool is_pauli_letter(char c) {
  return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
}

// Phase-free Pauli string on n sites in binary symplectic form: site i
// carries X^{x_i} Z^{z_i}.  Bits are packed into 64-bit words so products
// and commutation checks reduce to XOR / AND+popcount.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n);
  // Parse "XIZY..." with site 1 leftmost.
  explicit PauliString(const std::string& letters);

  static PauliString identity(std::size_t n) { return PauliString(n); }
  static PauliString single(std::size_t n, std::size_t site, char letter);

  std::size_t num_sites() const { return n_; }

  bool x_bit(std::size_t i) const;
  bool z_bit(std::size_t i) const;
  void set_x(std::size_t i, bool b);
  void set_z(std::size_t i, bool b);

  F4 site(std::size_t i) const;
  void set_site(std::size_t i, F4 value);
  char letter(std::size_t i) const { return f4_to_letter(site(i)); }
  void set_letter(std::size_t i, char c) { set_site(i, letter_to_f4(c)); }

  // Number of sites with a non-identity letter.
  std::size_t weight() const;
  bool is_identity() const;
  std::vector<std::size_t> support() const;

  std::string to_string() const;

  // Phase-free product: coordinatewise XOR of (x|z).
  PauliString operator*(const PauliString& rhs) const;
  PauliString& operator*=(const PauliString& rhs);

  bool operator==(const PauliString& rhs) const;
  bool operator!=(const PauliString& rhs) const { return !(*this == rhs); }
  // Lexicographic on letter strings; used for canonical orderings.
  bool operator<(const PauliString& rhs) const;

  // Restriction to the first m sites.
  PauliString truncated(std::size_t m) const;

  const std::vector<std::uint64_t>& x_words() const { return xw_; }
  const std::vector<std::uint64_t>& z_words() const { return zw_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> xw_, zw_;
};

// Symplectic inner product u^T Omega v over F2 (Omega swaps the x and z
// halves).  Returns 1 exactly when the two strings anticommute.
int symplectic_inner(const PauliString& p, const PauliString& q);

inline bool commute(const PauliString& p, const PauliString& q) {
  return symplectic_inner(p, q) == 0;
}

// Trace-Hermitian inner product sum_i (u_i v_i^2 + v_i u_i^2) of two F4
// vectors; agrees with symplectic_inner under the letter/field map.
int trace_hermitian_inner(const std::vector<F4>& u, const std::vector<F4>& v);

std::vector<F4> to_f4_vector(const PauliString& p);
PauliString from_f4_vector(const std::vector<F4>& v);

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const;
};

}  // namespace twirlc
