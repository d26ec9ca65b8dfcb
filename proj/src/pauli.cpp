#include "twirlc/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace twirlc {

std::string f4_to_string(F4 a) {
  switch (a.v) {
    case 0: return "0";
    case 1: return "1";
    case 2: return "w";
    default: return "1+w";
  }
}

F4 f4_from_string(const std::string& s) {
  if (s == "0") return F4(0);
  if (s == "1") return F4(1);
  if (s == "w") return F4(2);
  if (s == "1+w" || s == "w+1") return F4(3);
  throw std::invalid_argument("not an F4 literal: " + s);
}

namespace {
constexpr std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
}  // namespace

PauliString::PauliString(std::size_t n)
    : n_(n), xw_(word_count(n), 0), zw_(word_count(n), 0) {}

PauliString::PauliString(const std::string& letters) : PauliString(letters.size()) {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!is_pauli_letter(letters[i]))
      throw std::invalid_argument("bad Pauli letter in \"" + letters + "\"");
    set_letter(i, letters[i]);
  }
}

PauliString PauliString::single(std::size_t n, std::size_t site, char letter) {
  PauliString p(n);
  p.set_letter(site, letter);
  return p;
}

bool PauliString::x_bit(std::size_t i) const { return (xw_[i / 64] >> (i % 64)) & 1u; }
bool PauliString::z_bit(std::size_t i) const { return (zw_[i / 64] >> (i % 64)) & 1u; }

void PauliString::set_x(std::size_t i, bool b) {
  const std::uint64_t m = std::uint64_t{1} << (i % 64);
  if (b) xw_[i / 64] |= m; else xw_[i / 64] &= ~m;
}

void PauliString::set_z(std::size_t i, bool b) {
  const std::uint64_t m = std::uint64_t{1} << (i % 64);
  if (b) zw_[i / 64] |= m; else zw_[i / 64] &= ~m;
}

F4 PauliString::site(std::size_t i) const {
  return F4(static_cast<std::uint8_t>((x_bit(i) ? 1 : 0) | (z_bit(i) ? 2 : 0)));
}

void PauliString::set_site(std::size_t i, F4 value) {
  set_x(i, value.v & 1);
  set_z(i, value.v & 2);
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t k = 0; k < xw_.size(); ++k)
    w += std::popcount(xw_[k] | zw_[k]);
  return w;
}

bool PauliString::is_identity() const {
  for (std::size_t k = 0; k < xw_.size(); ++k)
    if (xw_[k] | zw_[k]) return false;
  return true;
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n_; ++i)
    if (site(i) != F4::zero()) s.push_back(i);
  return s;
}

std::string PauliString::to_string() const {
  std::string s(n_, 'I');
  for (std::size_t i = 0; i < n_; ++i) s[i] = letter(i);
  return s;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  PauliString out = *this;
  out *= rhs;
  return out;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("Pauli length mismatch");
  for (std::size_t k = 0; k < xw_.size(); ++k) {
    xw_[k] ^= rhs.xw_[k];
    zw_[k] ^= rhs.zw_[k];
  }
  return *this;
}

bool PauliString::operator==(const PauliString& rhs) const {
  return n_ == rhs.n_ && xw_ == rhs.xw_ && zw_ == rhs.zw_;
}

bool PauliString::operator<(const PauliString& rhs) const {
  return to_string() < rhs.to_string();
}

PauliString PauliString::truncated(std::size_t m) const {
  PauliString out(m);
  for (std::size_t i = 0; i < m && i < n_; ++i) out.set_site(i, site(i));
  return out;
}

int symplectic_inner(const PauliString& p, const PauliString& q) {
  if (p.num_sites() != q.num_sites())
    throw std::invalid_argument("Pauli length mismatch");
  std::uint64_t acc = 0;
  const auto& px = p.x_words(); const auto& pz = p.z_words();
  const auto& qx = q.x_words(); const auto& qz = q.z_words();
  for (std::size_t k = 0; k < px.size(); ++k)
    acc ^= std::popcount(px[k] & qz[k]) ^ std::popcount(pz[k] & qx[k]);
  return static_cast<int>(acc & 1u);
}

int trace_hermitian_inner(const std::vector<F4>& u, const std::vector<F4>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("F4 length mismatch");
  F4 acc = F4::zero();
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc = f4_add(acc, f4_mul(u[i], f4_conj(v[i])));
    acc = f4_add(acc, f4_mul(v[i], f4_conj(u[i])));
  }
  // The sum lies in the GF(2) subfield.
  return acc == F4::zero() ? 0 : 1;
}

std::vector<F4> to_f4_vector(const PauliString& p) {
  std::vector<F4> out(p.num_sites());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.site(i);
  return out;
}

PauliString from_f4_vector(const std::vector<F4>& v) {
  PauliString p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p.set_site(i, v[i]);
  return p;
}

std::size_t PauliStringHash::operator()(const PauliString& p) const {
  std::size_t h = p.num_sites() * 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::uint64_t w) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (auto w : p.x_words()) mix(w);
  for (auto w : p.z_words()) mix(w ^ 0x5851f42d4c957f2dull);
  return h;
}

}  // namespace twirlc
