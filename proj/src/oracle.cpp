#include "twirlc/oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <stdexcept>

namespace twirlc {

namespace {

Matrix single_site(char l) {
  Matrix m(2, 2);
  switch (l) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    case 'Y':
      m << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
      break;
    default: throw std::invalid_argument("bad letter");
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

Matrix dense_pauli(const PauliString& p) {
  if (p.num_sites() > 8) throw std::invalid_argument("dense oracle limited to 8 sites");
  Matrix m = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < p.num_sites(); ++i) m = kron(m, single_site(p.letter(i)));
  return m;
}

Matrix build_hamiltonian(const TermSet& ts) {
  const Eigen::Index dim = Eigen::Index{1} << ts.n;
  Matrix h = Matrix::Zero(dim, dim);
  for (const auto& t : ts.terms) h += t.coeff * dense_pauli(t.pauli);
  return h;
}

Matrix first_order_twirl(const DDGroup& g, const Matrix& h) {
  return frame_average(g.elements(), h);
}

Matrix frame_average(const std::vector<PauliString>& frames, const Matrix& h) {
  Matrix acc = Matrix::Zero(h.rows(), h.cols());
  for (const auto& f : frames) {
    const Matrix u = dense_pauli(f);
    acc += u.adjoint() * h * u;
  }
  return acc / static_cast<double>(frames.size());
}

double pauli_coefficient(const Matrix& h, const PauliString& p) {
  const Matrix u = dense_pauli(p);
  return ((u.adjoint() * h).trace() / static_cast<double>(h.rows())).real();
}

SimReport stroboscopic_error(const Schedule& s, const Matrix& h,
                             const std::vector<double>& deltas) {
  if (s.mode != ControlMode::BangBang)
    throw std::invalid_argument("stroboscopic oracle expects a bang-bang schedule");
  SimReport rep;
  rep.deltas = deltas;
  const Matrix hbar = frame_average(s.frames, h);
  const std::complex<double> mi(0, -1);
  for (double d : deltas) {
    const Matrix u_slot = (mi * d * h).exp();
    Matrix cycle = Matrix::Identity(h.rows(), h.cols());
    for (const auto& f : s.frames) {
      const Matrix u = dense_pauli(f);
      cycle = u.adjoint() * u_slot * u * cycle;
    }
    const double tc = d * static_cast<double>(s.frames.size());
    const Matrix target = (mi * tc * hbar).exp();
    rep.residuals.push_back((cycle - target).norm());
  }
  // least-squares slope of log(residual) vs log(delta)
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t m = 0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (rep.residuals[i] <= 0) continue;
    const double x = std::log(deltas[i]), y = std::log(rep.residuals[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++m;
  }
  if (m >= 2) rep.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return rep;
}

KitaevReport kitaev_verify(double tolerance) {
  const KitaevInstance inst = kitaev_instance();

  TermSet analog;
  analog.n = 6;
  for (const auto& e : inst.edges)
    for (char l : {'X', 'Y', 'Z'}) {
      PauliString t(6);
      t.set_letter(e.u - 1, l);
      t.set_letter(e.v - 1, l);
      analog.add(t, 0.25);  // J/4 with J = 1
    }
  TermSet comb;
  comb.n = 6;
  for (const auto& e : inst.edges) {
    PauliString t(6);
    t.set_letter(e.u - 1, e.label);
    t.set_letter(e.v - 1, e.label);
    comb.add(t, -0.25, TermRole::Preserve);
  }
  const Matrix h_analog = build_hamiltonian(analog);
  const Matrix h_comb = build_hamiltonian(comb);

  const DDGroup g2{6, {inst.w1, inst.w2}};
  const Matrix tw = first_order_twirl(g2, h_analog);

  KitaevReport rep;
  rep.twirl_residual = (tw + h_comb).norm();

  std::vector<Matrix> conj;
  for (char l : {'X', 'Y', 'Z'}) {
    PauliString c(6);
    for (int site : inst.conjugator_sites) c.set_letter(site - 1, l);
    conj.push_back(dense_pauli(c));
  }
  Matrix flipped = Matrix::Zero(64, 64);
  for (const auto& c : conj) flipped += c * tw * c;
  rep.conjugation_residual = (flipped - h_comb).norm();

  const Schedule cycle = kitaev_cycle();
  const Matrix eff = frame_average(cycle.frames, h_analog);
  rep.cycle_residual = (eff - h_comb / 3.0).norm();

  Matrix full = tw;
  for (const auto& c : conj) full += c * tw * c;
  rep.full_group_residual = (full / 4.0).norm();

  rep.ok = rep.twirl_residual < tolerance && rep.conjugation_residual < tolerance &&
           rep.cycle_residual < tolerance && rep.full_group_residual < tolerance;
  return rep;
}

}  // namespace twirlc
