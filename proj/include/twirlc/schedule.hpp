#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twirlc/compiler.hpp"
#include "twirlc/device_graph.hpp"

namespace twirlc {

enum class ControlMode { BangBang, Bounded };

// Executable pulse schedule.  Bang-bang schedules list the toggling
// frames (each group element once) together with the single-generator
// interpulse operations between consecutive slots; bounded schedules
// list one generator label per interval of a balanced Cayley-graph
// cycle.  Delta, the free-evolution slot, is dimensionless.
struct Schedule {
  ControlMode mode = ControlMode::BangBang;
  std::size_t colors = 0;
  std::size_t length = 0;

  std::vector<PauliString> frames;       // bang-bang: L frames
  std::vector<PauliString> interpulse;   // bang-bang: frames[j+1]*frames[j], cyclic
  std::vector<PauliString> intervals;    // bounded: generator label per slot

  // physical qubit id -> per-slot letters, when lifted to a device
  std::map<int, std::string> lifted;
};

// Reflected-Gray ordering of the group elements: consecutive frames
// (cyclically) differ by exactly one generator.
std::vector<PauliString> gray_order(const DDGroup& g);

Schedule emit_bang_bang(const DDGroup& g, const Coloring* coloring = nullptr);

// Eulerian circuit on the Cayley graph of g with respect to gamma
// (Hierholzer), starting at the identity; each generator label is used
// |G| times, total |G|*|gamma| slots.  Throws if gamma does not
// generate g.
std::vector<PauliString> cayley_cycle(const DDGroup& g,
                                      const std::vector<PauliString>& gamma);

// Bounded-control schedule from a verified group; refuses when the
// bounded check did not pass.
Schedule emit_bounded(const DDGroup& g, const std::vector<PauliString>& gamma,
                      const BoundedCheck& verdict,
                      const Coloring* coloring = nullptr);

// Sign-flipping engineering cycle: three conjugation blocks (X, Y and Z
// on the given sites), each wrapping the group's Gray-ordered frames.
// The first-order effective Hamiltonian is -1/3 times the group twirl on
// the preserved terms.
Schedule sign_flip_cycle(const DDGroup& g, const std::vector<std::size_t>& sites);

// The 12-slot Hamiltonian-engineering cycle for the folded Kitaev graph:
// sign_flip_cycle of the two-generator preserving group over sites
// {1,4,5}.
Schedule kitaev_cycle();

// Broadcast a quotient-level schedule to physical qubits: every qubit
// receives its color's pulse train, time-aligned.
Schedule lift(const Schedule& s, const Coloring& c);

// Telescoped product of all interpulse operations (identity for a
// cyclic bang-bang schedule).
PauliString interpulse_product(const Schedule& s);

}  // namespace twirlc
