#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "twirlc/io.hpp"
#include "twirlc/oracle.hpp"

namespace fs = std::filesystem;
using namespace twirlc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;

struct Infeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t ceil_log2(std::size_t x) {
  std::size_t m = 0;
  while ((std::size_t{1} << m) < x) ++m;
  return m;
}

struct CompileTarget {
  std::string name;
  std::size_t k = 2;
};

// Construction choice per target and control mode.
std::pair<DDGroup, std::vector<PauliString>> build_group(
    const std::string& target, ControlMode mode, std::size_t chi,
    const TermSet* preserve, const TermSet* suppress) {
  auto as_group = [](const AdditiveCode& c) {
    DDGroup g = DDGroup::from_code(c);
    return std::pair{g, g.generators};
  };
  if (target == "zz") {
    const int m = static_cast<int>(ceil_log2(chi + 1));
    if (mode == ControlMode::Bounded)
      return as_group(with_all_z_generator(rm_xtype(m, chi, /*punctured=*/true)));
    return as_group(rm_punctured(m, chi));
  }
  if (target == "zzz") {
    const int m = static_cast<int>(ceil_log2(chi));
    if (mode == ControlMode::Bounded)
      return as_group(with_all_z_generator(rm_xtype(m, chi, /*punctured=*/false)));
    return as_group(rm_universal(m, chi));
  }
  if (target == "universal2") return as_group(additive_pg_code(chi));
  if (target == "universal3") {
    for (int n = 2; n <= 4; ++n) {
      auto cap = cap_set(n);
      if (cap.size() >= chi) {
        cap.resize(chi);
        return as_group(linear_pg_code(n, cap));
      }
    }
    throw Infeasible("no cap set large enough for chi=" + std::to_string(chi));
  }
  if (target == "heisenberg") {
    if (mode == ControlMode::Bounded)
      throw Infeasible("tailored Heisenberg groups support bang-bang control only");
    if (chi <= 5) return as_group(pg22_code(chi));
    AdditiveCode expanded = heisenberg_expand(additive_pg_code((chi + 2) / 3));
    AdditiveCode out;
    out.n = chi;
    out.alphabet = Alphabet::F4;
    for (const auto& g : expanded.generators)
      out.generators.push_back(g.truncated(chi));
    return as_group(out);
  }
  if (target == "chirality") {
    if (mode == ControlMode::Bounded)
      throw Infeasible("tailored chirality groups support bang-bang control only");
    if (chi == 4) return as_group(chirality_group_4col());
    if (chi == 5) return as_group(chirality_group_5col());
    throw Infeasible("chirality construction covers chi=4,5");
  }
  if (target == "selective") {
    if (!preserve) throw Infeasible("selective synthesis needs --preserve");
    const auto basis = selective_nullspace(*preserve);
    if (basis.empty()) throw Infeasible("empty commutant: nothing to generate");
    // candidates: whole commutant group when small, else its basis
    std::vector<PauliString> candidates;
    if (basis.size() <= 14) {
      AdditiveCode span{preserve->n, basis, Alphabet::F4};
      for (const auto& el : span.codewords())
        if (!el.is_identity()) candidates.push_back(el);
      std::sort(candidates.begin(), candidates.end(),
                [](const PauliString& a, const PauliString& b) {
                  const auto wa = a.weight(), wb = b.weight();
                  return wa != wb ? wa < wb : a < b;
                });
    } else {
      candidates = basis;
    }
    TermSet sup;
    sup.n = preserve->n;
    if (suppress)
      for (const auto& t : suppress->terms) sup.add(t.pauli, t.coeff, TermRole::Suppress);
    const CoverResult cover = min_cover(candidates, sup);
    if (cover.infeasible_term)
      throw Infeasible("term " + cover.infeasible_term->to_string() +
                       " commutes with the whole commutant");
    DDGroup g;
    g.chi = preserve->n;
    for (auto i : cover.chosen) g.generators.push_back(candidates[i]);
    std::vector<PauliString> gamma = g.generators;
    if (mode == ControlMode::Bounded) {
      // grow the generating set until the bounded criterion holds
      BoundedCheck bc = check_bounded(g, gamma, sup.paulis(TermRole::Suppress),
                                      preserve->paulis(TermRole::Preserve));
      if (!bc.ok) {
        DDGroup full;
        full.chi = preserve->n;
        full.generators = basis;
        bc = check_bounded(full, basis, sup.paulis(TermRole::Suppress),
                           preserve->paulis(TermRole::Preserve));
        if (!bc.ok)
          throw Infeasible("no bounded-safe generating set in the commutant");
        return {full, basis};
      }
    }
    return {g, gamma};
  }
  throw Infeasible("unknown target " + target);
}

std::size_t target_k(const std::string& target) {
  if (target == "universal3" || target == "zzz" || target == "chirality") return 3;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamical-decoupling sequence compiler"};
  app.require_subcommand(1);

  std::string device_path, coloring_path, seed_order_path, out_dir = ".";
  std::string group_path, schedule_path, hamiltonian_path;
  std::string target = "universal2", mode_name = "bb", model_override;
  std::string families_arg = "all";
  std::string preserve_path, suppress_path;
  std::size_t k = 2;
  std::size_t chi_min = 2, chi_max = 64;
  bool flip_sign = false;
  std::vector<double> deltas = {1e-3, 3e-3, 1e-2, 3e-2, 1e-1};

  auto* c_color = app.add_subcommand("color", "color a device file");
  c_color->add_option("--device", device_path)->required();
  c_color->add_option("--seed-order", seed_order_path);
  c_color->add_option("--out", out_dir);

  auto* c_compile = app.add_subcommand("compile", "synthesize a verified schedule");
  c_compile->add_option("--device", device_path)->required();
  c_compile->add_option("--coloring", coloring_path);
  c_compile->add_option("--target", target)
      ->check(CLI::IsMember({"universal2", "universal3", "zz", "zzz", "heisenberg",
                             "chirality", "selective"}));
  c_compile->add_option("--mode", mode_name)->check(CLI::IsMember({"bb", "bounded"}));
  c_compile->add_option("--preserve", preserve_path);
  c_compile->add_option("--suppress", suppress_path);
  c_compile->add_flag("--flip-sign", flip_sign,
                      "wrap the selective group in X/Y/Z conjugation blocks "
                      "that negate the preserved couplings");
  c_compile->add_option("--out", out_dir);

  auto* c_verify = app.add_subcommand("verify", "check a group against a device");
  c_verify->add_option("--group", group_path)->required();
  c_verify->add_option("--device", device_path)->required();
  c_verify->add_option("--coloring", coloring_path);
  c_verify->add_option("--model", model_override);
  c_verify->add_option("--k", k);
  c_verify->add_option("--mode", mode_name)->check(CLI::IsMember({"bb", "bounded"}));
  c_verify->add_option("--preserve", preserve_path);
  c_verify->add_option("--out", out_dir);

  auto* c_scaling = app.add_subcommand("scaling", "emit sequence-length tables");
  c_scaling->add_option("--families", families_arg, "comma list or 'all'");
  c_scaling->add_option("--chi-min", chi_min);
  c_scaling->add_option("--chi-max", chi_max);
  c_scaling->add_option("--out", out_dir);

  auto* c_sim = app.add_subcommand("simulate", "numeric first-order check");
  c_sim->add_option("--schedule", schedule_path)->required();
  c_sim->add_option("--hamiltonian", hamiltonian_path)->required();
  c_sim->add_option("--deltas", deltas);
  c_sim->add_option("--out", out_dir);

  CLI11_PARSE(app, argc, argv);

  try {
    fs::create_directories(out_dir);

    if (c_color->parsed()) {
      const DeviceGraph g = io::load_device(device_path);
      std::optional<std::vector<int>> order;
      if (!seed_order_path.empty()) {
        std::vector<int> ids;
        for (const auto& v : nlohmann::json::parse(io::read_file(seed_order_path)))
          ids.push_back(v.get<int>());
        order = std::move(ids);
      }
      const Coloring c = color(g, order ? &*order : nullptr);
      io::save_coloring(c, (fs::path(out_dir) / "coloring.json").string());
      std::cout << "colors: " << c.chi() << "\n";
      return kExitOk;
    }

    if (c_compile->parsed()) {
      const DeviceGraph dev = io::load_device(device_path);
      const Coloring col = coloring_path.empty()
                               ? color(dev)
                               : io::load_coloring(coloring_path);
      if (!validate_coloring(dev, col)) {
        std::cerr << "supplied coloring is invalid\n";
        return kExitCounterexample;
      }
      const QuotientGraph q = quotient(dev, col);
      const ControlMode mode =
          mode_name == "bounded" ? ControlMode::Bounded : ControlMode::BangBang;

      std::optional<TermSet> preserve, suppress;
      if (!preserve_path.empty()) preserve = io::load_terms(preserve_path);
      if (!suppress_path.empty()) suppress = io::load_terms(suppress_path);

      auto [group, gamma] = build_group(target, mode, q.chi,
                                        preserve ? &*preserve : nullptr,
                                        suppress ? &*suppress : nullptr);

      // verify before emitting
      Verdict verdict;
      if (target == "selective") {
        std::vector<PauliString> targets;
        if (suppress)
          for (const auto& t : suppress->terms) targets.push_back(t.pauli);
        verdict = classify_terms(group, targets);
        if (preserve) {
          const auto pres = classify_terms(group, preserve->paulis(TermRole::Preserve));
          for (const auto& tv : pres.terms) {
            verdict.terms.push_back(tv);
            if (tv.status != TermStatus::Preserved) verdict.universal = false;
          }
        }
      } else {
        verdict = check_universal(group, q, target_k(target));
      }
      io::save_verdict(verdict, (fs::path(out_dir) / "verdict.json").string());
      io::save_code(group.as_code(), (fs::path(out_dir) / "group.json").string());

      if (target == "selective") {
        // suppress targets must be suppressed, preserve targets preserved
        bool good = true;
        if (suppress)
          for (const auto& t : suppress->terms)
            if (!suppresses(group, t.pauli)) good = false;
        if (preserve)
          for (const auto& t : preserve->terms)
            if (suppresses(group, t.pauli)) good = false;
        if (!good) {
          std::cerr << "selective verdict failed; see verdict.json\n";
          return kExitCounterexample;
        }
      } else if (!verdict.universal) {
        const auto bad = verdict.first_preserved();
        std::cerr << "verification counterexample: "
                  << (bad ? bad->term.to_string() : "?") << "\n";
        return kExitCounterexample;
      }

      Schedule sched;
      if (flip_sign) {
        if (target != "selective" || mode != ControlMode::BangBang)
          throw Infeasible("--flip-sign applies to bang-bang selective jobs");
        const auto sites = sign_flip_sites(*preserve);
        if (!sites)
          throw Infeasible("no conjugator site set flips every preserved pair");
        sched = lift(sign_flip_cycle(group, *sites), col);
      } else if (mode == ControlMode::Bounded) {
        std::vector<PauliString> sup_targets, pres_targets;
        if (target == "selective") {
          if (suppress)
            for (const auto& t : suppress->terms) sup_targets.push_back(t.pauli);
          if (preserve) pres_targets = preserve->paulis(TermRole::Preserve);
        } else {
          sup_targets = enumerate_quotient_terms(q, target_k(target));
        }
        const BoundedCheck bc = check_bounded(group, gamma, sup_targets, pres_targets);
        if (!bc.ok) {
          std::cerr << "bounded check failed"
                    << (bc.leaked ? ": leaks " + bc.leaked->to_string() : "") << "\n";
          return kExitInfeasible;
        }
        sched = emit_bounded(group, gamma, bc, &col);
      } else {
        sched = emit_bang_bang(group, &col);
      }
      io::save_schedule(sched, (fs::path(out_dir) / "schedule.json").string());
      io::write_file((fs::path(out_dir) / "schedule.csv").string(),
                     io::schedule_to_csv(sched));
      std::cout << "chi: " << q.chi << " generators: " << group.generators.size()
                << " L: " << sched.length << "\n";
      return kExitOk;
    }

    if (c_verify->parsed()) {
      const DeviceGraph dev = io::load_device(device_path);
      const Coloring col = coloring_path.empty()
                               ? color(dev)
                               : io::load_coloring(coloring_path);
      if (!validate_coloring(dev, col)) {
        std::cerr << "supplied coloring is invalid\n";
        return kExitCounterexample;
      }
      const QuotientGraph q = quotient(dev, col);
      const DDGroup group = DDGroup::from_code(io::load_code(group_path));
      std::optional<Model> model;
      if (!model_override.empty()) model = model_from_name(model_override);

      Verdict verdict = check_universal(group, q, k, model);
      bool ok = verdict.universal;
      if (mode_name == "bounded") {
        TermSet preserve;
        preserve.n = group.chi;
        if (!preserve_path.empty()) preserve = io::load_terms(preserve_path);
        const BoundedCheck bc =
            check_bounded(group, group.generators, q, k, model, preserve);
        ok = ok && bc.ok;
      }
      io::save_verdict(verdict, (fs::path(out_dir) / "verdict.json").string());
      if (!ok) {
        const auto bad = verdict.first_preserved();
        std::cerr << "counterexample: " << (bad ? bad->term.to_string() : "(bounded)")
                  << "\n";
        return kExitCounterexample;
      }
      std::cout << "universal for k=" << k << "\n";
      return kExitOk;
    }

    if (c_scaling->parsed()) {
      std::vector<Family> fams;
      if (families_arg == "all") {
        fams = all_families();
      } else {
        std::stringstream ss(families_arg);
        std::string item;
        while (std::getline(ss, item, ',')) fams.push_back(family_from_name(item));
      }
      const auto rows = scaling_table(fams, chi_min, chi_max);
      io::write_file((fs::path(out_dir) / "scaling.csv").string(),
                     io::scaling_to_csv(rows));
      std::cout << rows.size() << " rows\n";
      return kExitOk;
    }

    if (c_sim->parsed()) {
      const Schedule sched = io::load_schedule(schedule_path);
      const TermSet terms = io::load_terms(hamiltonian_path);
      const SimReport rep =
          stroboscopic_error(sched, build_hamiltonian(terms), deltas);
      io::write_file((fs::path(out_dir) / "report.json").string(),
                     io::sim_report_to_json(rep));
      std::cout << "slope: " << rep.slope << "\n";
      return kExitOk;
    }
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
