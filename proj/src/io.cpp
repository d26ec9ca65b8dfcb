#include "twirlc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace twirlc::io {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

namespace {

std::vector<char> parse_letters(const json& arr) {
  std::vector<char> out;
  for (const auto& s : arr) {
    const std::string v = s.get<std::string>();
    if (v.size() != 1 || !is_pauli_letter(v[0]))
      throw std::runtime_error("bad Pauli letter in alphabet");
    out.push_back(v[0]);
  }
  return out;
}

json letters_to_json(const std::vector<char>& letters) {
  json arr = json::array();
  for (char l : letters) arr.push_back(std::string(1, l));
  return arr;
}

}  // namespace

DeviceGraph load_device(const std::string& path) {
  const json j = json::parse(read_file(path));
  DeviceGraph g;
  for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<int>());
  for (const auto& e : j.value("hyperedges", json::array())) {
    Hyperedge h;
    for (const auto& s : e.at("sites")) h.sites.push_back(s.get<int>());
    h.model = model_from_name(e.value("model", "all"));
    if (e.contains("alphabet"))
      for (const auto& a : e["alphabet"]) h.alphabet.push_back(parse_letters(a));
    g.hyperedges.push_back(std::move(h));
  }
  if (j.contains("onsite"))
    for (auto it = j["onsite"].begin(); it != j["onsite"].end(); ++it)
      g.onsite[std::stoi(it.key())] = parse_letters(it.value());
  g.normalize();
  return g;
}

void save_device(const DeviceGraph& g, const std::string& path) {
  json j;
  j["vertices"] = g.vertices;
  j["hyperedges"] = json::array();
  for (const auto& e : g.hyperedges) {
    json je;
    je["sites"] = e.sites;
    je["model"] = model_name(e.model);
    if (!e.alphabet.empty()) {
      je["alphabet"] = json::array();
      for (const auto& a : e.alphabet) je["alphabet"].push_back(letters_to_json(a));
    }
    j["hyperedges"].push_back(std::move(je));
  }
  if (!g.onsite.empty()) {
    json jo = json::object();
    for (const auto& [v, a] : g.onsite) jo[std::to_string(v)] = letters_to_json(a);
    j["onsite"] = std::move(jo);
  }
  write_file(path, j.dump(2) + "\n");
}

Coloring load_coloring(const std::string& path) {
  const json j = json::parse(read_file(path));
  Coloring c;
  const json& colors = j.contains("colors") ? j["colors"] : j;
  for (auto it = colors.begin(); it != colors.end(); ++it)
    c.assignment[std::stoi(it.key())] = it.value().get<int>();
  return c;
}

void save_coloring(const Coloring& c, const std::string& path) {
  json j;
  j["chi"] = c.chi();
  json jc = json::object();
  for (const auto& [v, col] : c.assignment) jc[std::to_string(v)] = col;
  j["colors"] = std::move(jc);
  write_file(path, j.dump(2) + "\n");
}

AdditiveCode load_code(const std::string& path) {
  const json j = json::parse(read_file(path));
  AdditiveCode c;
  c.n = j.at("n").get<std::size_t>();
  c.alphabet = j.value("alphabet", "F4") == "F2" ? Alphabet::F2 : Alphabet::F4;
  for (const auto& g : j.at("generators")) {
    PauliString p(g.get<std::string>());
    if (p.num_sites() != c.n) throw std::runtime_error("generator length mismatch");
    c.generators.push_back(std::move(p));
  }
  if (!c.generators_independent())
    throw std::runtime_error("code file generators are dependent");
  return c;
}

void save_code(const AdditiveCode& c, const std::string& path) {
  json j;
  j["n"] = c.n;
  j["alphabet"] = c.alphabet == Alphabet::F2 ? "F2" : "F4";
  j["generators"] = json::array();
  for (const auto& g : c.generators) j["generators"].push_back(g.to_string());
  write_file(path, j.dump(2) + "\n");
}

TermSet load_terms(const std::string& path) {
  const json j = json::parse(read_file(path));
  TermSet t;
  t.n = j.at("n").get<std::size_t>();
  for (const auto& jt : j.at("terms")) {
    PauliString p(jt.at("pauli").get<std::string>());
    if (p.num_sites() != t.n) throw std::runtime_error("term length mismatch");
    const double coeff = jt.value("coeff", 1.0);
    const std::string role = jt.value("role", "suppress");
    t.add(p, coeff, role == "preserve" ? TermRole::Preserve : TermRole::Suppress);
  }
  return t;
}

void save_terms(const TermSet& t, const std::string& path) {
  json j;
  j["n"] = t.n;
  j["terms"] = json::array();
  for (const auto& term : t.terms) {
    json jt;
    jt["pauli"] = term.pauli.to_string();
    jt["coeff"] = term.coeff;
    jt["role"] = term.role == TermRole::Preserve ? "preserve" : "suppress";
    j["terms"].push_back(std::move(jt));
  }
  write_file(path, j.dump(2) + "\n");
}

std::string schedule_to_json(const Schedule& s) {
  json j;
  j["mode"] = s.mode == ControlMode::BangBang ? "bang-bang" : "bounded";
  j["colors"] = s.colors;
  j["L"] = s.length;
  // "frames" holds the toggling frames (bang-bang) or the per-interval
  // generator labels (bounded)
  j["frames"] = json::array();
  if (s.mode == ControlMode::BangBang) {
    for (const auto& f : s.frames) j["frames"].push_back(f.to_string());
    j["interpulse"] = json::array();
    for (const auto& p : s.interpulse) j["interpulse"].push_back(p.to_string());
  } else {
    for (const auto& g : s.intervals) j["frames"].push_back(g.to_string());
  }
  if (!s.lifted.empty()) {
    json jl = json::object();
    for (const auto& [q, train] : s.lifted) {
      json arr = json::array();
      for (char l : train) arr.push_back(std::string(1, l));
      jl[std::to_string(q)] = std::move(arr);
    }
    j["lifted"] = std::move(jl);
  }
  return j.dump(2) + "\n";
}

Schedule schedule_from_json(const std::string& text) {
  const json j = json::parse(text);
  Schedule s;
  s.mode = j.at("mode") == "bounded" ? ControlMode::Bounded : ControlMode::BangBang;
  s.colors = j.at("colors").get<std::size_t>();
  s.length = j.at("L").get<std::size_t>();
  if (s.mode == ControlMode::BangBang) {
    for (const auto& f : j.value("frames", json::array()))
      s.frames.emplace_back(f.get<std::string>());
    for (const auto& p : j.value("interpulse", json::array()))
      s.interpulse.emplace_back(p.get<std::string>());
  } else {
    const char* key = j.contains("frames") ? "frames" : "intervals";
    for (const auto& g : j.value(key, json::array()))
      s.intervals.emplace_back(g.get<std::string>());
  }
  if (j.contains("lifted"))
    for (auto it = j["lifted"].begin(); it != j["lifted"].end(); ++it) {
      std::string train;
      for (const auto& l : it.value()) train += l.get<std::string>();
      s.lifted[std::stoi(it.key())] = std::move(train);
    }
  return s;
}

void save_schedule(const Schedule& s, const std::string& path) {
  write_file(path, schedule_to_json(s));
}

Schedule load_schedule(const std::string& path) {
  return schedule_from_json(read_file(path));
}

std::string schedule_to_csv(const Schedule& s) {
  std::ostringstream out;
  for (std::size_t c = 1; c <= s.colors; ++c)
    out << (c > 1 ? "," : "") << "c" << c;
  out << "\n";
  const auto& rows = s.mode == ControlMode::BangBang ? s.frames : s.intervals;
  for (const auto& f : rows) {
    for (std::size_t c = 0; c < s.colors; ++c)
      out << (c > 0 ? "," : "") << f.letter(c);
    out << "\n";
  }
  return out.str();
}

std::string lifted_to_csv(const Schedule& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [q, train] : s.lifted) {
    out << (first ? "" : ",") << "q" << q;
    first = false;
  }
  out << "\n";
  for (std::size_t slot = 0; slot < s.length; ++slot) {
    first = true;
    for (const auto& [q, train] : s.lifted) {
      out << (first ? "" : ",") << train[slot];
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

std::string oa_to_csv(const OrthogonalArray& oa) {
  std::ostringstream out;
  for (std::size_t c = 1; c <= oa.columns; ++c)
    out << (c > 1 ? "," : "") << "c" << c;
  out << "\n";
  for (const auto& r : oa.rows) {
    for (std::size_t c = 0; c < oa.columns; ++c)
      out << (c > 0 ? "," : "") << r.letter(c);
    out << "\n";
  }
  return out.str();
}

std::string verdict_to_json(const Verdict& v) {
  json j;
  j["universal"] = v.universal;
  j["terms"] = json::array();
  for (const auto& t : v.terms) {
    json jt;
    jt["pauli"] = t.term.to_string();
    jt["status"] = t.status == TermStatus::Suppressed ? "suppressed" : "preserved";
    if (t.witness) jt["witness"] = t.witness->to_string();
    j["terms"].push_back(std::move(jt));
  }
  return j.dump(2) + "\n";
}

void save_verdict(const Verdict& v, const std::string& path) {
  write_file(path, verdict_to_json(v));
}

std::string scaling_to_csv(const std::vector<ScalingRow>& rows) {
  std::ostringstream out;
  out << "family,chi,generators,L\n";
  for (const auto& r : rows)
    out << family_name(r.family) << "," << r.chi << "," << r.generators << ","
        << r.length << "\n";
  return out.str();
}

std::string sim_report_to_json(const SimReport& r) {
  json j;
  j["deltas"] = r.deltas;
  j["residuals"] = r.residuals;
  j["slope"] = r.slope;
  j["ok"] = r.ok;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j.dump(2) + "\n";
}

}  // namespace twirlc::io
