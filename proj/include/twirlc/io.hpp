#pragma once

#include <string>

#include "twirlc/codes.hpp"
#include "twirlc/compiler.hpp"
#include "twirlc/device_graph.hpp"
#include "twirlc/oracle.hpp"
#include "twirlc/schedule.hpp"

namespace twirlc::io {

// Device file:
//   {"vertices":[ids],
//    "hyperedges":[{"sites":[...], "model":"all|Z|heisenberg|chirality|custom",
//                   "alphabet":[["I","X"],...]}],
//    "onsite":{"id":["X","Z"], ...}}
DeviceGraph load_device(const std::string& path);
void save_device(const DeviceGraph& g, const std::string& path);

// Coloring file: {"chi":c, "colors":{"id":color, ...}}
Coloring load_coloring(const std::string& path);
void save_coloring(const Coloring& c, const std::string& path);

// Code file: {"n":n, "alphabet":"F4|F2", "generators":["XIXXX", ...]}
AdditiveCode load_code(const std::string& path);
void save_code(const AdditiveCode& c, const std::string& path);

// Hamiltonian file:
//   {"n":n, "terms":[{"pauli":"ZZIIII","coeff":0.25,"role":"suppress|preserve"}]}
TermSet load_terms(const std::string& path);
void save_terms(const TermSet& t, const std::string& path);

std::string schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const std::string& text);
void save_schedule(const Schedule& s, const std::string& path);
Schedule load_schedule(const std::string& path);

// CSV of frame letter rows, one column per color.
std::string schedule_to_csv(const Schedule& s);
// CSV of per-qubit letter columns for a lifted schedule.
std::string lifted_to_csv(const Schedule& s);

std::string oa_to_csv(const OrthogonalArray& oa);

std::string verdict_to_json(const Verdict& v);
void save_verdict(const Verdict& v, const std::string& path);

std::string scaling_to_csv(const std::vector<ScalingRow>& rows);

std::string sim_report_to_json(const SimReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace twirlc::io
