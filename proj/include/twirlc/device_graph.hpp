#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "twirlc/pauli.hpp"

namespace twirlc {

// Interaction alphabet attached to a hyperedge.
enum class Model { All, ZType, Heisenberg, Chirality, Custom };

std::string model_name(Model m);
Model model_from_name(const std::string& s);

struct Hyperedge {
  std::vector<int> sites;  // vertex ids, sorted, >= 2 distinct
  Model model = Model::All;
  // For Model::Custom: allowed letters per site (parallel to sites).
  std::vector<std::vector<char>> alphabet;

  bool operator==(const Hyperedge& o) const {
    return sites == o.sites && model == o.model && alphabet == o.alphabet;
  }
  bool operator<(const Hyperedge& o) const {
    if (sites != o.sites) return sites < o.sites;
    if (model != o.model) return model < o.model;
    return alphabet < o.alphabet;
  }
};

// Interaction hypergraph of a device.  Vertices carry an on-site noise
// alphabet (default X,Y,Z); hyperedges carry the joint interaction model.
struct DeviceGraph {
  std::vector<int> vertices;                 // sorted unique ids
  std::vector<Hyperedge> hyperedges;         // deduplicated, sorted
  std::map<int, std::vector<char>> onsite;   // missing id => {X,Y,Z}

  std::size_t k_locality() const;
  void normalize();  // sort/dedup vertices and hyperedges, validate

  std::vector<char> onsite_alphabet(int v) const;
};

// Vertex color assignment, colors 1..chi.
struct Coloring {
  std::map<int, int> assignment;

  int chi() const;
  int color_of(int v) const;
};

struct QuotientEdge {
  std::vector<int> colors;  // sorted distinct colors
  Model model = Model::All;
  std::vector<std::vector<char>> alphabet;  // for Custom, per color slot

  bool operator<(const QuotientEdge& o) const {
    if (colors != o.colors) return colors < o.colors;
    if (model != o.model) return model < o.model;
    return alphabet < o.alphabet;
  }
  bool operator==(const QuotientEdge& o) const {
    return colors == o.colors && model == o.model && alphabet == o.alphabet;
  }
};

// Collapsed graph on color classes.
struct QuotientGraph {
  int chi = 0;
  std::vector<QuotientEdge> hyperedges;            // sorted, dedup
  std::vector<std::vector<char>> onsite;           // per color (1-based -> index c-1)

  bool operator==(const QuotientGraph& o) const {
    return chi == o.chi && hyperedges == o.hyperedges && onsite == o.onsite;
  }
};

// Simple graph used by the coloring routines.
struct SimpleGraph {
  std::vector<int> vertices;
  std::set<std::pair<int, int>> edges;  // ordered pairs u < v
};

// 2-section: edge {u,v} iff u,v share a hyperedge.
SimpleGraph two_section(const DeviceGraph& g);

// DSATUR on the 2-section; ties broken toward the smallest vertex id (or
// the earliest entry of seed_order when given).  Deterministic.
Coloring color(const DeviceGraph& g,
               const std::vector<int>* seed_order = nullptr);

// True iff every hyperedge is rainbow.
bool validate_coloring(const DeviceGraph& g, const Coloring& c);

// Color-symmetric expansion: adds every rainbow vertex tuple whose color
// tuple already occurs on some hyperedge.  The input coloring remains
// valid for the result.
DeviceGraph expand(const DeviceGraph& g, const Coloring& c);

QuotientGraph quotient(const DeviceGraph& g, const Coloring& c);

// Canonical form of a simple graph under vertex relabeling (brute force,
// intended for small graphs in tests).
std::vector<std::pair<int, int>> canonical_edge_list(const SimpleGraph& g);

}  // namespace twirlc
