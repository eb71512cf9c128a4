#pragma once

#include <vector>

#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

struct WalkStep {
  Position pos;
  Edge entry;
  Edge exit;
  bool operator==(const WalkStep&) const = default;
};

// A closed strand walk through the mosaic; at a crossing the walk follows
// the pairing N-S or E-W, never turning.
struct StrandWalk {
  std::vector<WalkStep> steps;
  bool closed = true;
};

struct TraceSummary {
  bool valid = false;
  int components = 0;
  int crossings = 0;
  bool is_knot = false;
};

// Deterministic component walks: discovery starts at the least unvisited
// (row, col, edge) incidence, exiting toward the lesser edge (N<E<S<W).
// Pre: validate(m).ok; otherwise throws std::invalid_argument.
std::vector<StrandWalk> trace_components(const Mosaic& m);

TraceSummary classify(const Mosaic& m);

// Crossings whose two adjacent strand-ends close a monogon (removable by a
// type I Reidemeister move). Pre: validate(m).ok.
std::vector<Position> nugatory_crossings(const Mosaic& m);

}  // namespace knotmosaic
