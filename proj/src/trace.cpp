#include "knotmosaic/trace.hpp"

#include <algorithm>
#include <set>

namespace knotmosaic {

namespace {

struct Incidence {
  int row, col;
  Edge edge;
  auto operator<=>(const Incidence&) const = default;
};

void require_valid(const Mosaic& m) {
  ValidationReport rep = validate(m);
  if (!rep.ok) {
    const Violation& v = rep.violations.front();
    throw std::invalid_argument("mosaic is not suitably connected (" +
                                std::to_string(rep.violations.size()) +
                                " violations, first at row " + std::to_string(v.pos.row) +
                                ", col " + std::to_string(v.pos.col) + ", edge " +
                                edge_name(v.edge) + ")");
  }
}

Position step_across(Position p, Edge e) {
  switch (e) {
    case Edge::N: return {p.row + 1, p.col};
    case Edge::S: return {p.row - 1, p.col};
    case Edge::E: return {p.row, p.col + 1};
    case Edge::W: return {p.row, p.col - 1};
  }
  return p;
}

}  // namespace

std::vector<StrandWalk> trace_components(const Mosaic& m) {
  require_valid(m);
  std::set<Incidence> unvisited;
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j) {
      EdgeSet occ = occupancy(m.at(i, j));
      for (Edge e : kEdges)
        if (occ.contains(e)) unvisited.insert({i, j, e});
    }

  std::vector<StrandWalk> walks;
  while (!unvisited.empty()) {
    Incidence start = *unvisited.begin();
    Position pos{start.row, start.col};
    Edge e = start.edge;
    Edge e2 = partner(m.at(pos.row, pos.col), e);
    WalkStep first{pos, std::max(e, e2), std::min(e, e2)};

    StrandWalk walk;
    WalkStep step = first;
    do {
      walk.steps.push_back(step);
      unvisited.erase({step.pos.row, step.pos.col, step.entry});
      unvisited.erase({step.pos.row, step.pos.col, step.exit});
      Position next = step_across(step.pos, step.exit);
      Edge entry = opposite(step.exit);
      Edge exit = partner(m.at(next.row, next.col), entry);
      step = {next, entry, exit};
    } while (!(step == first));
    walks.push_back(std::move(walk));
  }
  return walks;
}

TraceSummary classify(const Mosaic& m) {
  TraceSummary s;
  if (!validate(m).ok) return s;
  s.valid = true;
  s.components = int(trace_components(m).size());
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j)
      if (is_crossing(m.at(i, j))) ++s.crossings;
  s.is_knot = s.components == 1;
  return s;
}

std::vector<Position> nugatory_crossings(const Mosaic& m) {
  require_valid(m);
  std::vector<Position> out;
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j) {
      if (!is_crossing(m.at(i, j))) continue;
      Position c{i, j};
      bool nugatory = false;
      // Follow the arc leaving each of the four ends until the first
      // crossing entry. A monogon closes back into this same crossing.
      for (Edge out_edge : kEdges) {
        Position pos = step_across(c, out_edge);
        Edge entry = opposite(out_edge);
        while (!is_crossing(m.at(pos.row, pos.col))) {
          Edge exit = partner(m.at(pos.row, pos.col), entry);
          pos = step_across(pos, exit);
          entry = opposite(exit);
        }
        if (pos == c) {
          nugatory = true;
          break;
        }
      }
      if (nugatory) out.push_back(c);
    }
  return out;
}

}  // namespace knotmosaic
