#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "knotmosaic/tiles.hpp"

namespace knotmosaic {

// 1-based position; rows counted from the bottom, columns from the left.
struct Position {
  int row = 0;
  int col = 0;
  auto operator<=>(const Position&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& what);
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// An n x n grid of tiles. Never contains T0.
class Mosaic {
 public:
  Mosaic() = default;
  Mosaic(int n, TileKind fill = TileKind::I);

  int n() const { return n_; }
  TileKind at(int row, int col) const { return tiles_[idx(row, col)]; }
  TileKind at(Position p) const { return at(p.row, p.col); }
  void set(int row, int col, TileKind k);
  void set(Position p, TileKind k) { set(p.row, p.col, k); }

  bool in_bounds(int row, int col) const {
    return row >= 1 && row <= n_ && col >= 1 && col <= n_;
  }
  bool is_interior(int row, int col) const {
    return row >= 2 && row <= n_ - 1 && col >= 2 && col <= n_ - 1;
  }

  bool operator==(const Mosaic&) const = default;

 private:
  size_t idx(int row, int col) const;
  int n_ = 0;
  std::vector<TileKind> tiles_;
};

struct Violation {
  Position pos;
  Edge edge;
  bool board_boundary = false;  // strand touches the board boundary
  auto operator<=>(const Violation&) const = default;
};

struct ValidationReport {
  bool ok = false;
  std::vector<Violation> violations;
};

// First grid line of the text form is row n (top), the last is row 1.
Mosaic parse_mosaic(std::string_view text);
std::string serialize_mosaic(const Mosaic& m);

// Suitably-connected check: every interior grid edge agrees on occupancy and
// no strand touches the board boundary. Violations are data, not failures.
ValidationReport validate(const Mosaic& m);

// An element of the square's symmetry group, optionally composed with the
// crossing swap Va <-> Vb. Board action: reflect first (across the vertical
// axis), then rotate counterclockwise by rot * 90 degrees.
struct SymmetryOp {
  int rot = 0;        // 0..3 quarter turns, counterclockwise
  bool reflect = false;
  bool mirror = false;

  static SymmetryOp identity() { return {}; }
  static SymmetryOp rotation(int quarters) { return {((quarters % 4) + 4) % 4, false, false}; }
  static SymmetryOp reflection() { return {0, true, false}; }
  static SymmetryOp crossing_swap() { return {0, false, true}; }

  SymmetryOp inverse() const;
  Position apply(Position p, int n) const;
  bool operator==(const SymmetryOp&) const = default;
};

// All sixteen ops (8 dihedral x crossing swap).
const std::vector<SymmetryOp>& symmetry_group();
// The eight ops preserving knot type: rotations, and reflections composed
// with the crossing swap.
const std::vector<SymmetryOp>& knot_symmetries();

Mosaic transform(const Mosaic& m, const SymmetryOp& op);

}  // namespace knotmosaic
