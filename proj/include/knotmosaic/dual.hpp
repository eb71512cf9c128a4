#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

enum class IvPolicy { always_a, always_b, checkerboard };
enum class PairingPolicy { always_a, always_b };
enum class CrossingPolicy { alternating, all_a };

// The dual D lives on the interior S of an n-mosaic: an (n-2) x (n-2) grid
// addressed in board coordinates (2 <= row, col <= n-1). Never contains
// crossing tiles; T0 marks a smoothed crossing (a type IV tile in the mosaic).
class Dual {
 public:
  Dual() = default;
  Dual(int board_n, TileKind fill = TileKind::IVa);

  int board_n() const { return board_n_; }
  int size() const { return board_n_ - 2; }
  TileKind at(int row, int col) const { return tiles_[idx(row, col)]; }
  TileKind at(Position p) const { return at(p.row, p.col); }
  void set(int row, int col, TileKind k);
  void set(Position p, TileKind k) { set(p.row, p.col, k); }

  bool in_bounds(int row, int col) const {
    return row >= 2 && row <= board_n_ - 1 && col >= 2 && col <= board_n_ - 1;
  }

  bool operator==(const Dual&) const = default;

 private:
  size_t idx(int row, int col) const;
  int board_n_ = 0;
  std::vector<TileKind> tiles_;
};

// The ordered triple T = (l, l', l''): l counts the non-blank dual tiles,
// l' = l minus the type 0 tiles, l'' counts the type IV dual tiles.
struct TripleT {
  int l = 0;
  int l_prime = 0;
  int l_dprime = 0;
  auto operator<=>(const TripleT&) const = default;
};

std::strong_ordering compare_T(const TripleT& a, const TripleT& b);

// Pre: validate(m).ok. Tile-wise substitution on S; the policy picks the
// image of blank tiles (IVa/IVb), which never affects the triple.
Dual compute_dual(const Mosaic& m, IvPolicy policy = IvPolicy::always_a);

// Interior tile grid recovered from a dual: occupancies are exact, the
// IV pairing and crossing species are chosen by policy.
struct InteriorGrid {
  int board_n = 0;
  std::vector<TileKind> tiles;  // row-major over S, row 2 first
  TileKind at(int row, int col) const;
};

InteriorGrid invert_dual(const Dual& d, PairingPolicy pairing = PairingPolicy::always_a,
                         CrossingPolicy crossing = CrossingPolicy::alternating);

TripleT triple(const Dual& d);

// .kmd text form: same layout as .kmo with size n-2; token "0" allowed,
// crossings rejected.
Dual parse_dual(std::string_view text);
std::string serialize_dual(const Dual& d);

// Internal suitable-connectivity of a dual: interior midpoints of S agree;
// strands may exit through the boundary of S (those are edge endpoints).
bool dual_connected(const Dual& d);

enum class Side { bottom, right, top, left };
const char* side_name(Side s);

enum class DualComponentKind { loop, xx_edge, xy_edge, spanning_edge, type0 };
const char* dual_component_kind_name(DualComponentKind k);

struct DualEndpoint {
  Position tile;
  Edge edge;  // the edge whose midpoint lies on the boundary of S
  Side side;
};

// One strand visit of a component: the tile plus the strand index within it.
struct StrandRef {
  Position tile;
  int strand = 0;
  auto operator<=>(const StrandRef&) const = default;
};

struct DualComponent {
  DualComponentKind kind = DualComponentKind::loop;
  std::vector<Position> tiles;      // distinct, sorted
  std::vector<StrandRef> strands;   // in walk order
  std::vector<DualEndpoint> endpoints;  // empty for loops/type0, else two
  bool bubble = false;     // loop occupying exactly 4 tiles
  bool outermost = false;  // edge with no edge outside of it
};

// Partition of the non-blank dual tiles into loops, edges and type 0 tiles,
// with bubble/outermost flags. Edges spanning opposite sides of S are
// reported with the spanning kind rather than rejected.
std::vector<DualComponent> classify_dual(const Dual& d);

// Region analysis for one edge component: an edge cuts S into two disks and
// the smaller side (by tile count) is its outside. Ties leave the edge with
// no outside.
class DualAnalysis {
 public:
  explicit DualAnalysis(const Dual& d);

  const std::vector<DualComponent>& components() const { return components_; }
  int component_at(StrandRef ref) const;  // index into components(), -1 if blank

  // True when every strand of `inner` lies in the outside region of `edge`.
  bool outside_of(int inner_index, int edge_index) const;

  // Number of XX-edges lying outside of some XY-edge (the measure reduced
  // by the XX-through-XY move).
  int xx_outside_xy_count() const;

 private:
  struct RegionInfo {
    bool has_outside = false;
    std::vector<int8_t> side;  // per tile of S: 0/1 region id, -1 on the edge
    int outside_side = -1;
  };
  void compute_regions(int edge_index);
  const Dual* dual_;
  std::vector<DualComponent> components_;
  std::vector<int> strand_component_;  // per (tile, strand) flattened
  std::vector<std::optional<RegionInfo>> regions_;
  int strand_slot(StrandRef ref) const;

  friend std::vector<DualComponent> classify_dual(const Dual& d);
};

}  // namespace knotmosaic
