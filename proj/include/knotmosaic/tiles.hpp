#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string_view>

namespace knotmosaic {

// Edge order N < E < S < W is the canonical order used for serialization,
// walk discovery and all deterministic tie-breaks.
enum class Edge : uint8_t { N = 0, E = 1, S = 2, W = 3 };

constexpr std::array<Edge, 4> kEdges{Edge::N, Edge::E, Edge::S, Edge::W};

constexpr Edge opposite(Edge e) {
  switch (e) {
    case Edge::N: return Edge::S;
    case Edge::E: return Edge::W;
    case Edge::S: return Edge::N;
    case Edge::W: return Edge::E;
  }
  return Edge::N;
}

const char* edge_name(Edge e);

// Subset of {N,E,S,W} as a 4-bit mask.
class EdgeSet {
 public:
  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(uint8_t bits) : bits_(bits & 0xf) {}
  constexpr EdgeSet(std::initializer_list<Edge> edges) {
    for (Edge e : edges) bits_ |= mask(e);
  }

  static constexpr EdgeSet all() { return EdgeSet(0xf); }

  constexpr bool contains(Edge e) const { return bits_ & mask(e); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    int c = 0;
    for (Edge e : kEdges) c += contains(e) ? 1 : 0;
    return c;
  }
  constexpr uint8_t bits() const { return bits_; }

  constexpr EdgeSet operator|(EdgeSet o) const { return EdgeSet(uint8_t(bits_ | o.bits_)); }
  constexpr EdgeSet operator&(EdgeSet o) const { return EdgeSet(uint8_t(bits_ & o.bits_)); }
  constexpr bool disjoint(EdgeSet o) const { return (bits_ & o.bits_) == 0; }
  constexpr bool operator==(const EdgeSet&) const = default;

 private:
  static constexpr uint8_t mask(Edge e) { return uint8_t(1u << uint8_t(e)); }
  uint8_t bits_ = 0;
};

// The eleven mosaic tile species plus the dual-only dotted tile T0.
//  I     blank
//  IIa..IId  single arcs: {S,W}, {S,E}, {N,E}, {N,W}
//  IIIa  horizontal line {E,W};  IIIb vertical line {N,S}
//  IVa   double arc pairing (S-W, N-E);  IVb pairing (S-E, N-W)
//  Va    crossing with the N-S strand over;  Vb with E-W over
enum class TileKind : uint8_t { T0, I, IIa, IIb, IIc, IId, IIIa, IIIb, IVa, IVb, Va, Vb };

constexpr std::array<TileKind, 12> kAllKinds{
    TileKind::T0,   TileKind::I,    TileKind::IIa, TileKind::IIb,
    TileKind::IIc,  TileKind::IId,  TileKind::IIIa, TileKind::IIIb,
    TileKind::IVa,  TileKind::IVb,  TileKind::Va,  TileKind::Vb};

// The 11 species allowed in a mosaic grid (everything but T0).
constexpr std::array<TileKind, 11> kMosaicKinds{
    TileKind::I,    TileKind::IIa,  TileKind::IIb, TileKind::IIc,
    TileKind::IId,  TileKind::IIIa, TileKind::IIIb, TileKind::IVa,
    TileKind::IVb,  TileKind::Va,   TileKind::Vb};

EdgeSet occupancy(TileKind k);

constexpr bool is_crossing(TileKind k) { return k == TileKind::Va || k == TileKind::Vb; }
constexpr bool is_double_arc(TileKind k) { return k == TileKind::IVa || k == TileKind::IVb; }
constexpr bool is_single_arc(TileKind k) {
  return k == TileKind::IIa || k == TileKind::IIb || k == TileKind::IIc || k == TileKind::IId;
}
constexpr bool is_line(TileKind k) { return k == TileKind::IIIa || k == TileKind::IIIb; }

// A strand joins two edge midpoints inside the tile.
struct StrandPair {
  Edge a, b;
  bool touches(Edge e) const { return a == e || b == e; }
  Edge other(Edge e) const { return a == e ? b : a; }
};

// Strands of a tile, in a fixed order (at most two; crossing strands are
// listed over-strand first).
int strand_count(TileKind k);
StrandPair strand(TileKind k, int index);

// The edge paired with `e` by the strand through it. Pre: occupancy contains e.
Edge partner(TileKind k, Edge e);

// Index of the strand through edge `e`.
int strand_index_at(TileKind k, Edge e);

// Over-strand of a crossing tile (Va: N-S, Vb: E-W).
StrandPair over_strand(TileKind k);

// The tile-wise dual substitution: V -> I, IV -> T0, IIIa <-> IIIb,
// IIa <-> IIc, IIb <-> IId, I -> IV (blank_image picks IVa or IVb),
// T0 -> blank_image as well (so the map is involutive up to the IV choice).
TileKind dual_kind(TileKind k, TileKind blank_image = TileKind::IVa);

// Species with the given single-arc / line occupancy, if any.
std::optional<TileKind> kind_with_occupancy(EdgeSet occ);

// Orientation actions on species.
TileKind rotate90(TileKind k);   // counterclockwise quarter turn
TileKind reflect_h(TileKind k);  // flip across the vertical axis (E <-> W)
TileKind mirror(TileKind k);     // crossing swap Va <-> Vb

// Text tokens: "_" (I), "0" (T0), "2a".."2d", "3a","3b", "4a","4b", "5a","5b".
std::string_view token(TileKind k);
std::optional<TileKind> parse_token(std::string_view tok);

}  // namespace knotmosaic
