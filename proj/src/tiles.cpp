#include "knotmosaic/tiles.hpp"

namespace knotmosaic {

namespace {

constexpr EdgeSet kOcc[12] = {
    /* T0   */ EdgeSet{},
    /* I    */ EdgeSet{},
    /* IIa  */ EdgeSet{Edge::S, Edge::W},
    /* IIb  */ EdgeSet{Edge::S, Edge::E},
    /* IIc  */ EdgeSet{Edge::N, Edge::E},
    /* IId  */ EdgeSet{Edge::N, Edge::W},
    /* IIIa */ EdgeSet{Edge::E, Edge::W},
    /* IIIb */ EdgeSet{Edge::N, Edge::S},
    /* IVa  */ EdgeSet::all(),
    /* IVb  */ EdgeSet::all(),
    /* Va   */ EdgeSet::all(),
    /* Vb   */ EdgeSet::all(),
};

struct StrandTable {
  int count;
  StrandPair s[2];
};

// Crossing strands are listed over-strand first.
constexpr StrandTable kStrands[12] = {
    /* T0   */ {0, {}},
    /* I    */ {0, {}},
    /* IIa  */ {1, {{Edge::S, Edge::W}, {}}},
    /* IIb  */ {1, {{Edge::S, Edge::E}, {}}},
    /* IIc  */ {1, {{Edge::N, Edge::E}, {}}},
    /* IId  */ {1, {{Edge::N, Edge::W}, {}}},
    /* IIIa */ {1, {{Edge::E, Edge::W}, {}}},
    /* IIIb */ {1, {{Edge::N, Edge::S}, {}}},
    /* IVa  */ {2, {{Edge::S, Edge::W}, {Edge::N, Edge::E}}},
    /* IVb  */ {2, {{Edge::S, Edge::E}, {Edge::N, Edge::W}}},
    /* Va   */ {2, {{Edge::N, Edge::S}, {Edge::E, Edge::W}}},
    /* Vb   */ {2, {{Edge::E, Edge::W}, {Edge::N, Edge::S}}},
};

constexpr std::string_view kTokens[12] = {"0",  "_",  "2a", "2b", "2c", "2d",
                                          "3a", "3b", "4a", "4b", "5a", "5b"};

}  // namespace

const char* edge_name(Edge e) {
  switch (e) {
    case Edge::N: return "N";
    case Edge::E: return "E";
    case Edge::S: return "S";
    case Edge::W: return "W";
  }
  return "?";
}

EdgeSet occupancy(TileKind k) { return kOcc[uint8_t(k)]; }

int strand_count(TileKind k) { return kStrands[uint8_t(k)].count; }

StrandPair strand(TileKind k, int index) { return kStrands[uint8_t(k)].s[index]; }

Edge partner(TileKind k, Edge e) {
  const StrandTable& t = kStrands[uint8_t(k)];
  for (int i = 0; i < t.count; ++i)
    if (t.s[i].touches(e)) return t.s[i].other(e);
  return e;
}

int strand_index_at(TileKind k, Edge e) {
  const StrandTable& t = kStrands[uint8_t(k)];
  for (int i = 0; i < t.count; ++i)
    if (t.s[i].touches(e)) return i;
  return -1;
}

StrandPair over_strand(TileKind k) { return kStrands[uint8_t(k)].s[0]; }

TileKind dual_kind(TileKind k, TileKind blank_image) {
  switch (k) {
    case TileKind::Va:
    case TileKind::Vb: return TileKind::I;
    case TileKind::IVa:
    case TileKind::IVb: return TileKind::T0;
    case TileKind::IIIa: return TileKind::IIIb;
    case TileKind::IIIb: return TileKind::IIIa;
    case TileKind::IIa: return TileKind::IIc;
    case TileKind::IIc: return TileKind::IIa;
    case TileKind::IIb: return TileKind::IId;
    case TileKind::IId: return TileKind::IIb;
    case TileKind::I:
    case TileKind::T0: return blank_image;
  }
  return TileKind::I;
}

std::optional<TileKind> kind_with_occupancy(EdgeSet occ) {
  for (TileKind k : kAllKinds)
    if (!is_crossing(k) && !is_double_arc(k) && k != TileKind::T0 && occupancy(k) == occ)
      return k;
  return std::nullopt;
}

TileKind rotate90(TileKind k) {
  switch (k) {
    case TileKind::IIa: return TileKind::IIb;
    case TileKind::IIb: return TileKind::IIc;
    case TileKind::IIc: return TileKind::IId;
    case TileKind::IId: return TileKind::IIa;
    case TileKind::IIIa: return TileKind::IIIb;
    case TileKind::IIIb: return TileKind::IIIa;
    case TileKind::IVa: return TileKind::IVb;
    case TileKind::IVb: return TileKind::IVa;
    case TileKind::Va: return TileKind::Vb;
    case TileKind::Vb: return TileKind::Va;
    default: return k;
  }
}

TileKind reflect_h(TileKind k) {
  switch (k) {
    case TileKind::IIa: return TileKind::IIb;
    case TileKind::IIb: return TileKind::IIa;
    case TileKind::IIc: return TileKind::IId;
    case TileKind::IId: return TileKind::IIc;
    case TileKind::IVa: return TileKind::IVb;
    case TileKind::IVb: return TileKind::IVa;
    default: return k;  // lines and crossings keep their species
  }
}

TileKind mirror(TileKind k) {
  switch (k) {
    case TileKind::Va: return TileKind::Vb;
    case TileKind::Vb: return TileKind::Va;
    default: return k;
  }
}

std::string_view token(TileKind k) { return kTokens[uint8_t(k)]; }

std::optional<TileKind> parse_token(std::string_view tok) {
  for (size_t i = 0; i < 12; ++i)
    if (kTokens[i] == tok) return TileKind(i);
  return std::nullopt;
}

}  // namespace knotmosaic
