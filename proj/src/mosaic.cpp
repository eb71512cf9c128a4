#include "knotmosaic/mosaic.hpp"

#include <charconv>
#include <sstream>

namespace knotmosaic {

ParseError::ParseError(int line, int col, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + what),
      line_(line),
      col_(col) {}

Mosaic::Mosaic(int n, TileKind fill) : n_(n), tiles_(size_t(n) * size_t(n), fill) {
  if (n < 1) throw std::invalid_argument("mosaic size must be >= 1");
  if (fill == TileKind::T0) throw std::invalid_argument("T0 tile not allowed in a mosaic");
}

size_t Mosaic::idx(int row, int col) const {
  if (!in_bounds(row, col)) throw std::out_of_range("mosaic position out of range");
  return size_t(row - 1) * size_t(n_) + size_t(col - 1);
}

void Mosaic::set(int row, int col, TileKind k) {
  if (k == TileKind::T0) throw std::invalid_argument("T0 tile not allowed in a mosaic");
  tiles_[idx(row, col)] = k;
}

namespace {

// Shared tokenizer for .kmo and .kmd bodies. Lines are 1-based; the size
// header is line 1, the top grid row is line 2.
std::vector<std::vector<TileKind>> parse_grid_lines(std::string_view text, int& out_size,
                                                    bool allow_t0, bool allow_crossing) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw ParseError(1, 1, "empty input");

  int n = 0;
  {
    std::string_view l0 = lines[0];
    auto [p, ec] = std::from_chars(l0.data(), l0.data() + l0.size(), n);
    if (ec != std::errc() || p != l0.data() + l0.size() || n < 1)
      throw ParseError(1, 1, "expected a positive grid size, got '" + std::string(l0) + "'");
  }
  if (int(lines.size()) < n + 1) throw ParseError(int(lines.size()) + 1, 1, "missing grid rows");
  for (size_t i = n + 1; i < lines.size(); ++i)
    if (!lines[i].empty())
      throw ParseError(int(i) + 1, 1, "trailing content after the grid");

  std::vector<std::vector<TileKind>> rows;  // top row first
  for (int li = 1; li <= n; ++li) {
    std::string_view line = lines[size_t(li)];
    std::vector<TileKind> row;
    size_t col = 0;
    while (col < line.size()) {
      while (col < line.size() && line[col] == ' ') ++col;
      if (col >= line.size()) break;
      size_t tok_end = col;
      while (tok_end < line.size() && line[tok_end] != ' ') ++tok_end;
      std::string_view tok = line.substr(col, tok_end - col);
      auto k = parse_token(tok);
      if (!k)
        throw ParseError(li + 1, int(col) + 1, "unknown tile token '" + std::string(tok) + "'");
      if (*k == TileKind::T0 && !allow_t0)
        throw ParseError(li + 1, int(col) + 1, "type 0 tile not allowed in a mosaic file");
      if (is_crossing(*k) && !allow_crossing)
        throw ParseError(li + 1, int(col) + 1, "crossing tile not allowed in a dual file");
      row.push_back(*k);
      col = tok_end;
    }
    if (int(row.size()) != n)
      throw ParseError(li + 1, int(line.size()) + 1,
                       "expected " + std::to_string(n) + " tokens, got " +
                           std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  out_size = n;
  return rows;
}

std::string serialize_grid(int n, const std::vector<std::vector<TileKind>>& rows_top_first) {
  std::string out = std::to_string(n);
  out.push_back('\n');
  for (const auto& row : rows_top_first) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out.push_back(' ');
      out += token(row[j]);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace

Mosaic parse_mosaic(std::string_view text) {
  int n = 0;
  auto rows = parse_grid_lines(text, n, /*allow_t0=*/false, /*allow_crossing=*/true);
  Mosaic m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(n - i, j + 1, rows[size_t(i)][size_t(j)]);
  return m;
}

std::string serialize_mosaic(const Mosaic& m) {
  std::vector<std::vector<TileKind>> rows;
  for (int i = m.n(); i >= 1; --i) {
    std::vector<TileKind> row;
    for (int j = 1; j <= m.n(); ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return serialize_grid(m.n(), rows);
}

ValidationReport validate(const Mosaic& m) {
  ValidationReport rep;
  const int n = m.n();
  auto neighbor_occupied = [&](int i, int j, Edge e, bool& off_board) {
    int ni = i, nj = j;
    switch (e) {
      case Edge::N: ++ni; break;
      case Edge::S: --ni; break;
      case Edge::E: ++nj; break;
      case Edge::W: --nj; break;
    }
    if (!m.in_bounds(ni, nj)) {
      off_board = true;
      return false;
    }
    off_board = false;
    return occupancy(m.at(ni, nj)).contains(opposite(e));
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      EdgeSet occ = occupancy(m.at(i, j));
      for (Edge e : kEdges) {
        bool off = false;
        bool other = neighbor_occupied(i, j, e, off);
        if (off) {
          if (occ.contains(e)) rep.violations.push_back({{i, j}, e, true});
        } else if (occ.contains(e) && !other) {
          // Report each mismatched grid edge once, from the occupied side.
          rep.violations.push_back({{i, j}, e, false});
        }
      }
    }
  rep.ok = rep.violations.empty();
  return rep;
}

SymmetryOp SymmetryOp::inverse() const {
  // Reflections (and their rotated variants) are involutions; pure rotations
  // invert by negating the turn count. The crossing swap commutes with all.
  if (reflect) return {rot, true, mirror};
  return {(4 - rot) % 4, false, mirror};
}

Position SymmetryOp::apply(Position p, int n) const {
  if (reflect) p = {p.row, n + 1 - p.col};
  for (int k = 0; k < rot; ++k) p = {p.col, n + 1 - p.row};  // one CCW quarter turn
  return p;
}

const std::vector<SymmetryOp>& symmetry_group() {
  static const std::vector<SymmetryOp> g = [] {
    std::vector<SymmetryOp> v;
    for (int mir = 0; mir < 2; ++mir)
      for (int refl = 0; refl < 2; ++refl)
        for (int rot = 0; rot < 4; ++rot) v.push_back({rot, refl != 0, mir != 0});
    return v;
  }();
  return g;
}

const std::vector<SymmetryOp>& knot_symmetries() {
  static const std::vector<SymmetryOp> g = [] {
    std::vector<SymmetryOp> v;
    for (int rot = 0; rot < 4; ++rot) v.push_back({rot, false, false});
    for (int rot = 0; rot < 4; ++rot) v.push_back({rot, true, true});
    return v;
  }();
  return g;
}

Mosaic transform(const Mosaic& m, const SymmetryOp& op) {
  Mosaic out(m.n());
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j) {
      Position dest = op.apply({i, j}, m.n());
      TileKind k = m.at(i, j);
      if (op.reflect) k = reflect_h(k);
      for (int r = 0; r < op.rot; ++r) k = rotate90(k);
      if (op.mirror) k = mirror(k);
      out.set(dest, k);
    }
  return out;
}

}  // namespace knotmosaic
