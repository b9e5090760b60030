// Copyright 2026 The Ludemic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ludemic/container.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ludemic {
namespace {

constexpr std::array<std::string_view, kNumDirections> kDirectionNames = {
    "N", "NE", "E", "SE", "S", "SW", "W", "NW"};

constexpr int kSquareDelta[kNumDirections][2] = {
    // {dcol, drow}
    {0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}};

// Axial (dq, dr) for the six hex directions; N and S do not exist.
struct HexStep {
  Direction direction;
  int dq;
  int dr;
};
constexpr std::array<HexStep, 6> kHexSteps = {{
    {Direction::kNE, 0, 1},
    {Direction::kE, 1, 0},
    {Direction::kSE, 1, -1},
    {Direction::kSW, 0, -1},
    {Direction::kW, -1, 0},
    {Direction::kNW, -1, 1},
}};

void InitNeighborTables(Container& c) {
  for (auto& table : c.pregen.neighbors) table.assign(c.vertices.size(), -1);
}

void FinishEdges(Container& c) {
  c.adjacency.assign(c.vertices.size(), {});
  std::sort(c.edges.begin(), c.edges.end());
  c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
  for (auto [u, v] : c.edges) {
    c.adjacency[u].push_back(v);
    c.adjacency[v].push_back(u);
  }
  for (auto& list : c.adjacency) std::sort(list.begin(), list.end());
}

void EdgesFromDirections(Container& c) {
  for (Direction d : c.pregen.edge_directions) {
    const auto& table = c.pregen.neighbors[static_cast<int>(d)];
    for (int v = 0; v < c.num_sites(); ++v) {
      const int u = table[v];
      if (u >= 0) c.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  FinishEdges(c);
}

std::vector<Point> HexPolygon(Point center) {
  const double radius = 1.0 / std::numbers::sqrt3;
  std::vector<Point> corners;
  for (int k = 0; k < 6; ++k) {
    const double angle = std::numbers::pi / 6 + k * std::numbers::pi / 3;
    corners.push_back(
        {center.x + radius * std::cos(angle), center.y + radius * std::sin(angle)});
  }
  return corners;
}

}  // namespace

std::string_view DirectionName(Direction d) {
  return kDirectionNames[static_cast<int>(d)];
}

std::optional<Direction> ParseDirection(std::string_view name) {
  for (int i = 0; i < kNumDirections; ++i) {
    if (kDirectionNames[i] == name) return static_cast<Direction>(i);
  }
  return std::nullopt;
}

Direction Opposite(Direction d) {
  return static_cast<Direction>((static_cast<int>(d) + 4) % kNumDirections);
}

bool Container::HasEdge(int u, int v) const {
  if (u < 0 || v < 0 || u >= num_sites() || v >= num_sites()) return false;
  const auto& list = adjacency[u];
  return std::binary_search(list.begin(), list.end(), v);
}

Container BuildRectangleGraph(int rows, int columns, SquareAdjacency adjacency) {
  if (rows < 1 || columns < 1) {
    throw std::invalid_argument("board dimensions must be >= 1");
  }
  Container c;
  c.tiling = Tiling::kSquare;
  c.shape = rows == columns ? "square " + std::to_string(rows)
                            : "rectangle " + std::to_string(rows) + " " +
                                  std::to_string(columns);
  c.pregen.rows = rows;
  c.pregen.columns = columns;
  for (int r = 0; r < rows; ++r) {
    for (int col = 0; col < columns; ++col) {
      Vertex v;
      v.row = r;
      v.column = col;
      v.centroid = {static_cast<double>(col), static_cast<double>(r)};
      const double x = col;
      const double y = r;
      v.polygon = {{x - 0.5, y - 0.5}, {x + 0.5, y - 0.5}, {x + 0.5, y + 0.5},
                   {x - 0.5, y + 0.5}};
      c.vertices.push_back(std::move(v));
    }
  }
  InitNeighborTables(c);
  for (int d = 0; d < kNumDirections; ++d) {
    c.pregen.directions.push_back(static_cast<Direction>(d));
    for (int r = 0; r < rows; ++r) {
      for (int col = 0; col < columns; ++col) {
        const int nc = col + kSquareDelta[d][0];
        const int nr = r + kSquareDelta[d][1];
        if (nc >= 0 && nc < columns && nr >= 0 && nr < rows) {
          c.pregen.neighbors[d][r * columns + col] = nr * columns + nc;
        }
      }
    }
  }
  for (Direction d : c.pregen.directions) {
    const bool diagonal = static_cast<int>(d) % 2 == 1;
    if (!diagonal || adjacency == SquareAdjacency::kOrthogonalDiagonal) {
      c.pregen.edge_directions.push_back(d);
    }
  }
  EdgesFromDirections(c);

  auto add_side = [&](const std::string& name, auto pred) {
    auto& side = c.pregen.sides[name];
    for (int v = 0; v < c.num_sites(); ++v) {
      if (pred(c.vertices[v])) side.push_back(v);
    }
  };
  add_side("S", [](const Vertex& v) { return v.row == 0; });
  add_side("N", [&](const Vertex& v) { return v.row == rows - 1; });
  add_side("W", [](const Vertex& v) { return v.column == 0; });
  add_side("E", [&](const Vertex& v) { return v.column == columns - 1; });
  std::vector<int> corners = {0, columns - 1, (rows - 1) * columns,
                              rows * columns - 1};
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  c.pregen.corners = std::move(corners);
  return c;
}

Container BuildSquareGraph(int n, SquareAdjacency adjacency) {
  return BuildRectangleGraph(n, n, adjacency);
}

Container BuildHexGraph(HexShape shape) {
  if (shape.size < 1) {
    throw std::invalid_argument("hex board size must be >= 1");
  }
  Container c;
  c.tiling = Tiling::kHex;
  struct Axial {
    int q;
    int r;
  };
  std::vector<Axial> cells;
  int lo = 0;
  int hi = 0;
  if (shape.kind == HexShape::Kind::kRhombus) {
    c.shape = "rhombus " + std::to_string(shape.size);
    lo = 0;
    hi = shape.size - 1;
    for (int r = 0; r < shape.size; ++r) {
      for (int q = 0; q < shape.size; ++q) cells.push_back({q, r});
    }
    c.pregen.rows = shape.size;
    c.pregen.columns = shape.size;
  } else {
    c.shape = "hexagon " + std::to_string(shape.size);
    const int radius = shape.size - 1;
    lo = -radius;
    hi = radius;
    for (int r = -radius; r <= radius; ++r) {
      for (int q = -radius; q <= radius; ++q) {
        if (std::abs(q + r) <= radius) cells.push_back({q, r});
      }
    }
    c.pregen.rows = 2 * radius + 1;
    c.pregen.columns = 2 * radius + 1;
  }
  const int span = hi - lo + 1;
  std::vector<int> index_of(static_cast<std::size_t>(span) * span, -1);
  auto slot = [&](int q, int r) { return (r - lo) * span + (q - lo); };
  for (std::size_t i = 0; i < cells.size(); ++i) {
    index_of[slot(cells[i].q, cells[i].r)] = static_cast<int>(i);
    Vertex v;
    v.row = cells[i].r - lo;
    v.column = cells[i].q - lo;
    v.centroid = {cells[i].q + cells[i].r / 2.0,
                  cells[i].r * std::numbers::sqrt3 / 2.0};
    v.polygon = HexPolygon(v.centroid);
    c.vertices.push_back(std::move(v));
  }
  InitNeighborTables(c);
  for (const HexStep& step : kHexSteps) {
    c.pregen.directions.push_back(step.direction);
    c.pregen.edge_directions.push_back(step.direction);
    auto& table = c.pregen.neighbors[static_cast<int>(step.direction)];
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int q = cells[i].q + step.dq;
      const int r = cells[i].r + step.dr;
      if (q < lo || q > hi || r < lo || r > hi) continue;
      table[i] = index_of[slot(q, r)];
    }
  }
  std::sort(c.pregen.directions.begin(), c.pregen.directions.end());
  std::sort(c.pregen.edge_directions.begin(), c.pregen.edge_directions.end());
  EdgesFromDirections(c);

  auto add_side = [&](const std::string& name, auto pred) {
    auto& side = c.pregen.sides[name];
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (pred(cells[i].q, cells[i].r)) side.push_back(static_cast<int>(i));
    }
  };
  if (shape.kind == HexShape::Kind::kRhombus) {
    add_side("S", [&](int, int r) { return r == lo; });
    add_side("N", [&](int, int r) { return r == hi; });
    add_side("W", [&](int q, int) { return q == lo; });
    add_side("E", [&](int q, int) { return q == hi; });
    c.pregen.corners = {index_of[slot(lo, lo)], index_of[slot(hi, lo)],
                        index_of[slot(lo, hi)], index_of[slot(hi, hi)]};
  } else {
    const int radius = hi;
    add_side("N", [&](int, int r) { return r == radius; });
    add_side("S", [&](int, int r) { return r == -radius; });
    add_side("NE", [&](int q, int r) { return q + r == radius; });
    add_side("SW", [&](int q, int r) { return q + r == -radius; });
    add_side("SE", [&](int q, int) { return q == radius; });
    add_side("NW", [&](int q, int) { return q == -radius; });
    c.pregen.corners = {index_of[slot(0, radius)],  index_of[slot(-radius, radius)],
                        index_of[slot(-radius, 0)], index_of[slot(0, -radius)],
                        index_of[slot(radius, -radius)], index_of[slot(radius, 0)]};
  }
  std::sort(c.pregen.corners.begin(), c.pregen.corners.end());
  c.pregen.corners.erase(
      std::unique(c.pregen.corners.begin(), c.pregen.corners.end()),
      c.pregen.corners.end());
  return c;
}

Container BuildTreeGraph(std::span<const int> parents) {
  const int n = static_cast<int>(parents.size());
  if (n == 0) throw std::invalid_argument("tree graph needs at least one vertex");
  Container c;
  c.tiling = Tiling::kGraph;
  c.shape = "tree " + std::to_string(n);
  c.pregen.parent.assign(parents.begin(), parents.end());
  c.pregen.children.assign(n, {});
  int root = -1;
  for (int v = 0; v < n; ++v) {
    const int p = parents[v];
    if (p == -1) {
      if (root != -1) throw std::invalid_argument("tree graph has two roots");
      root = v;
    } else if (p < 0 || p >= n || p == v) {
      throw std::invalid_argument("invalid parent for tree vertex " +
                                  std::to_string(v));
    } else {
      c.pregen.children[p].push_back(v);
      c.edges.emplace_back(std::min(p, v), std::max(p, v));
    }
  }
  if (root == -1) throw std::invalid_argument("tree graph has no root");

  // Depth-first layout: leaves get consecutive x positions, parents sit
  // above the midpoint of their children. Also rejects cycles.
  c.vertices.assign(n, Vertex{});
  std::vector<int> depth(n, -1);
  double next_leaf_x = 0;
  std::vector<std::pair<int, std::size_t>> stack = {{root, 0}};
  depth[root] = 0;
  int visited = 1;
  while (!stack.empty()) {
    auto& [v, next_child] = stack.back();
    const auto& kids = c.pregen.children[v];
    if (next_child < kids.size()) {
      const int child = kids[next_child++];
      depth[child] = depth[v] + 1;
      ++visited;
      stack.emplace_back(child, 0);
      continue;
    }
    Vertex& vert = c.vertices[v];
    if (kids.empty()) {
      vert.centroid.x = next_leaf_x;
      next_leaf_x += 1;
    } else {
      vert.centroid.x = (c.vertices[kids.front()].centroid.x +
                         c.vertices[kids.back()].centroid.x) /
                        2;
    }
    vert.centroid.y = -depth[v];
    vert.row = depth[v];
    stack.pop_back();
  }
  if (visited != n) throw std::invalid_argument("tree graph contains a cycle");
  for (auto& v : c.vertices) {
    const double x = v.centroid.x;
    const double y = v.centroid.y;
    v.polygon = {{x - 0.3, y - 0.3}, {x + 0.3, y - 0.3}, {x + 0.3, y + 0.3},
                 {x - 0.3, y + 0.3}};
  }
  InitNeighborTables(c);
  FinishEdges(c);
  return c;
}

}  // namespace ludemic
