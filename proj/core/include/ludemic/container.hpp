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

#ifndef LUDEMIC_CONTAINER_HPP_
#define LUDEMIC_CONTAINER_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ludemic {

// Compass directions. Square tilings use all eight; hex tilings use E, W
// and the four diagonals.
enum class Direction : std::uint8_t { kN, kNE, kE, kSE, kS, kSW, kW, kNW };
inline constexpr int kNumDirections = 8;

std::string_view DirectionName(Direction d);
std::optional<Direction> ParseDirection(std::string_view name);
Direction Opposite(Direction d);

enum class Tiling { kSquare, kHex, kGraph };

struct Point {
  double x = 0;
  double y = 0;
};

// A playable site. Geometry is in board units with y pointing up, so
// clients can draw any tiling from centroids and outlines alone.
struct Vertex {
  Point centroid;
  std::vector<Point> polygon;
  int row = -1;
  int column = -1;
};

// Lookup tables precomputed when the container is built.
struct PregenData {
  // neighbors[d][v]: the vertex one step from v in direction d, or -1.
  std::array<std::vector<int>, kNumDirections> neighbors;
  // Directions that exist on this tiling.
  std::vector<Direction> directions;
  // The subset of `directions` whose steps are edges of the graph. Only
  // these may be used for movement.
  std::vector<Direction> edge_directions;
  std::vector<int> corners;
  // Named boundary sides (N, S, E, W, NE, ...), each sorted ascending.
  std::map<std::string, std::vector<int>> sides;
  // Tree graphs only: parent vertex (-1 for the root) and ordered children.
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  int rows = 0;
  int columns = 0;

  int Neighbor(int vertex, Direction d) const {
    return neighbors[static_cast<int>(d)][vertex];
  }
};

// A graph of sites on which components are placed.
struct Container {
  int id = 0;
  std::string shape;
  Tiling tiling = Tiling::kGraph;
  std::vector<Vertex> vertices;
  // Unordered adjacency, stored with first < second, sorted.
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adjacency;
  PregenData pregen;

  int num_sites() const { return static_cast<int>(vertices.size()); }
  bool HasEdge(int u, int v) const;
};

enum class SquareAdjacency { kOrthogonal, kOrthogonalDiagonal };

// Vertices are listed row-major, row 0 at the bottom.
Container BuildSquareGraph(int n, SquareAdjacency adjacency);
Container BuildRectangleGraph(int rows, int columns, SquareAdjacency adjacency);

struct HexShape {
  enum class Kind { kHexagon, kRhombus };
  Kind kind;
  int size;

  static HexShape Hexagon(int side) { return {Kind::kHexagon, side}; }
  static HexShape Rhombus(int n) { return {Kind::kRhombus, n}; }
};

// Pointy-top hexagonal cells in axial coordinates. A hexagon of side r has
// 3r^2 - 3r + 1 cells; a rhombus n x n has n^2 and sides N/S (rows) and
// W/E (columns).
Container BuildHexGraph(HexShape shape);

// A graph mirroring a rooted tree; `parents[v]` is v's parent or -1 for the
// single root. Children keep the order in which they appear.
Container BuildTreeGraph(std::span<const int> parents);

}  // namespace ludemic

#endif  // LUDEMIC_CONTAINER_HPP_
