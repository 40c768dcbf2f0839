#pragma once

#include <utility>
#include <vector>

#include "pcb/diagram.hpp"

namespace pcb {

// Marks a match with the diagonal in a Matching.
inline constexpr int kDiagonal = -1;

// An optimal matching between two diagrams. Every off-diagonal point of each
// diagram appears exactly once; cost is the sum of the per-pair infinity-norm
// ground distances (matching a point to the diagonal costs its persistence).
struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (index in A or kDiagonal, index in B or kDiagonal)
  double cost = 0.0;
};

// Exact 1-Wasserstein distance in birth-persistence coordinates with the
// infinity-norm ground metric, computed by an optimal assignment on the
// (m+n) x (m+n) augmented cost matrix.
double w1_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);
Matching w1_matching(const PersistenceDiagram& a, const PersistenceDiagram& b);

// Exhaustive-enumeration oracle; rejects inputs with more than 8 points
// combined.
double w1_bruteforce(const PersistenceDiagram& a, const PersistenceDiagram& b);

namespace detail {
// Minimum-cost assignment on a square matrix (Hungarian with potentials,
// O(n^3)). Returns row index assigned to each column.
std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost);
}  // namespace detail

}  // namespace pcb
