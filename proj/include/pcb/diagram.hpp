#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

namespace pcb {

// One feature of a persistence diagram, in birth-persistence coordinates.
struct PersistencePoint {
  double birth = 0.0;
  double persistence = 0.0;  // >= 0

  friend bool operator==(const PersistencePoint&,
                         const PersistencePoint&) = default;
};

// Finite multiset of birth-persistence points tagged with the homology
// dimension they summarize. Immutable by convention: nothing in the library
// mutates a diagram after construction.
struct PersistenceDiagram {
  std::vector<PersistencePoint> points;
  int homology_dim = 0;
};

// Multiset union of several diagrams of the same homology dimension.
struct ConsolidatedDiagram {
  std::vector<PersistencePoint> points;
  std::size_t source_count = 0;
};

using BirthDeath = std::pair<double, double>;

// Maps finite (birth, death) pairs to (birth, death - birth). Infinite-death
// pairs are dropped; death < birth is rejected.
PersistenceDiagram from_birth_death(std::span<const BirthDeath> pairs,
                                    int homology_dim = 0);

// Multiset union. Rejects mixed homology dimensions.
ConsolidatedDiagram consolidate(std::span<const PersistenceDiagram> diagrams);

// Text interchange format: one "birth death" pair per line, `inf` accepted
// as death, `#`-prefixed comment lines skipped. Written with 17 significant
// digits so doubles survive the text round trip.
PersistenceDiagram read_pd_file(const std::filesystem::path& path,
                                int homology_dim = 0);
void write_pd_file(const PersistenceDiagram& diagram,
                   const std::filesystem::path& path);

// Equality up to reordering (and exact on coordinates).
bool multiset_equal(const PersistenceDiagram& a, const PersistenceDiagram& b);

}  // namespace pcb
