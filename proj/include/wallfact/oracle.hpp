#pragma once

// Brute-force ground truth over small prime fields: the whole orthogonal
// group by reflection closure, word lengths in the reflection Cayley graph,
// and exhaustive checks of the structural theorems against the library.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wallfact/order.hpp"

namespace wallfact {

constexpr std::uint64_t kDefaultGroupCap = 100000;

struct GroupCensus {
  SpacePtr space;
  std::vector<Isometry> elements;          // BFS order, elements[0] = id
  std::vector<std::size_t> bfs_length;
  std::vector<std::size_t> reflections;    // indices of the generators
  std::vector<Vector> reflection_vectors;  // one normalized vector per generator
  // Spinor norm read off the BFS word: the product of Q(v) over its letters.
  std::vector<SquareClass> word_spinor;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> index_of(const Isometry& g) const;
};

/// Closure of {id} under right multiplication by every reflection r_v,
/// v a non-singular projective point. Throws RequiresPrimeField, TooLarge.
GroupCensus enumerate_group(const SpacePtr& space, std::uint64_t cap = kDefaultGroupCap);

/// Every n x n matrix F over F_p with F^T B F = B, by column backtracking.
/// Independent of the reflection closure. Matrix keys, sorted.
std::vector<std::string> exhaustive_isometry_keys(const SpacePtr& space, std::uint64_t cap = kDefaultGroupCap);

struct OracleReport {
  explicit OracleReport(std::string name = {}) : check(std::move(name)) {}

  std::string check;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> witnesses;  // first few counterexamples

  bool ok() const { return violations == 0; }
  void fail(std::string witness);
};

/// BFS length = dim Mov(f), or dim Mov(f) + 2 for totally singular Mov(f),
/// and reflection_length agrees.
OracleReport verify_length_formula(const GroupCensus& c);

/// spinor_norm matches the BFS-word spinor norm and theta(fg) =
/// theta(f) theta(g) for all pairs (or the first `pair_cap` pairs).
OracleReport verify_spinor_homomorphism(const GroupCensus& c, std::uint64_t pair_cap = UINT64_MAX);

/// f -> (Mov, chi) -> f round trip and injectivity; with `surjectivity`,
/// every pair (W, chi) with chi non-degenerate and chi + chi^T = beta|W
/// comes from a census element.
OracleReport verify_wall_bijection(const GroupCensus& c, bool surjectivity);

/// For minimal f: {g : l(g) + l(g^-1 f) = l(f)} with BFS lengths equals the
/// isometries of the admissible subspaces, and g <= g' implies
/// Mov(g) in Mov(g').
OracleReport verify_interval(const GroupCensus& c, const Isometry& f);

/// verify_interval over every minimal element of the census.
OracleReport verify_intervals(const GroupCensus& c);

/// Census as text keyed by (p, form hash); load returns nullopt on a miss.
std::string census_cache_name(const QuadraticSpace& space);
void save_census(const GroupCensus& c, const std::filesystem::path& dir);
std::optional<GroupCensus> load_census(const SpacePtr& space, const std::filesystem::path& dir);

}  // namespace wallfact
