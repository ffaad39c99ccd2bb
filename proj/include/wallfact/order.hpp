#pragma once

// The reflection-length order g <= f  <=>  l(g) + l(g^-1 f) = l(f), and the
// intervals [id, f] it defines. Intervals are only materialized over F_p;
// over Q use less_equal and is_admissible directly.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wallfact/factor.hpp"

namespace wallfact {

bool less_equal(const Isometry& g, const Isometry& f);

/// The three conditions on a subspace U of Mov(f) for minimal f:
/// U is zero or not totally singular, U^> is zero or not totally singular,
/// and chi_f|U is non-degenerate.
bool is_admissible(const WallData& wd, const QuadraticSpace& space, const Subspace& u);

/// Every admissible subspace of Mov(f), in enumeration order.
/// Throws RequiresPrimeField, NotMinimal, or TooLarge.
std::vector<Subspace> admissible_subspaces(const Isometry& f, std::uint64_t cap = kDefaultEnumerationCap);

struct IntervalPoset {
  explicit IntervalPoset(Isometry f) : top(std::move(f)) {}

  Isometry top;
  bool minimal_top = true;
  std::vector<Isometry> elements;      // sorted by (rank, matrix key); elements[0] = id
  std::vector<std::size_t> rank;
  std::vector<Subspace> moved;         // Mov of each element
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  // Non-minimal top only: block index of each element of the open
  // interval (-1 for id and f) and the superspace W of each block.
  std::vector<int> block;
  std::vector<Subspace> block_spaces;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> index_of(const Isometry& g) const;

  std::map<std::string, std::size_t> lookup;  // matrix key -> index

  std::string to_dot() const;
};

/// [id, f]. For minimal f the elements are the isometries attached to the
/// admissible subspaces; otherwise the open interval is assembled from the
/// blocks P_{f,W} = {g in (id, f) : Mov(g) in W}, W = Mov(f) + <x>.
IntervalPoset interval(const Isometry& f, std::uint64_t cap = kDefaultEnumerationCap);

struct GradedReport {
  bool rank_is_mov_dim = true;      // minimal top only
  bool covers_graded = true;        // every non-bottom element has a lower cover
  bool self_dual = true;            // g -> g^-1 f reverses the order
  bool blocks_disjoint = true;      // no relations across blocks
  bool blocks_self_dual = true;     // each block is mapped to itself
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

GradedReport interval_is_graded_check(const IntervalPoset& p);

}  // namespace wallfact
