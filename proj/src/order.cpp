#include "wallfact/order.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "wallfact/bilinear.hpp"

namespace wallfact {

bool less_equal(const Isometry& g, const Isometry& f) {
  return reflection_length(g) + reflection_length(g.inverse() * f) == reflection_length(f);
}

bool is_admissible(const WallData& wd, const QuadraticSpace& space, const Subspace& u) {
  if (!wd.mov.contains(u)) return false;
  if (u.dim() > 0 && space.is_totally_singular(u)) return false;
  Subspace right = chi_right_complement(wd, u);
  if (right.dim() > 0 && space.is_totally_singular(right)) return false;
  return !is_degenerate(wd.restricted(u));
}

std::vector<Subspace> admissible_subspaces(const Isometry& f, std::uint64_t cap) {
  if (!f.field().is_prime()) throw Error(ErrorCode::RequiresPrimeField, "intervals need a finite field");
  if (!is_minimal(f)) throw Error(ErrorCode::NotMinimal, "admissible subspaces are defined for minimal f");
  const WallData wd = wall_form(f);
  std::vector<Subspace> out;
  SubspaceEnumerator it(wd.mov, cap);
  while (auto u = it.next())
    if (is_admissible(wd, *f.space(), *u)) out.push_back(std::move(*u));
  return out;
}

std::optional<std::size_t> IntervalPoset::index_of(const Isometry& g) const {
  auto it = lookup.find(g.key());
  if (it == lookup.end()) return std::nullopt;
  return it->second;
}

std::string IntervalPoset::to_dot() const {
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    os << "  n" << i << " [label=\"" << i << " (rank " << rank[i] << ")";
    if (!block.empty() && block[i] >= 0) os << "\\nblock " << block[i];
    os << "\"];\n";
  }
  for (const auto& [a, b] : covers) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

// Calls fn on every vector of a subspace over F_p.
template <class Fn>
void for_each_vector(const Subspace& s, std::uint64_t cap, Fn fn) {
  const Field f = s.field();
  const std::int64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    total *= static_cast<std::uint64_t>(p);
    if (total > cap) throw Error(ErrorCode::TooLarge, "too many vectors to enumerate");
  }
  std::vector<std::int64_t> digits(s.dim(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    Vector c;
    for (auto d : digits) c.push_back(f.from_int(d));
    fn(s.from_coordinates(c));
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
}

// Complement of s spanned by the standard vectors at non-pivot columns.
Subspace standard_complement(const Subspace& s) {
  std::vector<Vector> vs;
  const auto& piv = s.pivots();
  for (std::size_t j = 0; j < s.ambient_dim(); ++j)
    if (std::find(piv.begin(), piv.end(), j) == piv.end()) vs.push_back(unit_vector(s.field(), s.ambient_dim(), j));
  return Subspace::span(s.field(), s.ambient_dim(), vs);
}

std::vector<Isometry> minimal_interval_elements(const Isometry& f, std::uint64_t cap) {
  const WallData wd = wall_form(f);
  std::vector<Isometry> out;
  for (const auto& u : admissible_subspaces(f, cap))
    out.push_back(isometry_from_wall(f.space(), u, wd.restricted(u)));
  return out;
}

void finish(IntervalPoset& p, std::vector<Isometry> elems) {
  std::vector<std::pair<std::size_t, std::string>> order;
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    ranks.push_back(reflection_length(elems[i]));
    order.emplace_back(i, elems[i].key());
  }
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    if (ranks[a.first] != ranks[b.first]) return ranks[a.first] < ranks[b.first];
    return a.second < b.second;
  });
  for (const auto& [i, key] : order) {
    p.lookup.emplace(key, p.elements.size());
    p.rank.push_back(ranks[i]);
    p.moved.push_back(moved_space(elems[i]));
    p.elements.push_back(elems[i]);
  }
  const std::size_t n = p.elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Isometry gi = p.elements[i].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (p.rank[j] != p.rank[i] + 1) continue;
      if (reflection_length(gi * p.elements[j]) == 1) p.covers.emplace_back(i, j);
    }
  }
}

}  // namespace

IntervalPoset interval(const Isometry& f, std::uint64_t cap) {
  if (!f.field().is_prime()) throw Error(ErrorCode::RequiresPrimeField, "intervals need a finite field");
  IntervalPoset p(f);
  if (is_minimal(f)) {
    finish(p, minimal_interval_elements(f, cap));
    return p;
  }

  p.minimal_top = false;
  const auto& space = f.space();
  const Subspace mov = moved_space(f);
  std::vector<Isometry> elems{Isometry::identity(space), f};
  std::map<std::string, int> block_of;

  SubspaceEnumerator lines(standard_complement(mov), cap);
  while (auto line = lines.next()) {
    if (line->dim() != 1) continue;
    Subspace w = subspace_sum(mov, *line);
    if (space->is_totally_singular(w)) continue;
    const int b = static_cast<int>(p.block_spaces.size());
    p.block_spaces.push_back(w);
    const Vector x = line->basis().row(0);
    for_each_vector(mov, cap, [&](const Vector& u) {
      Vector v = x + u;
      if (space->q(v).is_zero()) return;
      for (auto& g : minimal_interval_elements(reflection(space, v) * f, cap)) {
        if (g.is_identity()) continue;
        if (block_of.emplace(g.key(), b).second) elems.push_back(std::move(g));
      }
    });
  }
  finish(p, std::move(elems));
  p.block.assign(p.size(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto it = block_of.find(p.elements[i].key());
    if (it != block_of.end()) p.block[i] = it->second;
  }
  return p;
}

GradedReport interval_is_graded_check(const IntervalPoset& p) {
  GradedReport r;
  const std::size_t n = p.size();
  const Isometry& f = p.top;

  if (p.minimal_top)
    for (std::size_t i = 0; i < n; ++i)
      if (p.rank[i] != p.moved[i].dim()) {
        r.rank_is_mov_dim = false;
        r.failures.push_back("rank differs from dim Mov at element " + std::to_string(i));
      }

  std::vector<bool> has_lower(n, false);
  for (const auto& [a, b] : p.covers) has_lower[b] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (p.rank[i] > 0 && !has_lower[i]) {
      r.covers_graded = false;
      r.failures.push_back("element " + std::to_string(i) + " has no lower cover");
    }

  std::vector<std::size_t> dual(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto j = p.index_of(p.elements[i].inverse() * f);
    if (!j) {
      r.self_dual = false;
      r.failures.push_back("g^-1 f outside the interval for element " + std::to_string(i));
      return r;
    }
    dual[i] = *j;
  }
  std::set<std::pair<std::size_t, std::size_t>> cover_set(p.covers.begin(), p.covers.end());
  for (const auto& [a, b] : p.covers)
    if (!cover_set.count({dual[b], dual[a]})) {
      r.self_dual = false;
      r.failures.push_back("duality does not reverse the cover " + std::to_string(a) + " < " + std::to_string(b));
    }

  if (!p.minimal_top) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p.block[i] < 0) continue;
      if (p.block[dual[i]] != p.block[i]) {
        r.blocks_self_dual = false;
        r.failures.push_back("duality leaves the block of element " + std::to_string(i));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (p.block[j] < 0 || p.block[j] == p.block[i] || p.rank[j] <= p.rank[i]) continue;
        if (less_equal(p.elements[i], p.elements[j])) {
          r.blocks_disjoint = false;
          r.failures.push_back("relation across blocks: " + std::to_string(i) + " <= " + std::to_string(j));
        }
      }
    }
  }
  return r;
}

}  // namespace wallfact
