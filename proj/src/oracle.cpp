#include "wallfact/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "wallfact/bilinear.hpp"

namespace wallfact {

namespace {

constexpr std::size_t kMaxWitnesses = 5;

void require_prime(const QuadraticSpace& space) {
  if (!space.field().is_prime()) throw Error(ErrorCode::RequiresPrimeField, "the oracle needs a finite field");
}

// All vectors of F_p^n in odometer order, optionally capped.
std::vector<Vector> all_vectors(const Field& f, std::size_t n, std::uint64_t cap) {
  const std::int64_t p = f.characteristic();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(p);
    if (total > cap) throw Error(ErrorCode::TooLarge, "too many vectors to enumerate");
  }
  std::vector<Vector> out;
  out.reserve(total);
  std::vector<std::int64_t> digits(n, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    Vector v;
    for (auto d : digits) v.push_back(f.from_int(d));
    out.push_back(std::move(v));
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return out;
}

bool first_nonzero_is_one(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return x.is_one();
  return false;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

void OracleReport::fail(std::string witness) {
  ++violations;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

std::optional<std::size_t> GroupCensus::index_of(const Isometry& g) const {
  auto it = index.find(g.key());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

GroupCensus enumerate_group(const SpacePtr& space, std::uint64_t cap) {
  require_prime(*space);
  const Field f = space->field();
  GroupCensus c;
  c.space = space;
  std::vector<Isometry> gens;
  std::vector<SquareClass> gen_class;
  for (auto& v : all_vectors(f, space->dim(), cap)) {
    if (!first_nonzero_is_one(v) || space->q(v).is_zero()) continue;
    gens.push_back(reflection(space, v));
    gen_class.push_back(square_class(space->q(v)));
    c.reflection_vectors.push_back(std::move(v));
  }

  auto add = [&](Isometry g, std::size_t len, SquareClass theta) {
    if (c.elements.size() >= cap) throw Error(ErrorCode::TooLarge, "group exceeds the enumeration cap");
    c.index.emplace(g.key(), c.elements.size());
    c.elements.push_back(std::move(g));
    c.bfs_length.push_back(len);
    c.word_spinor.push_back(std::move(theta));
  };
  add(Isometry::identity(space), 0, square_class(f.one()));
  for (std::size_t head = 0; head < c.elements.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Isometry g = c.elements[head] * gens[k];
      if (c.index.count(g.key())) continue;
      add(std::move(g), c.bfs_length[head] + 1, c.word_spinor[head] * gen_class[k]);
    }
  }
  for (const auto& g : gens) c.reflections.push_back(c.index.at(g.key()));
  return c;
}

std::vector<std::string> exhaustive_isometry_keys(const SpacePtr& space, std::uint64_t cap) {
  require_prime(*space);
  const Field f = space->field();
  const std::size_t n = space->dim();
  const Matrix& b = space->polar();
  const std::vector<Vector> vs = all_vectors(f, n, cap);
  // Columns c_0..c_{n-1} of F need beta(c_i, c_j) = B_ij.
  std::vector<std::string> keys;
  std::vector<const Vector*> cols(n, nullptr);
  auto beta = [&](const Vector& x, const Vector& y) { return dot(x, b * y); };
  std::size_t depth = 0;
  std::vector<std::size_t> next(n, 0);
  while (true) {
    bool placed = false;
    while (next[depth] < vs.size()) {
      const Vector& cand = vs[next[depth]++];
      bool ok = beta(cand, cand) == b(depth, depth);
      for (std::size_t j = 0; ok && j < depth; ++j) ok = beta(*cols[j], cand) == b(j, depth);
      if (ok) {
        cols[depth] = &cand;
        placed = true;
        break;
      }
    }
    if (!placed) {
      if (depth == 0) break;
      next[depth] = 0;
      --depth;
      continue;
    }
    if (depth + 1 == n) {
      Matrix m(f, n, n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = (*cols[j])[i];
      keys.push_back(m.key());
      if (keys.size() > cap) throw Error(ErrorCode::TooLarge, "group exceeds the enumeration cap");
    } else {
      ++depth;
    }
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

OracleReport verify_length_formula(const GroupCensus& c) {
  OracleReport r("length_formula");
  for (std::size_t i = 0; i < c.size(); ++i) {
    ++r.checked;
    const Subspace mov = moved_space(c.elements[i]);
    const std::size_t expected = mov.dim() + (mov.dim() > 0 && c.space->is_totally_singular(mov) ? 2 : 0);
    const std::size_t lib = reflection_length(c.elements[i]);
    if (c.bfs_length[i] != expected || lib != expected)
      r.fail("element " + c.elements[i].matrix().to_string() + ": bfs " + std::to_string(c.bfs_length[i]) +
             ", formula " + std::to_string(expected) + ", reflection_length " + std::to_string(lib));
  }
  for (std::size_t k : c.reflections)
    if (c.bfs_length[k] != 1) r.fail("reflection at index " + std::to_string(k) + " has BFS length != 1");
  return r;
}

OracleReport verify_spinor_homomorphism(const GroupCensus& c, std::uint64_t pair_cap) {
  OracleReport r("spinor_homomorphism");
  std::vector<SquareClass> theta;
  theta.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    theta.push_back(spinor_norm(c.elements[i]));
    ++r.checked;
    if (theta.back() != c.word_spinor[i])
      r.fail("spinor_norm differs from the BFS word at " + c.elements[i].matrix().to_string());
  }
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < c.size() && pairs < pair_cap; ++i)
    for (std::size_t j = 0; j < c.size() && pairs < pair_cap; ++j, ++pairs) {
      ++r.checked;
      auto k = c.index_of(c.elements[i] * c.elements[j]);
      if (!k) {
        r.fail("census not closed under multiplication");
        continue;
      }
      if (theta[*k] != theta[i] * theta[j])
        r.fail("theta(fg) != theta(f) theta(g) for indices " + std::to_string(i) + ", " + std::to_string(j));
    }
  return r;
}

OracleReport verify_wall_bijection(const GroupCensus& c, bool surjectivity) {
  OracleReport r("wall_bijection");
  std::set<std::string> seen;
  for (const auto& g : c.elements) {
    ++r.checked;
    const WallData wd = wall_form(g);
    if (isometry_from_wall(c.space, wd.mov, wd.chi) != g) r.fail("round trip fails at " + g.matrix().to_string());
    if (!seen.insert(wd.mov.key() + "|" + wd.chi.key()).second) r.fail("two elements share a Wall pair");
  }
  if (!surjectivity) return r;

  const Field f = c.space->field();
  const std::size_t n = c.space->dim();
  std::uint64_t pairs = 0;
  for (const auto& w : enumerate_subspaces(Subspace::full(f, n))) {
    const std::size_t m = w.dim();
    const Matrix beta_w = c.space->beta_gram(w.basis());
    for (const auto& flat : all_vectors(f, m * m, kDefaultGroupCap)) {
      Matrix chi(f, m, m);
      for (std::size_t i = 0; i < m * m; ++i) chi(i / m, i % m) = flat[i];
      if (chi + chi.transpose() != beta_w || (m > 0 && det(chi).is_zero())) continue;
      ++pairs;
      ++r.checked;
      const Isometry g = isometry_from_wall(c.space, w, chi);
      if (!c.index_of(g)) {
        r.fail("pair (" + w.basis().to_string() + ", " + chi.to_string() + ") has no census preimage");
        continue;
      }
      const WallData back = wall_form(g);
      if (!(back.mov == w) || back.chi != chi) r.fail("pair is not recovered from its isometry");
    }
  }
  if (pairs != c.size())
    r.fail("admissible pairs " + std::to_string(pairs) + " != group order " + std::to_string(c.size()));
  return r;
}

OracleReport verify_interval(const GroupCensus& c, const Isometry& f) {
  OracleReport r("intervals");
  const auto fi = c.index_of(f);
  if (!fi) throw Error(ErrorCode::NotIsometry, "f is not in the census");
  const std::size_t lf = c.bfs_length[*fi];
  std::set<std::string> by_length;
  std::vector<std::size_t> below;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto h = c.index_of(c.elements[i].inverse() * f);
    if (c.bfs_length[i] + c.bfs_length[*h] == lf) {
      by_length.insert(c.elements[i].key());
      below.push_back(i);
    }
  }
  const WallData wd = wall_form(f);
  std::set<std::string> by_subspace;
  for (const auto& u : admissible_subspaces(f)) {
    by_subspace.insert(isometry_from_wall(c.space, u, wd.restricted(u)).key());
  }
  ++r.checked;
  if (by_length != by_subspace)
    r.fail("interval of " + f.matrix().to_string() + ": " + std::to_string(by_length.size()) + " by length, " +
           std::to_string(by_subspace.size()) + " by subspaces");

  for (std::size_t a : below)
    for (std::size_t b : below) {
      if (a == b) continue;
      const auto h = c.index_of(c.elements[a].inverse() * c.elements[b]);
      if (c.bfs_length[a] + c.bfs_length[*h] != c.bfs_length[b]) continue;
      ++r.checked;
      if (!moved_space(c.elements[b]).contains(moved_space(c.elements[a])))
        r.fail("g <= g' without Mov(g) in Mov(g') below " + f.matrix().to_string());
    }
  return r;
}

OracleReport verify_intervals(const GroupCensus& c) {
  OracleReport r("intervals");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!is_minimal(c.elements[i])) continue;
    OracleReport one = verify_interval(c, c.elements[i]);
    r.checked += one.checked;
    r.violations += one.violations;
    for (auto& w : one.witnesses)
      if (r.witnesses.size() < kMaxWitnesses) r.witnesses.push_back(std::move(w));
  }
  return r;
}

std::string census_cache_name(const QuadraticSpace& space) {
  std::ostringstream os;
  os << "census_p" << space.field().characteristic() << "_" << std::hex << fnv1a(space.key()) << ".txt";
  return os.str();
}

void save_census(const GroupCensus& c, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / census_cache_name(*c.space));
  out << c.space->key() << "\n" << c.size() << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << c.bfs_length[i] << " " << c.word_spinor[i].to_string();
    const Matrix& m = c.elements[i].matrix();
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) out << " " << m(a, b).residue();
    out << "\n";
  }
}

std::optional<GroupCensus> load_census(const SpacePtr& space, const std::filesystem::path& dir) {
  require_prime(*space);
  std::ifstream in(dir / census_cache_name(*space));
  if (!in) return std::nullopt;
  std::string key;
  std::getline(in, key);
  if (key != space->key()) return std::nullopt;
  std::size_t count = 0;
  in >> count;
  const Field f = space->field();
  const std::size_t n = space->dim();
  GroupCensus c;
  c.space = space;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t len = 0;
    std::int64_t theta = 0;
    in >> len >> theta;
    Matrix m(f, n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::int64_t x = 0;
        in >> x;
        m(a, b) = f.from_int(x);
      }
    if (!in) return std::nullopt;
    Isometry g(space, m);
    c.index.emplace(g.key(), i);
    c.elements.push_back(std::move(g));
    c.bfs_length.push_back(len);
    c.word_spinor.push_back(square_class(f.from_int(theta)));
  }
  for (auto& v : all_vectors(f, n, kDefaultGroupCap)) {
    if (!first_nonzero_is_one(v) || space->q(v).is_zero()) continue;
    auto k = c.index_of(reflection(space, v));
    if (!k) return std::nullopt;
    c.reflections.push_back(*k);
    c.reflection_vectors.push_back(std::move(v));
  }
  return c;
}

}  // namespace wallfact
