#include "linclon/modlattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "linclon/error.hpp"
#include "linclon/kernels.hpp"

namespace linclon {

ActionMatrix::ActionMatrix(const ProductRing& K, const RingElement& a, std::uint32_t p) : a_(a), p_(p) {
  const std::uint64_t e = K.encode(a);
  image_.resize(K.order());
  for (std::uint64_t x = 0; x < K.order(); ++x) image_[x] = K.mul_index(e, x);
}

std::vector<std::vector<std::uint32_t>> ActionMatrix::dense() const {
  std::vector<std::vector<std::uint32_t>> m(image_.size(), std::vector<std::uint32_t>(image_.size(), 0));
  for (std::size_t x = 0; x < image_.size(); ++x) m[x][image_[x]] = 1;
  return m;
}

Vector ActionMatrix::apply(std::span<const std::uint32_t> f) const {
  if (f.size() != image_.size()) throw Error(ErrorKind::ShapeMismatch, "vector length must be |K|");
  Vector out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[image_[x]];
  return out;
}

ActionMatrix action_matrix(const ProductRing& K, const RingElement& a, std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "action is over a prime field");
  return ActionMatrix(K, a, p);
}

Submodule cyclic_submodule(const ProductRing& K, std::uint32_t p, std::span<const std::uint32_t> v) {
  // tau_b (tau_a v) = tau_{ab} v, so the span of the orbit is already invariant
  return Submodule{kernels::orbit_span(K, p, v)};
}

Submodule sub_meet(const Submodule& a, const Submodule& b) { return Submodule{intersect(a.basis, b.basis)}; }

Submodule sub_join(const Submodule& a, const Submodule& b) { return Submodule{join(a.basis, b.basis)}; }

std::optional<EnumerationStrategy> parse_strategy(const std::string& name) {
  if (name == "join-closure") return EnumerationStrategy::JoinClosure;
  if (name == "brute-force") return EnumerationStrategy::BruteForce;
  if (name == "both") return EnumerationStrategy::Both;
  return std::nullopt;
}

std::string to_string(EnumerationStrategy s) {
  switch (s) {
    case EnumerationStrategy::JoinClosure: return "join-closure";
    case EnumerationStrategy::BruteForce: return "brute-force";
    case EnumerationStrategy::Both: return "both";
  }
  return "join-closure";
}

std::optional<std::size_t> SubmoduleLattice::index_of(const SubspaceBasis& basis) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), basis,
                                   [](const Submodule& s, const SubspaceBasis& b) { return s.basis < b; });
  if (it == elements.end() || !(it->basis == basis)) return std::nullopt;
  return static_cast<std::size_t>(it - elements.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> covering_relation(const std::vector<Submodule>& elements) {
  const std::size_t n = elements.size();
  std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));  // below[i][j]: i strictly inside j
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      below[i][j] = i != j && elements[i].rank() < elements[j].rank() && elements[j].basis.contains(elements[i].basis);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool between = false;
      for (std::size_t k = 0; k < n && !between; ++k) between = below[i][k] && below[k][j];
      if (!between) covers.emplace_back(i, j);
    }
  return covers;
}

namespace {

std::vector<SubspaceBasis> join_closure(const ProductRing& K, std::uint32_t p, const EnumerationOptions& options) {
  std::uint64_t seeds = 1;
  for (std::uint64_t i = 0; i < K.order(); ++i) {
    seeds *= p;
    if (seeds > options.seed_budget)
      throw Error(ErrorKind::BudgetExceeded, "p^|K| seed vectors exceed the enumeration budget");
  }
  const auto cyclic = options.parallel ? kernels::cyclic_spans_omp(K, p) : kernels::cyclic_spans_serial(K, p);
  // every submodule is the sum of the cyclic submodules of its elements
  std::set<SubspaceBasis> all;
  std::vector<SubspaceBasis> frontier{SubspaceBasis(p, K.order())};
  all.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<SubspaceBasis> next;
    for (const auto& u : frontier)
      for (const auto& c : cyclic) {
        if (u.contains(c)) continue;
        SubspaceBasis j = join(u, c);
        if (all.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

std::vector<SubspaceBasis> brute_force(const ProductRing& K, std::uint32_t p, const EnumerationOptions& options) {
  BigInt total = 0;
  for (std::uint64_t r = 0; r <= K.order(); ++r) total += gaussian_binomial(K.order(), r, p).value;
  if (total > options.subspace_budget)
    throw Error(ErrorKind::BudgetExceeded, "number of subspaces of F_p^|K| exceeds the brute-force budget");
  return options.parallel ? kernels::invariant_subspaces_omp(K, p) : kernels::invariant_subspaces_serial(K, p);
}

}  // namespace

SubmoduleLattice enumerate_submodules(std::uint32_t p, const ProductRing& K, const EnumerationOptions& options) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (std::gcd(std::uint64_t{p}, K.order()) != 1)
    throw Error(ErrorKind::NotCoprime, "p must be coprime to |K|");

  std::vector<SubspaceBasis> found;
  switch (options.strategy) {
    case EnumerationStrategy::JoinClosure: found = join_closure(K, p, options); break;
    case EnumerationStrategy::BruteForce: found = brute_force(K, p, options); break;
    case EnumerationStrategy::Both: {
      found = join_closure(K, p, options);
      if (brute_force(K, p, options) != found)
        throw Error(ErrorKind::StrategyMismatch, "join-closure and brute-force enumerations disagree");
      break;
    }
  }
  std::sort(found.begin(), found.end());

  SubmoduleLattice lattice{p, K, {}, {}};
  for (auto& b : found) lattice.elements.push_back(Submodule{std::move(b)});
  lattice.covers = covering_relation(lattice.elements);
  return lattice;
}

GaussianBinomial gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) throw Error(ErrorKind::BadRange, "need 0 <= k <= n");
  if (q < 2) throw Error(ErrorKind::BadRange, "need q >= 2");
  BigInt num = 1, den = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    num *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n - k + i)) - 1;
    den *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(i)) - 1;
  }
  if (num % den != 0) throw Error(ErrorKind::BadRange, "inexact Gaussian binomial");
  return GaussianBinomial{n, k, q, num / den};
}

BigInt clonoid_count_bound(const ProductRing& F, const ProductRing& K) {
  require_coprime(K, F);
  const std::uint64_t n = K.order();
  BigInt bound = 1;
  for (const auto& field : F.factors()) {
    BigInt sum = 0;
    for (std::uint64_t r = 1; r <= n; ++r) sum += gaussian_binomial(n, r, field.q()).value;
    bound *= sum;
  }
  return bound;
}

// ---------------------------------------------------------------------------

namespace {

ProductRing codomain_of(const std::vector<SubmoduleLattice>& parts) {
  std::vector<FieldSpec> fields;
  for (const auto& part : parts) fields.push_back(FieldSpec::make(part.p));
  return ProductRing::make(std::move(fields));
}

const std::vector<SubmoduleLattice>& checked(const std::vector<SubmoduleLattice>& parts) {
  if (parts.empty()) throw Error(ErrorKind::EmptyProduct, "need at least one part");
  for (const auto& part : parts)
    if (!(part.K == parts.front().K)) throw Error(ErrorKind::MixedDomains, "parts over different K");
  return parts;
}

}  // namespace

ProductLattice::ProductLattice(std::vector<SubmoduleLattice> parts)
    : parts_(std::move(parts)), K_(checked(parts_).front().K), F_(codomain_of(parts_)) {
  for (const auto& part : parts_) {
    if (size_ > (std::uint64_t{1} << 48) / std::max<std::uint64_t>(part.size(), 1))
      throw Error(ErrorKind::BudgetExceeded, "product lattice too large");
    size_ *= part.size();
  }
}

std::vector<std::size_t> ProductLattice::tuple_at(std::uint64_t index) const {
  if (index >= size_) throw Error(ErrorKind::BadRange, "lattice index out of range");
  std::vector<std::size_t> t(parts_.size());
  for (std::size_t i = parts_.size(); i-- > 0;) {
    t[i] = static_cast<std::size_t>(index % parts_[i].size());
    index /= parts_[i].size();
  }
  return t;
}

std::uint64_t ProductLattice::index_of(std::span<const std::size_t> tuple) const {
  if (tuple.size() != parts_.size()) throw Error(ErrorKind::ShapeMismatch, "tuple length differs from part count");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (tuple[i] >= parts_[i].size()) throw Error(ErrorKind::BadRange, "tuple entry out of range");
    idx = idx * parts_[i].size() + tuple[i];
  }
  return idx;
}

bool ProductLattice::leq(std::span<const std::size_t> a, std::span<const std::size_t> b) const {
  index_of(a);
  index_of(b);
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (!parts_[i].elements[b[i]].basis.contains(parts_[i].elements[a[i]].basis)) return false;
  return true;
}

std::vector<std::size_t> ProductLattice::meet(std::span<const std::size_t> a, std::span<const std::size_t> b) const {
  index_of(a);
  index_of(b);
  std::vector<std::size_t> out(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto& el = parts_[i].elements;
    out[i] = *parts_[i].index_of(sub_meet(el[a[i]], el[b[i]]).basis);
  }
  return out;
}

std::vector<std::size_t> ProductLattice::join(std::span<const std::size_t> a, std::span<const std::size_t> b) const {
  index_of(a);
  index_of(b);
  std::vector<std::size_t> out(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto& el = parts_[i].elements;
    out[i] = *parts_[i].index_of(sub_join(el[a[i]], el[b[i]]).basis);
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> ProductLattice::covers() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t idx = 0; idx < size_; ++idx) {
    const auto t = tuple_at(idx);
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (const auto& [lo, hi] : parts_[i].covers) {
        if (lo != t[i]) continue;
        auto up = t;
        up[i] = hi;
        out.emplace_back(idx, index_of(up));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> ProductLattice::rho(const ClonoidSlice& unary) const {
  if (unary.arity() != 1) throw Error(ErrorKind::BadArity, "rho takes the unary part");
  if (!(unary.domain() == K_) || !(unary.codomain() == F_))
    throw Error(ErrorKind::MixedDomains, "slice does not match the assembled lattice");
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto idx = parts_[i].index_of(unary.part(i));
    if (!idx) throw Error(ErrorKind::NotInvariant, "unary part is not an enumerated submodule");
    t.push_back(*idx);
  }
  return t;
}

ClonoidSlice ProductLattice::psi(std::span<const std::size_t> tuple) const {
  index_of(tuple);
  std::vector<SubspaceBasis> bases;
  for (std::size_t i = 0; i < parts_.size(); ++i) bases.push_back(parts_[i].elements[tuple[i]].basis);
  return ClonoidSlice(K_, F_, 1, std::move(bases));
}

ProductLattice lattice_assemble(std::vector<SubmoduleLattice> parts) { return ProductLattice(std::move(parts)); }

std::vector<Submodule> unary_fingerprint(const ClonoidSlice& slice) {
  if (slice.arity() != 1) throw Error(ErrorKind::BadArity, "fingerprint takes the unary part");
  std::vector<Submodule> out;
  for (const auto& part : slice.parts()) {
    if (!kernels::is_invariant(slice.domain(), part))
      throw Error(ErrorKind::NotInvariant, "unary part is not closed under the K-action");
    out.push_back(Submodule{part});
  }
  return out;
}

std::string to_dot(const SubmoduleLattice& lattice) {
  std::ostringstream os;
  os << "digraph submodules {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i)
    os << "  n" << i << " [label=\"" << lattice.elements[i].rank() << "\"];\n";
  for (const auto& [lo, hi] : lattice.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const ProductLattice& lattice) {
  std::ostringstream os;
  os << "digraph clonoids {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::uint64_t idx = 0; idx < lattice.size(); ++idx) {
    const auto t = lattice.tuple_at(idx);
    os << "  n" << idx << " [label=\"";
    for (std::size_t i = 0; i < t.size(); ++i)
      os << (i ? "," : "") << lattice.parts()[i].elements[t[i]].rank();
    os << "\"];\n";
  }
  for (const auto& [lo, hi] : lattice.covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace linclon
