#include "ringlab/orbit.hpp"

#include <deque>

#include "ringlab/error.hpp"

namespace ringlab {

IndexMatrix index_identity(std::size_t n) {
  IndexMatrix m{n, n, std::vector<Index>(n * n, FiniteRing::zero())};
  for (std::size_t i = 0; i < n; ++i) m.cells[i * n + i] = FiniteRing::one();
  return m;
}

IndexMatrix index_mul(const FiniteRing& f, const IndexMatrix& x, const IndexMatrix& y) {
  IndexMatrix out{x.rows, y.cols, std::vector<Index>(x.rows * y.cols)};
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < y.cols; ++j) {
      Index acc = FiniteRing::zero();
      for (std::size_t l = 0; l < x.cols; ++l) acc = f.add(acc, f.mul(x.at(i, l), y.at(l, j)));
      out.cells[i * y.cols + j] = acc;
    }
  }
  return out;
}

bool is_chain_diagonal(const FiniteRing& f, const IndexMatrix& d) {
  for (std::size_t i = 0; i < d.rows; ++i) {
    for (std::size_t j = 0; j < d.cols; ++j) {
      if (i != j && d.at(i, j) != FiniteRing::zero()) return false;
    }
  }
  const std::size_t r = std::min(d.rows, d.cols);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    const Index di = d.at(i, i);
    const Index next = d.at(i + 1, i + 1);
    if (next == FiniteRing::zero()) continue;
    const ElementSet bound = f.left_ideal(di).intersect(f.right_ideal(di));
    if (!f.two_sided_ideal(next).subset_of(bound)) return false;
  }
  return true;
}

OrbitSpace::OrbitSpace(FiniteRingHandle ring, OrbitShape shape, std::uint64_t budget)
    : ring_(std::move(ring)), shape_(shape) {
  const std::uint64_t n = ring_->order();
  for (std::size_t c = 0; c < shape_.rows * shape_.cols; ++c) {
    if (states_ > budget / n) {
      throw RingError(ErrorKind::BudgetExceeded,
                      "matrix space exceeds budget of " + std::to_string(budget));
    }
    states_ *= n;
  }
  if (states_ > budget) {
    throw RingError(ErrorKind::BudgetExceeded,
                    "matrix space exceeds budget of " + std::to_string(budget));
  }
  two_sided_.reserve(n);
  for (Index a = 0; a < n; ++a) two_sided_.push_back(ring_->two_sided_ideal(a));
  if (shape_.left_ops) add_generators(true, shape_.rows);
  if (shape_.right_ops) add_generators(false, shape_.cols);
}

void OrbitSpace::add_generators(bool left, std::size_t n) {
  const FiniteRing& f = *ring_;
  const std::size_t first = generators_.size();
  // Transvections I + r E_ij; the inverse of r is -r at the same position.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Index r = 1; r < f.order(); ++r) {
        IndexMatrix g = index_identity(n);
        g.cells[i * n + j] = r;
        generators_.push_back({left, std::move(g), 0});
      }
    }
  }
  for (std::size_t g = first; g < generators_.size(); ++g) {
    const std::size_t block = g - (g - first) % (f.order() - 1);
    const Index r = static_cast<Index>((g - first) % (f.order() - 1) + 1);
    generators_[g].inverse = block + (f.neg(r) - 1);
  }
  // Diagonal unit matrices other than the identity, odometer over units.
  const auto& units = f.units();
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) combos *= units.size();
  const std::size_t diag_first = generators_.size();
  for (std::uint64_t c = 1; c < combos; ++c) {
    IndexMatrix g = index_identity(n);
    std::uint64_t code = c;
    for (std::size_t i = 0; i < n; ++i) {
      g.cells[i * n + i] = units[code % units.size()];
      code /= units.size();
    }
    generators_.push_back({left, std::move(g), 0});
  }
  for (std::size_t g = diag_first; g < generators_.size(); ++g) {
    // Inverse: invert every diagonal unit, then locate its odometer code.
    std::uint64_t code = 0;
    std::uint64_t weight = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const Index inv = f.inverse(generators_[g].matrix.cells[i * n + i]);
      std::size_t pos = 0;
      while (units[pos] != inv) ++pos;
      code += pos * weight;
      weight *= units.size();
    }
    generators_[g].inverse = diag_first + static_cast<std::size_t>(code) - 1;
  }
}

std::uint64_t OrbitSpace::encode(const IndexMatrix& m) const {
  std::uint64_t state = 0;
  std::uint64_t weight = 1;
  for (Index c : m.cells) {
    state += c * weight;
    weight *= ring_->order();
  }
  return state;
}

IndexMatrix OrbitSpace::decode(std::uint64_t state) const {
  IndexMatrix m{shape_.rows, shape_.cols, std::vector<Index>(shape_.rows * shape_.cols)};
  for (auto& c : m.cells) {
    c = static_cast<Index>(state % ring_->order());
    state /= ring_->order();
  }
  return m;
}

bool OrbitSpace::is_target(std::uint64_t state) const {
  const IndexMatrix d = decode(state);
  for (std::size_t i = 0; i < d.rows; ++i) {
    for (std::size_t j = 0; j < d.cols; ++j) {
      if (i != j && d.at(i, j) != FiniteRing::zero()) return false;
    }
  }
  for (std::size_t i = 0; i + 1 < std::min(d.rows, d.cols); ++i) {
    const Index di = d.at(i, i);
    const ElementSet& next = two_sided_[d.at(i + 1, i + 1)];
    if (!next.subset_of(ring_->left_ideal(di)) || !next.subset_of(ring_->right_ideal(di))) {
      return false;
    }
  }
  return true;
}

std::uint64_t OrbitSpace::apply(std::size_t generator, std::uint64_t state) const {
  const Generator& g = generators_[generator];
  const IndexMatrix m = decode(state);
  return encode(g.left ? index_mul(*ring_, g.matrix, m) : index_mul(*ring_, m, g.matrix));
}

namespace {

void compose_step(const FiniteRing& f, const OrbitSpace::Generator& g,
                  const OrbitSpace::Generator& g_inverse, IndexCertificate& cert) {
  if (g.left) {
    cert.p = index_mul(f, g.matrix, cert.p);
    cert.p_inverse = index_mul(f, cert.p_inverse, g_inverse.matrix);
    cert.d = index_mul(f, g.matrix, cert.d);
  } else {
    cert.q = index_mul(f, cert.q, g.matrix);
    cert.q_inverse = index_mul(f, g_inverse.matrix, cert.q_inverse);
    cert.d = index_mul(f, cert.d, g.matrix);
  }
}

IndexCertificate start_certificate(const OrbitShape& shape, const IndexMatrix& a) {
  return {index_identity(shape.rows), index_identity(shape.cols), index_identity(shape.rows),
          index_identity(shape.cols), a};
}

}  // namespace

std::optional<IndexCertificate> OrbitSpace::search(const IndexMatrix& a,
                                                   std::uint64_t* orbit_size) const {
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  constexpr std::uint32_t kRoot = kUnseen - 1;
  std::vector<std::uint32_t> via(states_, kUnseen);
  std::vector<std::uint32_t> parent(states_, 0);
  const std::uint64_t start = encode(a);
  via[start] = kRoot;
  std::deque<std::uint64_t> queue{start};
  std::uint64_t visited = 1;
  std::optional<std::uint64_t> hit;
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop_front();
    if (is_target(s)) {
      hit = s;
      break;
    }
    for (std::size_t g = 0; g < generators_.size(); ++g) {
      const std::uint64_t t = apply(g, s);
      if (via[t] != kUnseen) continue;
      via[t] = static_cast<std::uint32_t>(g);
      parent[t] = static_cast<std::uint32_t>(s);
      ++visited;
      queue.push_back(t);
    }
  }
  if (orbit_size) *orbit_size = visited;
  if (!hit) return std::nullopt;

  std::vector<std::size_t> path;
  for (std::uint64_t s = *hit; via[s] != kRoot; s = parent[s]) path.push_back(via[s]);
  IndexCertificate cert = start_certificate(shape_, a);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    compose_step(*ring_, generators_[*it], generators_[generators_[*it].inverse], cert);
  }
  return cert;
}

OrbitAtlas::OrbitAtlas(const OrbitSpace& space)
    : space_(space), step_(space.state_count(), kUnreached) {
  std::deque<std::uint64_t> queue;
  for (std::uint64_t s = 0; s < space_.state_count(); ++s) {
    if (space_.is_target(s)) {
      step_[s] = kTarget;
      queue.push_back(s);
    }
  }
  const auto& gens = space_.generators();
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::uint64_t t = space_.apply(g, s);
      if (step_[t] != kUnreached) continue;
      // t = g(s), so applying g's inverse to t moves it back to s.
      step_[t] = static_cast<std::uint32_t>(gens[g].inverse);
      queue.push_back(t);
    }
  }
}

IndexCertificate OrbitAtlas::certificate(std::uint64_t state) const {
  const auto& gens = space_.generators();
  IndexCertificate cert = start_certificate(space_.shape(), space_.decode(state));
  std::uint64_t s = state;
  while (step_[s] != kTarget) {
    const std::size_t g = step_[s];
    compose_step(space_.ring(), gens[g], gens[gens[g].inverse], cert);
    s = space_.apply(g, s);
  }
  return cert;
}

bool verify_index_certificate(const FiniteRing& f, const IndexMatrix& a,
                              const IndexCertificate& cert) {
  if (index_mul(f, index_mul(f, cert.p, a), cert.q) != cert.d) return false;
  const IndexMatrix ip = index_identity(cert.p.rows);
  const IndexMatrix iq = index_identity(cert.q.rows);
  if (index_mul(f, cert.p, cert.p_inverse) != ip || index_mul(f, cert.p_inverse, cert.p) != ip) {
    return false;
  }
  if (index_mul(f, cert.q, cert.q_inverse) != iq || index_mul(f, cert.q_inverse, cert.q) != iq) {
    return false;
  }
  return is_chain_diagonal(f, cert.d);
}

}  // namespace ringlab
