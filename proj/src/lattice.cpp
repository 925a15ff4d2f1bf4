#include "oapoly/lattice.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oapoly/kernels.hpp"

namespace oapoly {

namespace {

void require_same_dim(const LatticeVector& f, const LatticeVector& g) {
  if (f.dim() != g.dim())
    throw std::invalid_argument("lattice vectors have mismatched dimensions");
}

}  // namespace

LatticeVector::LatticeVector(std::vector<double> values) : v_(std::move(values)) {
  if (v_.empty())
    throw std::invalid_argument("lattice vector must have dimension >= 1");
  for (double x : v_)
    if (!std::isfinite(x))
      throw std::invalid_argument("lattice vector entries must be finite");
}

LatticeVector LatticeVector::zeros(std::size_t dim) {
  return LatticeVector(std::vector<double>(dim, 0.0));
}

LatticeVector join(const LatticeVector& f, const LatticeVector& g) {
  require_same_dim(f, g);
  std::vector<double> out(f.dim());
  kern::ops().vmax(f.span().data(), g.span().data(), out.data(), out.size());
  return LatticeVector(std::move(out));
}

LatticeVector meet(const LatticeVector& f, const LatticeVector& g) {
  require_same_dim(f, g);
  std::vector<double> out(f.dim());
  kern::ops().vmin(f.span().data(), g.span().data(), out.data(), out.size());
  return LatticeVector(std::move(out));
}

LatticeVector abs(const LatticeVector& f) {
  std::vector<double> out(f.dim());
  kern::ops().vabs(f.span().data(), out.data(), out.size());
  return LatticeVector(std::move(out));
}

PosNegParts pos_neg_decompose(const LatticeVector& f) {
  std::vector<double> pos(f.dim()), neg(f.dim());
  kern::ops().vpos_neg(f.span().data(), pos.data(), neg.data(), f.dim());
  return {LatticeVector(std::move(pos)), LatticeVector(std::move(neg))};
}

bool is_disjoint(const LatticeVector& f, const LatticeVector& g) {
  require_same_dim(f, g);
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (f[i] != 0.0 && g[i] != 0.0) return false;
  return true;
}

LatticeVector operator+(const LatticeVector& f, const LatticeVector& g) {
  require_same_dim(f, g);
  std::vector<double> out(f.dim());
  kern::ops().vadd(f.span().data(), g.span().data(), out.data(), out.size());
  return LatticeVector(std::move(out));
}

LatticeVector operator-(const LatticeVector& f, const LatticeVector& g) {
  require_same_dim(f, g);
  std::vector<double> out(f.dim());
  kern::ops().vsub(f.span().data(), g.span().data(), out.data(), out.size());
  return LatticeVector(std::move(out));
}

LatticeVector operator-(const LatticeVector& f) { return -1.0 * f; }

LatticeVector operator*(double s, const LatticeVector& f) {
  std::vector<double> out(f.dim());
  kern::ops().vscale(f.span().data(), s, out.data(), out.size());
  return LatticeVector(std::move(out));
}

bool leq(const LatticeVector& f, const LatticeVector& g) {
  require_same_dim(f, g);
  for (std::size_t i = 0; i < f.dim(); ++i)
    if (f[i] > g[i]) return false;
  return true;
}

LatticeVector random_vector(std::size_t dim, bool positive_only,
                            RandomStream& rs) {
  std::vector<double> v(dim);
  for (auto& x : v) {
    double mag = rs.uniform(0.1, 10.0);
    bool flip = !positive_only && (rs.next_u64() & 1);
    x = flip ? -mag : mag;
  }
  return LatticeVector(std::move(v));
}

std::pair<LatticeVector, LatticeVector> random_disjoint_pair(
    std::size_t dim, bool positive_only, std::uint64_t seed) {
  RandomStream rs(seed, "disjoint-pair");
  return random_disjoint_pair(dim, positive_only, rs);
}

std::pair<LatticeVector, LatticeVector> random_disjoint_pair(
    std::size_t dim, bool positive_only, RandomStream& rs) {
  if (dim < 2)
    throw std::invalid_argument("random_disjoint_pair needs dim >= 2");

  std::vector<std::size_t> idx(dim);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = dim - 1; i > 0; --i)
    std::swap(idx[i], idx[rs.below(i + 1)]);

  std::vector<double> f(dim, 0.0), g(dim, 0.0);
  auto draw = [&] {
    double mag = rs.uniform(0.1, 10.0);
    bool flip = !positive_only && (rs.next_u64() & 1);
    return flip ? -mag : mag;
  };
  // First two shuffled coordinates guarantee nonempty supports; the rest go
  // to f, to g, or to neither.
  f[idx[0]] = draw();
  g[idx[1]] = draw();
  for (std::size_t j = 2; j < dim; ++j) {
    switch (rs.below(3)) {
      case 0: f[idx[j]] = draw(); break;
      case 1: g[idx[j]] = draw(); break;
      default: break;
    }
  }
  return {LatticeVector(std::move(f)), LatticeVector(std::move(g))};
}

}  // namespace oapoly
