#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "oapoly/rng.hpp"

namespace oapoly {

// Element of R^d under the coordinatewise order. d >= 1 and every entry is
// finite; the constructor enforces both. Values are immutable afterwards, so
// instances can be shared freely across threads.
class LatticeVector {
 public:
  explicit LatticeVector(std::vector<double> values);

  static LatticeVector zeros(std::size_t dim);

  std::size_t dim() const noexcept { return v_.size(); }
  double operator[](std::size_t i) const noexcept { return v_[i]; }
  std::span<const double> span() const noexcept { return v_; }
  const std::vector<double>& values() const noexcept { return v_; }

  bool operator==(const LatticeVector& o) const noexcept { return v_ == o.v_; }

 private:
  std::vector<double> v_;
};

struct PosNegParts {
  LatticeVector pos;  // f+
  LatticeVector neg;  // f-
};

// Coordinatewise sup f v g and inf f ^ g.
LatticeVector join(const LatticeVector& f, const LatticeVector& g);
LatticeVector meet(const LatticeVector& f, const LatticeVector& g);

LatticeVector abs(const LatticeVector& f);

// f = pos - neg with pos, neg >= 0 and pos disjoint from neg.
PosNegParts pos_neg_decompose(const LatticeVector& f);

// |f| ^ |g| = 0, tested exactly: disjointness is structural (zero entries),
// never a tolerance question.
bool is_disjoint(const LatticeVector& f, const LatticeVector& g);

LatticeVector operator+(const LatticeVector& f, const LatticeVector& g);
LatticeVector operator-(const LatticeVector& f, const LatticeVector& g);
LatticeVector operator-(const LatticeVector& f);
LatticeVector operator*(double s, const LatticeVector& f);

// True when f <= g coordinatewise.
bool leq(const LatticeVector& f, const LatticeVector& g);

// Random vector with entry magnitudes in [0.1, 10]; signs are random unless
// positive_only.
LatticeVector random_vector(std::size_t dim, bool positive_only,
                            RandomStream& rs);

// Disjoint pair whose supports partition a random subset of the coordinates;
// both supports are nonempty (dim >= 2 required). Entry magnitudes in
// [0.1, 10]; deterministic in the seed.
std::pair<LatticeVector, LatticeVector> random_disjoint_pair(
    std::size_t dim, bool positive_only, std::uint64_t seed);
std::pair<LatticeVector, LatticeVector> random_disjoint_pair(
    std::size_t dim, bool positive_only, RandomStream& rs);

}  // namespace oapoly
