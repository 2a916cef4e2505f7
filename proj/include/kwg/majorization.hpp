#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace kwg {

/// Strictly positive shape vector (alpha, beta, gamma or delta).
class ShapeVector {
 public:
  /// Throws DimensionError when empty, ParameterDomainError on a nonpositive entry.
  explicit ShapeVector(std::vector<double> entries);

  std::span<const double> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<double> entries_;
};

/// Outcome of comparing x against y on increasing rearrangements.
///
/// partial_sum_slack[j] = sum_{i<=j} y_(i) - sum_{i<=j} x_(i); the weak
/// supermajorization x >=^w y is "all slack >= 0", and the weak
/// submajorization suffix sums follow as (sum x - sum y) + slack[j-1].
class MajorizationResult {
 public:
  MajorizationResult(bool majorizes, bool weak_super, bool weak_sub, std::vector<double> slack);

  bool majorizes() const { return majorizes_; }
  bool weak_super() const { return weak_super_; }
  bool weak_sub() const { return weak_sub_; }
  std::span<const double> partial_sum_slack() const { return slack_; }

 private:
  bool majorizes_;
  bool weak_super_;
  bool weak_sub_;
  std::vector<double> slack_;
};

/// Does x majorize / weakly super- / weakly submajorize y?
/// Sums are compared with relative tolerance 1e-12 * n. Throws DimensionError on length mismatch.
MajorizationResult compare(const ShapeVector& x, const ShapeVector& y);

/// x_1 >= x_2 >= ... >= x_n > 0
bool in_D_plus(std::span<const double> x);
/// 0 < x_1 <= x_2 <= ... <= x_n
bool in_E_plus(std::span<const double> x);

inline bool in_D_plus(const ShapeVector& x) { return in_D_plus(x.entries()); }
inline bool in_E_plus(const ShapeVector& x) { return in_E_plus(x.entries()); }

}  // namespace kwg
