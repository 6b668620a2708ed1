#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "negacorr/sequence.hpp"

namespace negacorr {

enum class CorrelationKind { kPeriodic, kOddPeriodic };

const char* to_string(CorrelationKind kind) noexcept;

/// Autocorrelation values indexed by shift tau in [0, N).
struct CorrelationProfile {
  CorrelationKind kind = CorrelationKind::kOddPeriodic;
  std::vector<int> values;

  std::size_t period() const noexcept { return values.size(); }
  int operator[](std::size_t tau) const noexcept { return values[tau]; }
  friend bool operator==(const CorrelationProfile&, const CorrelationProfile&) = default;
};

/// Multiset of correlation values. Remembers whether the zero shift was
/// counted so that total() can be checked against N or N - 1.
class ValueMultiset {
 public:
  ValueMultiset() = default;
  explicit ValueMultiset(bool includes_zero_shift) : includes_zero_shift_(includes_zero_shift) {}

  void add(int value, std::size_t multiplicity = 1);

  const std::map<int, std::size_t>& entries() const noexcept { return entries_; }
  std::size_t multiplicity(int value) const noexcept;
  std::size_t total() const noexcept { return total_; }
  bool includes_zero_shift() const noexcept { return includes_zero_shift_; }

  /// Distinct values in ascending order.
  std::vector<int> support() const;

  /// Rendered as {* (-9)^2, -3, 5^3, 31 *}, ascending.
  std::string to_string() const;

  /// Equal as multisets; the zero-shift flag is not compared.
  friend bool operator==(const ValueMultiset& a, const ValueMultiset& b) noexcept {
    return a.entries_ == b.entries_;
  }

 private:
  std::map<int, std::size_t> entries_;
  std::size_t total_ = 0;
  bool includes_zero_shift_ = true;
};

// Cross-correlations. Both sequences must share the period N and 0 <= tau < N.
int periodic_correlation(const BinarySequence& a, const BinarySequence& b, std::size_t tau);
int odd_periodic_correlation(const BinarySequence& a, const BinarySequence& b, std::size_t tau);

/// Periodic autocorrelation R_a(tau).
int pacf(const BinarySequence& a, std::size_t tau);
/// Odd-periodic (negaperiodic) autocorrelation: the terms whose index wraps
/// past N pick up an extra sign flip.
int oacf(const BinarySequence& a, std::size_t tau);

CorrelationProfile pacf_profile(const BinarySequence& a);
CorrelationProfile oacf_profile(const BinarySequence& a);

ValueMultiset distribution(const CorrelationProfile& profile, bool include_zero_shift);
ValueMultiset oacf_distribution(const BinarySequence& a, bool include_zero_shift);
ValueMultiset pacf_distribution(const BinarySequence& a, bool include_zero_shift);

/// max over 0 < tau < N of |oacf(a, tau)|. Requires N >= 2.
int peak_oacf(const BinarySequence& a);

/// Lower bound on peak_oacf for period n: 1 for odd n, 2 for even n.
int odd_peak_lower_bound(std::size_t n) noexcept;

/// True iff peak_oacf(a) equals the lower bound exactly.
bool is_odd_optimal(const BinarySequence& a);

}  // namespace negacorr
