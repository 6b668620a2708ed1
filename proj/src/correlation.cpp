#include "negacorr/correlation.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "negacorr/errors.hpp"
#include "packed.hpp"

namespace negacorr {

namespace {

void check_shift(const BinarySequence& a, std::size_t tau) {
  if (a.empty()) throw DomainError("empty sequence");
  if (tau >= a.size())
    throw ShiftOutOfRange("shift " + std::to_string(tau) + " outside [0, " +
                          std::to_string(a.size()) + ")");
}

void check_pair(const BinarySequence& a, const BinarySequence& b, std::size_t tau) {
  if (a.size() != b.size())
    throw DomainError("period mismatch: " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  check_shift(a, tau);
}

// Each agreeing position contributes +1, each disagreement -1.
int from_mismatches(std::size_t n, std::size_t mismatches) {
  return static_cast<int>(n) - 2 * static_cast<int>(mismatches);
}

CorrelationProfile profile(const BinarySequence& a, CorrelationKind kind) {
  if (a.empty()) throw DomainError("empty sequence");
  const bool nega = kind == CorrelationKind::kOddPeriodic;
  const detail::DoubledBits doubled(a, nega);
  CorrelationProfile out{kind, std::vector<int>(a.size())};
  for (std::size_t tau = 0; tau < a.size(); ++tau)
    out.values[tau] = from_mismatches(a.size(), detail::mismatches(a, doubled, tau));
  return out;
}

}  // namespace

const char* to_string(CorrelationKind kind) noexcept {
  return kind == CorrelationKind::kPeriodic ? "PACF" : "OACF";
}

void ValueMultiset::add(int value, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  entries_[value] += multiplicity;
  total_ += multiplicity;
}

std::size_t ValueMultiset::multiplicity(int value) const noexcept {
  const auto it = entries_.find(value);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<int> ValueMultiset::support() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& [value, count] : entries_) out.push_back(value);
  return out;
}

std::string ValueMultiset::to_string() const {
  std::string out = "{*";
  bool first = true;
  for (const auto& [value, count] : entries_) {
    out += first ? " " : ", ";
    first = false;
    const std::string v = std::to_string(value);
    if (count == 1) {
      out += v;
    } else {
      out += value < 0 ? "(" + v + ")" : v;
      out += "^" + std::to_string(count);
    }
  }
  out += " *}";
  return out;
}

int periodic_correlation(const BinarySequence& a, const BinarySequence& b, std::size_t tau) {
  check_pair(a, b, tau);
  const detail::DoubledBits doubled(b, false);
  return from_mismatches(a.size(), detail::mismatches(a, doubled, tau));
}

int odd_periodic_correlation(const BinarySequence& a, const BinarySequence& b,
                             std::size_t tau) {
  check_pair(a, b, tau);
  const detail::DoubledBits doubled(b, true);
  return from_mismatches(a.size(), detail::mismatches(a, doubled, tau));
}

int pacf(const BinarySequence& a, std::size_t tau) { return periodic_correlation(a, a, tau); }

int oacf(const BinarySequence& a, std::size_t tau) { return odd_periodic_correlation(a, a, tau); }

CorrelationProfile pacf_profile(const BinarySequence& a) {
  return profile(a, CorrelationKind::kPeriodic);
}

CorrelationProfile oacf_profile(const BinarySequence& a) {
  return profile(a, CorrelationKind::kOddPeriodic);
}

ValueMultiset distribution(const CorrelationProfile& profile, bool include_zero_shift) {
  ValueMultiset out(include_zero_shift);
  for (std::size_t tau = include_zero_shift ? 0 : 1; tau < profile.values.size(); ++tau)
    out.add(profile.values[tau]);
  return out;
}

ValueMultiset oacf_distribution(const BinarySequence& a, bool include_zero_shift) {
  return distribution(oacf_profile(a), include_zero_shift);
}

ValueMultiset pacf_distribution(const BinarySequence& a, bool include_zero_shift) {
  return distribution(pacf_profile(a), include_zero_shift);
}

int peak_oacf(const BinarySequence& a) {
  if (a.size() < 2) throw DomainError("peak OACF needs period N >= 2");
  const auto p = oacf_profile(a);
  int peak = 0;
  for (std::size_t tau = 1; tau < p.values.size(); ++tau) peak = std::max(peak, std::abs(p[tau]));
  return peak;
}

int odd_peak_lower_bound(std::size_t n) noexcept { return n % 2 == 1 ? 1 : 2; }

bool is_odd_optimal(const BinarySequence& a) {
  return peak_oacf(a) == odd_peak_lower_bound(a.size());
}

}  // namespace negacorr
