#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negacorr/cyclotomy.hpp"
#include "negacorr/sequence.hpp"

namespace negacorr {

/// Any composition of negation, nega-cyclic shift and nega-decimation,
/// written as the index map j -> d*j + t on Z_2N acting through the doubled
/// sequence u = s || (s xor 1):
///
///   s'(i) = u((d*i + t) mod 2N),  0 <= i < N,  gcd(d, 2N) = 1.
///
/// negation = (1, N), nega-cyclic shift tau = (1, tau), nega-decimation
/// d = (d, 0).
struct AffineWitness {
  std::int64_t d = 1;
  std::int64_t t = 0;

  friend bool operator==(const AffineWitness&, const AffineWitness&) = default;
  friend auto operator<=>(const AffineWitness&, const AffineWitness&) = default;
};

std::string to_string(const AffineWitness& w);

AffineWitness identity_witness() noexcept;
AffineWitness negation_witness(std::size_t n) noexcept;
AffineWitness nega_shift_witness(std::size_t tau) noexcept;
AffineWitness nega_decimation_witness(std::int64_t d, std::size_t n);

/// Throws NotCoprime unless gcd(w.d, 2N) = 1.
BinarySequence apply_witness(const AffineWitness& w, const BinarySequence& s);

/// Witness for "apply `first`, then `second`" on period-n sequences:
/// (d1*d2, d1*t2 + t1) mod 2n.
AffineWitness compose(const AffineWitness& first, const AffineWitness& second, std::size_t n);

/// Inverse map, so apply(inverse(w), apply(w, s)) == s.
AffineWitness inverse(const AffineWitness& w, std::size_t n);

/// Units of Z_2n in ascending order.
std::vector<std::int64_t> units_mod_2n(std::size_t n);

/// Exhaustive search over every (d, t); returns the lexicographically
/// smallest witness mapping s to s_prime. Throws DomainError on period mismatch.
std::optional<AffineWitness> oacf_equivalent(const BinarySequence& s,
                                             const BinarySequence& s_prime);

/// Smallest t with apply((d, t), s) == s_prime, if any.
std::optional<AffineWitness> find_witness_with_d(const BinarySequence& s,
                                                 const BinarySequence& s_prime,
                                                 std::int64_t d);

/// True iff negation and nega-cyclic shifts alone (the d = 1 slice) reach s_prime.
bool reachable_without_negadecimation(const BinarySequence& s, const BinarySequence& s_prime);

struct LabeledSequence {
  std::string label;
  BinarySequence sequence;
};

struct EquivalenceClass {
  std::string representative;
  std::vector<std::string> members;             // natural order, representative first
  std::map<std::string, AffineWitness> witnesses;  // member -> witness from representative
};

/// Orders labels by embedded numbers, so "s2" < "s10".
bool natural_less(const std::string& a, const std::string& b);

/// Partition under oacf_equivalent. Representatives are the naturally
/// smallest labels; classes are ordered by representative.
std::vector<EquivalenceClass> classify(std::vector<LabeledSequence> sequences);

/// One "Relation" row of the Parker-family classification: target =
/// nega-decimate by eta(1, alpha^exponent), optionally after negation.
struct Table4Relation {
  int row;
  int source;
  int target;
  int alpha_exponent;
  bool negation;
};

const std::vector<Table4Relation>& table4_relations();

/// How a printed relation was checked.
///  - decimation: u'(j) = u(d*j), the convention of nega_decimate.
///  - support action: the support of u is multiplied by d, i.e. u'(j) = u(d^-1 * j).
struct Table4RowResult {
  Table4Relation relation;
  std::int64_t p = 0;
  std::int64_t alpha = 0;
  std::int64_t d = 0;
  AffineWitness decimation_witness;
  bool holds_as_decimation = false;
  AffineWitness support_action_witness;
  bool holds_as_support_action = false;
  std::optional<AffineWitness> searched;  // oacf_equivalent(source, target)

  bool holds() const noexcept { return holds_as_decimation || holds_as_support_action; }
  const char* convention() const noexcept;
};

/// All relations applicable at sys.p() (rows 1-2 need f even, rows 3-8 f odd).
std::vector<Table4RowResult> verify_table4_at(const CyclotomicSystem& sys);

/// Rows 1-2 at p_even_f and rows 3-8 at p_odd_f.
std::vector<Table4RowResult> verify_table4(std::int64_t p_even_f, std::int64_t p_odd_f,
                                           std::optional<std::int64_t> alpha = std::nullopt);

}  // namespace negacorr
