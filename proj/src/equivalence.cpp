#include "negacorr/equivalence.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>

#include "negacorr/construction.hpp"
#include "negacorr/correlation.hpp"
#include "negacorr/errors.hpp"
#include "negacorr/operations.hpp"
#include "packed.hpp"

namespace negacorr {

namespace {

void require_same_period(const BinarySequence& a, const BinarySequence& b) {
  if (a.size() != b.size())
    throw DomainError("period mismatch: " + std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  if (a.empty()) throw DomainError("empty sequence");
}

// v(j) = u(d*j mod 2N) for the doubled sequence u of s.
BinarySequence decimated_double(const BinarySequence& s, std::int64_t d) {
  const std::size_t n = s.size();
  const auto m = static_cast<std::int64_t>(2 * n);
  BinarySequence v(2 * n);
  std::int64_t idx = 0;
  for (std::size_t j = 0; j < 2 * n; ++j) {
    const bool upper = idx >= static_cast<std::int64_t>(n);
    const auto k = static_cast<std::size_t>(upper ? idx - static_cast<std::int64_t>(n) : idx);
    v.set(j, s[k] != upper);
    idx += d;
    if (idx >= m) idx -= m;
  }
  return v;
}

// Smallest t with apply((d, t), s) == target.
std::optional<std::int64_t> smallest_t(const BinarySequence& s, const BinarySequence& target,
                                       std::int64_t d) {
  const auto m = static_cast<std::int64_t>(2 * s.size());
  // u(d*i + t) = v(i + c) with c = t * d^-1, where v = D_d(u).
  const BinarySequence v = decimated_double(s, d);
  const detail::DoubledBits cyclic(v, false);
  std::optional<std::int64_t> best;
  for (std::int64_t c = 0; c < m; ++c) {
    if (detail::mismatches(target, cyclic, static_cast<std::size_t>(c)) != 0) continue;
    const std::int64_t t = c * d % m;
    if (!best || t < *best) best = t;
  }
  return best;
}

// Splits "s12a3" into text and number runs for natural ordering.
std::vector<std::pair<std::string, long long>> natural_key(const std::string& s) {
  std::vector<std::pair<std::string, long long>> key;
  std::size_t i = 0;
  while (i < s.size()) {
    std::string text;
    while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) text += s[i++];
    long long number = -1;
    if (i < s.size()) {
      number = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) && number < (1LL << 58))
        number = number * 10 + (s[i++] - '0');
    }
    key.emplace_back(std::move(text), number);
  }
  return key;
}

}  // namespace

std::string to_string(const AffineWitness& w) {
  return "(d=" + std::to_string(w.d) + ", t=" + std::to_string(w.t) + ")";
}

AffineWitness identity_witness() noexcept { return {1, 0}; }

AffineWitness negation_witness(std::size_t n) noexcept {
  return {1, static_cast<std::int64_t>(n)};
}

AffineWitness nega_shift_witness(std::size_t tau) noexcept {
  return {1, static_cast<std::int64_t>(tau)};
}

AffineWitness nega_decimation_witness(std::int64_t d, std::size_t n) {
  const auto m = static_cast<std::int64_t>(2 * n);
  if (std::gcd(d, m) != 1)
    throw NotCoprime("nega-decimation needs gcd(d, 2N) = 1");
  return {mod_floor(d, m), 0};
}

BinarySequence apply_witness(const AffineWitness& w, const BinarySequence& s) {
  if (s.empty()) throw DomainError("empty sequence");
  const auto n = static_cast<std::int64_t>(s.size());
  const std::int64_t m = 2 * n;
  if (std::gcd(w.d, m) != 1)
    throw NotCoprime("witness needs gcd(d, 2N) = 1, got gcd(" + std::to_string(w.d) + ", " +
                     std::to_string(m) + ")");
  const std::int64_t d = mod_floor(w.d, m);
  std::int64_t idx = mod_floor(w.t, m);
  BinarySequence out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool upper = idx >= n;
    out.set(i, s[static_cast<std::size_t>(upper ? idx - n : idx)] != upper);
    idx += d;
    if (idx >= m) idx -= m;
  }
  return out;
}

AffineWitness compose(const AffineWitness& first, const AffineWitness& second, std::size_t n) {
  const auto m = static_cast<std::int64_t>(2 * n);
  const std::int64_t d1 = mod_floor(first.d, m), t1 = mod_floor(first.t, m);
  const std::int64_t d2 = mod_floor(second.d, m), t2 = mod_floor(second.t, m);
  return {d1 * d2 % m, (d1 * t2 + t1) % m};
}

AffineWitness inverse(const AffineWitness& w, std::size_t n) {
  const auto m = static_cast<std::int64_t>(2 * n);
  const std::int64_t d_inv = inverse_mod(w.d, m);
  return {d_inv, mod_floor(-d_inv * mod_floor(w.t, m), m)};
}

std::vector<std::int64_t> units_mod_2n(std::size_t n) {
  const auto m = static_cast<std::int64_t>(2 * n);
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d < m; ++d)
    if (std::gcd(d, m) == 1) out.push_back(d);
  return out;
}

std::optional<AffineWitness> find_witness_with_d(const BinarySequence& s,
                                                 const BinarySequence& s_prime, std::int64_t d) {
  require_same_period(s, s_prime);
  const auto m = static_cast<std::int64_t>(2 * s.size());
  if (std::gcd(d, m) != 1) throw NotCoprime("witness needs gcd(d, 2N) = 1");
  d = mod_floor(d, m);
  if (auto t = smallest_t(s, s_prime, d)) return AffineWitness{d, *t};
  return std::nullopt;
}

std::optional<AffineWitness> oacf_equivalent(const BinarySequence& s,
                                             const BinarySequence& s_prime) {
  require_same_period(s, s_prime);
  for (std::int64_t d : units_mod_2n(s.size()))
    if (auto t = smallest_t(s, s_prime, d)) return AffineWitness{d, *t};
  return std::nullopt;
}

bool reachable_without_negadecimation(const BinarySequence& s, const BinarySequence& s_prime) {
  return find_witness_with_d(s, s_prime, 1).has_value();
}

bool natural_less(const std::string& a, const std::string& b) {
  return natural_key(a) < natural_key(b);
}

std::vector<EquivalenceClass> classify(std::vector<LabeledSequence> sequences) {
  if (sequences.empty()) return {};
  for (const auto& item : sequences)
    if (item.sequence.size() != sequences.front().sequence.size())
      throw DomainError("classify needs sequences of one period; '" + item.label +
                        "' differs");
  std::stable_sort(sequences.begin(), sequences.end(),
                   [](const auto& a, const auto& b) { return natural_less(a.label, b.label); });

  std::vector<ValueMultiset> dists;
  dists.reserve(sequences.size());
  for (const auto& item : sequences) dists.push_back(oacf_distribution(item.sequence, true));

  std::vector<bool> assigned(sequences.size(), false);
  std::vector<EquivalenceClass> classes;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    if (assigned[i]) continue;
    assigned[i] = true;
    EquivalenceClass cls;
    cls.representative = sequences[i].label;
    cls.members.push_back(sequences[i].label);
    cls.witnesses[sequences[i].label] = identity_witness();
    for (std::size_t j = i + 1; j < sequences.size(); ++j) {
      if (assigned[j] || !(dists[i] == dists[j])) continue;
      if (auto w = oacf_equivalent(sequences[i].sequence, sequences[j].sequence)) {
        assigned[j] = true;
        cls.members.push_back(sequences[j].label);
        cls.witnesses[sequences[j].label] = *w;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

const std::vector<Table4Relation>& table4_relations() {
  static const std::vector<Table4Relation> rows{
      {1, 1, 4, 3, true},   {2, 2, 3, 3, true},   {3, 5, 8, 3, true},
      {4, 6, 7, 3, true},   {5, 9, 12, 3, false}, {6, 10, 11, 1, false},
      {7, 13, 16, 1, false}, {8, 14, 15, 1, false},
  };
  return rows;
}

const char* Table4RowResult::convention() const noexcept {
  if (holds_as_decimation && holds_as_support_action) return "both";
  if (holds_as_decimation) return "decimation";
  if (holds_as_support_action) return "support-action";
  return "none";
}

std::vector<Table4RowResult> verify_table4_at(const CyclotomicSystem& sys) {
  const CrtIsomorphism crt(sys.p());
  const auto n = static_cast<std::size_t>(4 * sys.p());
  const auto m = static_cast<std::int64_t>(2 * n);
  std::vector<Table4RowResult> out;
  for (const Table4Relation& rel : table4_relations()) {
    if (!is_applicable(construction_spec(rel.source), sys.f())) continue;
    const BinarySequence source = construct(rel.source, sys).s;
    const BinarySequence target = construct(rel.target, sys).s;

    Table4RowResult r;
    r.relation = rel;
    r.p = sys.p();
    r.alpha = sys.alpha();
    r.d = crt.eta(1, pow_mod(sys.alpha(), rel.alpha_exponent, sys.p()));
    const AffineWitness pre = rel.negation ? negation_witness(n) : identity_witness();
    r.decimation_witness = compose(pre, nega_decimation_witness(r.d, n), n);
    r.support_action_witness = compose(pre, nega_decimation_witness(inverse_mod(r.d, m), n), n);
    r.holds_as_decimation = apply_witness(r.decimation_witness, source) == target;
    r.holds_as_support_action = apply_witness(r.support_action_witness, source) == target;
    r.searched = oacf_equivalent(source, target);
    out.push_back(r);
  }
  return out;
}

std::vector<Table4RowResult> verify_table4(std::int64_t p_even_f, std::int64_t p_odd_f,
                                           std::optional<std::int64_t> alpha) {
  const CyclotomicSystem even(p_even_f, alpha);
  const CyclotomicSystem odd(p_odd_f, alpha);
  if (even.f() % 2 != 0)
    throw ConstructionInapplicable("rows 1-2 need a prime with f even, got p=" +
                                   std::to_string(p_even_f));
  if (odd.f() % 2 != 1)
    throw ConstructionInapplicable("rows 3-8 need a prime with f odd, got p=" +
                                   std::to_string(p_odd_f));
  auto out = verify_table4_at(even);
  auto rest = verify_table4_at(odd);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace negacorr
