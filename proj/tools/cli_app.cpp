#include "cli_app.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "negacorr/construction.hpp"
#include "negacorr/correlation.hpp"
#include "negacorr/cyclotomy.hpp"
#include "negacorr/equivalence.hpp"
#include "negacorr/errors.hpp"
#include "negacorr/operations.hpp"
#include "negacorr/serialize.hpp"

namespace negacorr::cli {

namespace {

using nlohmann::json;

constexpr const char* kDefaultPrimes = "17,41,5,13,29,37";

struct Options {
  bool json = false;
  std::optional<std::int64_t> alpha;

  // oacf
  std::string oacf_seq;
  bool pacf = false;
  bool distribution = false;
  bool exclude_zero = false;

  // apply
  std::string apply_op;
  std::string apply_seq;
  std::optional<std::int64_t> apply_param;

  // construct
  int construct_index = 0;
  std::int64_t construct_p = 0;
  bool emit_u = false;

  // verify
  bool tables = false;
  bool table4 = false;
  std::string primes = kDefaultPrimes;

  // classify
  std::optional<std::int64_t> classify_prime;
  std::vector<int> classify_rows;
  std::vector<std::string> classify_items;

  // equiv
  std::string equiv_a;
  std::string equiv_b;
  bool no_negadecimation = false;
};

class Session {
 public:
  Session(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err)
      : opt_(opt), in_(in), out_(out), err_(err) {}

  int oacf_cmd() {
    const BinarySequence a = read_sequence(opt_.oacf_seq);
    const CorrelationProfile profile = opt_.pacf ? pacf_profile(a) : oacf_profile(a);
    const ValueMultiset dist = distribution(profile, !opt_.exclude_zero);
    if (opt_.json) {
      json j = to_json(profile);
      if (opt_.distribution) j["distribution"] = to_json(dist);
      out_ << j.dump() << '\n';
    } else if (opt_.distribution) {
      out_ << dist.to_string() << '\n';
    } else {
      out_ << to_text(profile.values) << '\n';
    }
    return kOk;
  }

  int apply_cmd() {
    const BinarySequence a = read_sequence(opt_.apply_seq);
    const std::string& op = opt_.apply_op;
    if (op != "negate" && !opt_.apply_param) {
      err_ << "apply " << op << " needs an integer parameter\n";
      return kUsage;
    }
    BinarySequence result;
    if (op == "negate") {
      result = negate(a);
    } else {
      const std::int64_t param = *opt_.apply_param;
      if (op == "decimate" || op == "negadecimate") {
        result = op == "decimate" ? decimate(a, param) : nega_decimate(a, param);
      } else {
        if (param < 0) throw ShiftOutOfRange("shift must be non-negative");
        const auto tau = static_cast<std::size_t>(param);
        result = op == "shift" ? cyclic_shift(a, tau) : nega_cyclic_shift(a, tau);
      }
    }
    if (opt_.json) {
      json j{{"operation", op}, {"input", a.to_string()}, {"result", result.to_string()}};
      j["param"] = opt_.apply_param ? json(*opt_.apply_param) : json(nullptr);
      out_ << j.dump() << '\n';
    } else {
      out_ << result.to_string() << '\n';
    }
    return kOk;
  }

  int construct_cmd() {
    const CyclotomicSystem sys(opt_.construct_p, opt_.alpha);
    const ParkerSequence seq = construct(opt_.construct_index, sys);
    if (opt_.json) {
      json j{{"index", opt_.construct_index}, {"p", sys.p()}, {"alpha", sys.alpha()},
             {"s", seq.s.to_string()}};
      if (opt_.emit_u) j["u"] = seq.u.to_string();
      out_ << j.dump() << '\n';
    } else {
      out_ << seq.s.to_string() << '\n';
      if (opt_.emit_u) out_ << seq.u.to_string() << '\n';
    }
    return kOk;
  }

  int verify_cmd() {
    const bool do_tables = opt_.tables || !opt_.table4;
    const bool do_table4 = opt_.table4 || !opt_.tables;
    json skipped = json::array();
    std::vector<std::int64_t> primes;
    for (std::int64_t p : parse_primes(opt_.primes)) {
      std::string reason;
      if (!is_prime(p))
        reason = std::to_string(p) + " is not prime";
      else if (p % 4 != 1)
        reason = std::to_string(p) + " ≢ 1 mod 4";
      if (reason.empty()) {
        primes.push_back(p);
        continue;
      }
      skipped.push_back({{"p", p}, {"reason", reason}});
      if (!opt_.json) out_ << reason << ", skipped\n";
    }

    bool all_ok = true;
    json j{{"skipped", skipped}};
    if (do_tables) {
      json reports = json::array();
      int passed = 0, total = 0;
      for (std::int64_t p : primes) {
        const CyclotomicSystem sys(p, opt_.alpha);
        for (const auto& spec : construction_table()) {
          if (!is_applicable(spec, sys.f())) continue;
          const VerificationReport r = verify_table(spec.index, sys);
          ++total;
          passed += r.matched ? 1 : 0;
          all_ok = all_ok && r.matched;
          if (opt_.json)
            reports.push_back(to_json(r));
          else
            out_ << to_text(r) << '\n';
        }
      }
      if (opt_.json)
        j["tables"] = reports;
      else
        out_ << "tables: " << passed << "/" << total << " rows matched\n";
    }
    if (do_table4) {
      json rows = json::array();
      int passed = 0, total = 0;
      for (std::int64_t p : primes) {
        const CyclotomicSystem sys(p, opt_.alpha);
        for (const auto& r : verify_table4_at(sys)) {
          ++total;
          passed += r.holds() ? 1 : 0;
          all_ok = all_ok && r.holds();
          if (opt_.json)
            rows.push_back(to_json(r));
          else
            out_ << to_text(r) << '\n';
        }
      }
      if (opt_.json)
        j["table4"] = rows;
      else
        out_ << "table4: " << passed << "/" << total << " relations confirmed\n";
    }
    j["passed"] = all_ok;
    if (opt_.json) out_ << j.dump() << '\n';
    return all_ok ? kOk : kVerifyFailed;
  }

  int classify_cmd() {
    std::vector<LabeledSequence> items;
    if (opt_.classify_prime) {
      const CyclotomicSystem sys(*opt_.classify_prime, opt_.alpha);
      std::vector<int> rows = opt_.classify_rows;
      if (rows.empty())
        for (const auto& spec : construction_table())
          if (is_applicable(spec, sys.f())) rows.push_back(spec.index);
      for (int i : rows) items.push_back({"s" + std::to_string(i), construct(i, sys).s});
    }
    std::size_t auto_label = 1;
    for (const std::string& item : opt_.classify_items) {
      const auto eq = item.find('=');
      if (eq == std::string::npos)
        items.push_back({"#" + std::to_string(auto_label++), read_sequence(item)});
      else
        items.push_back({item.substr(0, eq), read_sequence(item.substr(eq + 1))});
    }
    if (items.empty()) {
      err_ << "classify needs --prime or at least one sequence\n";
      return kUsage;
    }
    const auto classes = classify(std::move(items));
    if (opt_.json) {
      out_ << to_json(classes).dump() << '\n';
      return kOk;
    }
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const auto& cls = classes[k];
      out_ << "class " << (k + 1) << ":";
      for (const auto& m : cls.members) out_ << ' ' << m;
      out_ << " (representative " << cls.representative << ")";
      for (const auto& m : cls.members)
        if (m != cls.representative) out_ << "; " << m << " = " << to_string(cls.witnesses.at(m));
      out_ << '\n';
    }
    return kOk;
  }

  int equiv_cmd() {
    const BinarySequence a = read_sequence(opt_.equiv_a);
    const BinarySequence b = read_sequence(opt_.equiv_b);
    const auto w = opt_.no_negadecimation ? find_witness_with_d(a, b, 1) : oacf_equivalent(a, b);
    if (opt_.json) {
      json j{{"equivalent", w.has_value()}, {"restricted_to_d1", opt_.no_negadecimation}};
      j["witness"] = w ? to_json(*w) : json(nullptr);
      out_ << j.dump() << '\n';
    } else if (w) {
      out_ << "equivalent " << to_string(*w) << '\n';
    } else {
      out_ << "not equivalent\n";
    }
    return kOk;
  }

 private:
  BinarySequence read_sequence(const std::string& literal) {
    if (literal != "-") return BinarySequence::parse(literal);
    if (!stdin_cache_) {
      stdin_cache_ = std::string(std::istreambuf_iterator<char>(in_), {});
    }
    return BinarySequence::parse(*stdin_cache_);
  }

  static std::vector<std::int64_t> parse_primes(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      std::size_t used = 0;
      long long v = 0;
      try {
        v = std::stoll(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw DomainError("bad prime list entry '" + item + "'");
      out.push_back(v);
    }
    return out;
  }

  const Options& opt_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::optional<std::string> stdin_cache_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opt;
  CLI::App app{"Odd-periodic correlation toolkit for binary sequences", "negacorr"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "Emit one JSON object instead of text");
  app.add_option("--alpha", opt.alpha, "Primitive root used for the cyclotomic classes");

  auto* oacf = app.add_subcommand("oacf", "Autocorrelation profile of a sequence");
  oacf->add_option("sequence", opt.oacf_seq, "0/1 literal, or - for stdin")->required();
  oacf->add_flag("--pacf", opt.pacf, "Periodic instead of odd-periodic");
  oacf->add_flag("--distribution", opt.distribution, "Print the value multiset");
  oacf->add_flag("--exclude-zero", opt.exclude_zero, "Leave tau = 0 out of the multiset");

  auto* apply = app.add_subcommand("apply", "Apply an operation to a sequence");
  apply->add_option("op", opt.apply_op, "negate|shift|negashift|decimate|negadecimate")
      ->required()
      ->check(CLI::IsMember({"negate", "shift", "negashift", "decimate", "negadecimate"}));
  apply->add_option("sequence", opt.apply_seq, "0/1 literal, or - for stdin")->required();
  apply->add_option("param", opt.apply_param, "Shift or decimation factor");

  auto* cons = app.add_subcommand("construct", "Build row i of the period-4p families");
  cons->add_option("index", opt.construct_index, "Row 1..16")
      ->required()
      ->check(CLI::Range(1, 16));
  cons->add_option("p", opt.construct_p, "Prime p = 1 mod 4")->required();
  cons->add_flag("--emit-u", opt.emit_u, "Also print u = s || (s xor 1)");

  auto* verify = app.add_subcommand("verify", "Check the value tables and the relations");
  verify->add_flag("--tables", opt.tables, "Check the OACF value sets of rows 1-16");
  verify->add_flag("--table4", opt.table4, "Check the pairwise relations");
  verify->add_option("--primes", opt.primes, "Comma-separated primes")
      ->default_str(kDefaultPrimes);

  auto* cls = app.add_subcommand("classify", "Partition sequences into equivalence classes");
  cls->add_option("--prime", opt.classify_prime, "Classify the constructed rows at this prime");
  cls->add_option("--rows", opt.classify_rows, "Restrict to these rows")->delimiter(',');
  cls->add_option("sequences", opt.classify_items, "label=bits or bits");

  auto* equiv = app.add_subcommand("equiv", "Search for a witness mapping s to s'");
  equiv->add_option("s", opt.equiv_a, "0/1 literal")->required();
  equiv->add_option("s_prime", opt.equiv_b, "0/1 literal")->required();
  equiv->add_flag("--no-negadecimation", opt.no_negadecimation,
                  "Only negation and nega-cyclic shifts (d = 1)");

  // CLI11 wants argv-style input, last argument first.
  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  Session session(opt, in, out, err);
  try {
    if (*oacf) return session.oacf_cmd();
    if (*apply) return session.apply_cmd();
    if (*cons) return session.construct_cmd();
    if (*verify) return session.verify_cmd();
    if (*cls) return session.classify_cmd();
    if (*equiv) return session.equiv_cmd();
  } catch (const ParseError& e) {
    err << "parse error at position " << e.position() << ": " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionInapplicable& e) {
    err << e.what() << '\n';
    return kInapplicable;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace negacorr::cli
