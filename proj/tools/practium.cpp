// practium -- compute with practical numbers: exact tests, certificates for
// astronomically large members of the known infinite families, table and
// conjecture scans. Every subcommand prints a deterministic report (plain,
// JSON, or CSV); identical invocations produce byte-identical output unless
// --timing is requested.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "practium/certificate.hpp"
#include "practium/cyclotomic.hpp"
#include "practium/errors.hpp"
#include "practium/expr.hpp"
#include "practium/factorization.hpp"
#include "practium/families.hpp"
#include "practium/practical.hpp"
#include "practium/report.hpp"
#include "practium/search.hpp"
#include "practium/sieve.hpp"

namespace {

using practium::Natural;
using ordered_json = nlohmann::ordered_json;

namespace exit_code {
constexpr int success = 0;           // true / verified / scan completed
constexpr int definitive_false = 1;  // not practical / verification failed
constexpr int undecided = 2;         // factoring budget exhausted
constexpr int usage = 64;            // bad arguments or expression
constexpr int data = 65;             // bad file contents or out-of-range request
constexpr int internal = 70;
}  // namespace exit_code

struct RunConfig {
  std::string format = "plain";  // plain | json | csv
  unsigned workers = 0;          // resolved to >= 1 at parse time
  std::uint64_t budget = practium::kDefaultRhoBudget;
  std::string hints_path;
  bool timing = false;
  bool checkpoints = false;
  std::vector<Natural> hint_pool;

  // For a single known target: only the hints dividing it are passed.
  practium::FactorOptions factor_options(const Natural& target) const {
    practium::FactorOptions opts;
    opts.hints = practium::applicable_hints(hint_pool, target);
    opts.rho_budget = budget;
    return opts;
  }

  // For operations that factor several values; they filter per target.
  practium::FactorOptions pool_options() const {
    practium::FactorOptions opts;
    opts.hints = hint_pool;
    opts.rho_budget = budget;
    return opts;
  }
};

class Timer {
 public:
  long long elapsed_ms(bool enabled) const {
    if (!enabled) return 0;
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::milliseconds>(now - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json envelope(const std::string& operation, ordered_json parameters,
                      ordered_json result, ordered_json witnesses, long long runtime_ms,
                      bool partial = false) {
  ordered_json j;
  j["operation"] = operation;
  j["parameters"] = std::move(parameters);
  j["result"] = std::move(result);
  j["witnesses"] = std::move(witnesses);
  j["runtime_ms"] = runtime_ms;
  j["partial"] = partial;
  return j;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

practium::CheckpointFn checkpoint_sink(const RunConfig& cfg, const std::string& operation,
                                       ordered_json parameters) {
  if (!cfg.checkpoints) return {};
  return [operation, parameters = std::move(parameters)](const practium::ScanCheckpoint& cp) {
    ordered_json j = envelope(operation, parameters, nullptr, nullptr, 0, true);
    j["progress"] = {{"current", cp.current}, {"found", cp.found}};
    std::cerr << j.dump() << '\n';
  };
}

ordered_json certificate_json(const practium::PracticalCertificate& cert) {
  ordered_json chain = ordered_json::array();
  for (const auto& mul : cert.chain) chain.push_back(practium::to_string(mul));
  ordered_json base_factors = ordered_json::array();
  for (const auto& pp : cert.base.factors) {
    base_factors.push_back({{"prime", practium::to_string(pp.prime)},
                            {"exponent", pp.exponent}});
  }
  return {{"base", practium::to_string(cert.base.value)},
          {"base_factors", base_factors},
          {"target", practium::to_string(cert.target)},
          {"target_bits", practium::bit_length(cert.target)},
          {"chain", chain}};
}

void write_certificate_file(const practium::PracticalCertificate& cert,
                            const std::string& path) {
  std::ofstream out(path);
  if (!out) throw practium::ParseError("cannot write certificate file: " + path);
  out << practium::to_text(cert);
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const RunConfig& cfg, const std::string& expression) {
  practium::Integer parsed;
  try {
    parsed = practium::parse_sum(expression);
  } catch (const practium::ParseError& e) {
    std::cerr << "practium check: " << e.what() << '\n';
    return exit_code::usage;
  }
  if (sgn(parsed) <= 0) {
    std::cerr << "practium check: the expression must evaluate to a positive integer\n";
    return exit_code::usage;
  }
  const Natural n = parsed;

  Timer timer;
  const practium::Factorization f = practium::factor(n, cfg.factor_options(n));

  std::string status;
  ordered_json witnesses = nullptr;
  int rc = exit_code::success;
  if (!f.complete()) {
    status = "undecided";
    rc = exit_code::undecided;
    ordered_json stuck = ordered_json::array();
    for (const auto& c : f.unfactored) stuck.push_back(practium::to_string(c));
    witnesses = {{"unfactored_cofactors", stuck}};
  } else {
    const practium::PracticalVerdict verdict = practium::is_practical(f);
    if (verdict.practical) {
      status = "practical";
    } else {
      status = "not practical";
      rc = exit_code::definitive_false;
      witnesses = {{"failing_index", *verdict.failing_index},
                   {"failing_prime",
                    practium::to_string(f.factors[*verdict.failing_index - 1].prime)}};
    }
  }

  if (cfg.format == "json") {
    ordered_json factors = ordered_json::array();
    for (const auto& pp : f.factors) {
      factors.push_back({{"prime", practium::to_string(pp.prime)},
                         {"exponent", pp.exponent}});
    }
    ordered_json result = {{"status", status},
                           {"method", "stewart"},
                           {"bits", practium::bit_length(n)},
                           {"factors", factors},
                           {"complete", f.complete()}};
    print_json(envelope("check",
                        {{"expression", expression}, {"value", practium::to_string(n)}},
                        result, witnesses, timer.elapsed_ms(cfg.timing)));
  } else {
    std::cout << expression << " = " << practium::to_string(n) << ": " << status << '\n';
    if (!f.complete()) {
      std::cout << "  factoring budget exhausted; unfactored cofactors:";
      for (const auto& c : f.unfactored) std::cout << ' ' << practium::to_string(c);
      std::cout << "\n  supply --hints or raise --budget\n";
    } else if (rc == exit_code::definitive_false) {
      std::cout << "  Stewart condition fails at prime #" << witnesses["failing_index"]
                << " = " << witnesses["failing_prime"].get<std::string>() << '\n';
    }
  }
  return rc;
}

// ---------------------------------------------------------------------------
// stable

int cmd_stable(const RunConfig& cfg, std::uint64_t b, std::uint64_t c_max,
               std::uint64_t n_max) {
  Timer timer;
  const practium::STableResult table = practium::s_table(b, c_max, n_max, cfg.workers);

  if (cfg.format == "csv") {
    std::cout << practium::stable_csv(table);
  } else if (cfg.format == "json") {
    ordered_json members = ordered_json::array();
    for (const auto c : table.members) members.push_back(c);
    ordered_json excluded = ordered_json::array();
    for (std::uint64_t c = 1; c <= c_max; ++c) {
      if (!table.witnesses.contains(c)) excluded.push_back(c);
    }
    ordered_json witnesses = ordered_json::object();
    for (const auto& [c, n] : table.witnesses) witnesses[std::to_string(c)] = n;
    print_json(envelope(
        "stable", {{"b", b}, {"c_max", c_max}, {"n_max", n_max}},
        {{"members", members}, {"excluded", excluded}}, witnesses,
        timer.elapsed_ms(cfg.timing)));
  } else {
    std::cout << "S_" << b << " (1 <= c <= " << c_max << ", witnesses n = 2.." << n_max
              << "):\n  members:";
    for (const auto c : table.members) std::cout << ' ' << c;
    std::cout << "\n  excluded:";
    for (std::uint64_t c = 1; c <= c_max; ++c) {
      if (!table.witnesses.contains(c)) std::cout << ' ' << c;
    }
    std::cout << "\n  least witnesses:\n";
    for (const auto& [c, n] : table.witnesses) {
      std::cout << "    c = " << c << ": n = " << n << '\n';
    }
  }
  return exit_code::success;
}

// ---------------------------------------------------------------------------
// family

int cmd_family_quadratic(const RunConfig& cfg, std::uint64_t b, std::uint64_t c,
                         std::uint64_t seed, unsigned count) {
  Timer timer;
  practium::QuadraticFamily fam{Natural(b), Natural(c)};
  practium::QuadraticFamilyStream stream(fam, Natural(seed), cfg.pool_options());

  ordered_json elements = ordered_json::array();
  bool all_verified = true;
  for (unsigned i = 0; i < count; ++i) {
    const auto& element = i == 0 ? stream.current() : stream.advance();
    const bool ok = static_cast<bool>(practium::verify(element.certificate));
    all_verified = all_verified && ok;
    if (cfg.format == "json") {
      ordered_json e = {{"index", i},
                        {"n", practium::to_string(element.n)},
                        {"value", practium::to_string(element.certificate.target)},
                        {"verified", ok}};
      e["certificate"] = certificate_json(element.certificate);
      elements.push_back(std::move(e));
    } else {
      std::cout << "n = " << practium::to_string(element.n)
                << ": f(n) = " << practium::to_string(element.certificate.target)
                << " (chain length " << element.certificate.chain.size() << ", "
                << (ok ? "verified" : "FAILED") << ")\n";
    }
  }
  if (cfg.format == "json") {
    print_json(envelope("family",
                        {{"kind", "quadratic"},
                         {"b", b},
                         {"c", c},
                         {"seed", seed},
                         {"count", count}},
                        {{"elements", elements}, {"all_verified", all_verified}}, nullptr,
                        timer.elapsed_ms(cfg.timing)));
  }
  return all_verified ? exit_code::success : exit_code::definitive_false;
}

int cmd_family_power2(const RunConfig& cfg, unsigned k, const std::string& emit_cert) {
  Timer timer;
  const practium::PowerTwoMember member = practium::power_two_member(k, cfg.pool_options());
  const bool ok = static_cast<bool>(practium::verify(member.certificate));
  if (!emit_cert.empty()) write_certificate_file(member.certificate, emit_cert);

  if (cfg.format == "json") {
    ordered_json result = {{"k", k},
                           {"value", practium::to_string(member.value)},
                           {"bits", practium::bit_length(member.value)},
                           {"verified", ok},
                           {"certificate", certificate_json(member.certificate)}};
    print_json(envelope("family", {{"kind", "power2"}, {"k", k}}, result, nullptr,
                        timer.elapsed_ms(cfg.timing)));
  } else {
    std::cout << "m_" << k << " = 2^"
              << Natural(35 * practium::pow_nat(3, k) + 1).get_str() << " + 2 ("
              << practium::bit_length(member.value) << " bits): "
              << (ok ? "practical, certificate verified" : "certificate FAILED") << '\n';
    std::cout << "  base " << practium::to_string(member.certificate.base.value)
              << ", chain length " << member.certificate.chain.size() << '\n';
    if (!emit_cert.empty()) std::cout << "  certificate written to " << emit_cert << '\n';
  }
  return ok ? exit_code::success : exit_code::definitive_false;
}

// ---------------------------------------------------------------------------
// triple

int cmd_triple(const RunConfig& cfg, unsigned d, unsigned k, const std::string& emit_prefix) {
  Timer timer;
  const practium::PythagoreanTriple triple = practium::pythagorean_family(d, k, cfg.pool_options());

  const bool ok_a = static_cast<bool>(practium::verify(triple.cert_a));
  const bool ok_b = static_cast<bool>(practium::verify(triple.cert_b));
  const bool ok_c = static_cast<bool>(practium::verify(triple.cert_c));
  const bool all_ok = ok_a && ok_b && ok_c;

  if (!emit_prefix.empty()) {
    write_certificate_file(triple.cert_a, emit_prefix + ".a.cert");
    write_certificate_file(triple.cert_b, emit_prefix + ".b.cert");
    write_certificate_file(triple.cert_c, emit_prefix + ".c.cert");
  }

  if (cfg.format == "json") {
    ordered_json result = {{"d", d},
                           {"k", k},
                           {"a", practium::to_string(triple.a)},
                           {"b", practium::to_string(triple.b)},
                           {"c", practium::to_string(triple.c)},
                           {"verified", {{"a", ok_a}, {"b", ok_b}, {"c", ok_c}}},
                           {"certificates",
                            {{"a", certificate_json(triple.cert_a)},
                             {"b", certificate_json(triple.cert_b)},
                             {"c", certificate_json(triple.cert_c)}}}};
    print_json(envelope("triple", {{"d", d}, {"k", k}}, result, nullptr,
                        timer.elapsed_ms(cfg.timing)));
  } else {
    std::cout << "practical Pythagorean triple, gcd = " << d << ", k = " << k << ":\n";
    std::cout << "  a = " << practium::to_string(triple.a) << '\n';
    std::cout << "  b = " << practium::to_string(triple.b) << '\n';
    std::cout << "  c = " << practium::to_string(triple.c) << '\n';
    std::cout << "  certificates: a " << (ok_a ? "verified" : "FAILED") << ", b "
              << (ok_b ? "verified" : "FAILED") << ", c " << (ok_c ? "verified" : "FAILED")
              << '\n';
  }
  return all_ok ? exit_code::success : exit_code::definitive_false;
}

// ---------------------------------------------------------------------------
// certify

int cmd_certify(const RunConfig& cfg, const std::string& path, bool strong) {
  Timer timer;
  const practium::FactorOptions opts = cfg.pool_options();
  const practium::PracticalCertificate cert = practium::load_certificate(path, opts);
  const practium::VerifyReport report = practium::verify(
      cert, strong ? practium::VerifyMode::strong : practium::VerifyMode::weak, opts);

  std::string failure;
  switch (report.failure) {
    case practium::VerifyReport::Failure::none:
      break;
    case practium::VerifyReport::Failure::base_not_practical:
      failure = "base is not practical";
      break;
    case practium::VerifyReport::Failure::chain_product_mismatch:
      failure = "base times chain product does not equal target";
      break;
    case practium::VerifyReport::Failure::bound_violated:
      failure = "multiplier at step " + std::to_string(report.step) + " exceeds the bound";
      break;
  }

  if (cfg.format == "json") {
    ordered_json result = {{"verified", report.ok},
                           {"mode", strong ? "strong" : "weak"},
                           {"target", practium::to_string(cert.target)},
                           {"target_bits", practium::bit_length(cert.target)},
                           {"chain_length", cert.chain.size()}};
    if (!report.ok) result["failure"] = failure;
    print_json(envelope("certify", {{"file", path}, {"mode", strong ? "strong" : "weak"}},
                        result, nullptr, timer.elapsed_ms(cfg.timing)));
  } else {
    if (report.ok) {
      std::cout << path << ": verified; target ("
                << practium::bit_length(cert.target) << " bits) is practical\n";
    } else {
      std::cout << path << ": NOT verified: " << failure << '\n';
    }
  }
  return report.ok ? exit_code::success : exit_code::definitive_false;
}

// ---------------------------------------------------------------------------
// scan

int cmd_scan(const RunConfig& cfg, const std::string& which, std::uint64_t limit) {
  Timer timer;
  const ordered_json params = {{"which", which}, {"limit", limit}};
  const practium::CheckpointFn checkpoint = checkpoint_sink(cfg, "scan", params);

  std::vector<std::uint64_t> values;
  std::string role;
  if (which == "goldbach") {
    values = practium::goldbach_practical(limit, cfg.workers, checkpoint);
    role = "counterexamples";
  } else if (which == "twin") {
    values = practium::twin_practical(limit, cfg.workers, checkpoint);
    role = "elements";
  } else if (which == "sun") {
    values = practium::sun_chain_search(limit, cfg.workers, checkpoint);
    role = "elements";
  } else if (which == "oddprime") {
    values = practium::odd_prime_plus_practical(limit, cfg.workers, checkpoint);
    role = "counterexamples";
  } else {
    std::cerr << "practium scan: unknown scan '" << which
              << "' (expected goldbach, twin, sun, or oddprime)\n";
    return exit_code::usage;
  }

  if (cfg.format == "json") {
    ordered_json list = ordered_json::array();
    for (const auto v : values) list.push_back(v);
    print_json(envelope("scan", params,
                        {{"count", values.size()}, {role, list}}, nullptr,
                        timer.elapsed_ms(cfg.timing)));
  } else {
    std::cout << which << " scan to " << limit << ": " << values.size() << ' ' << role
              << '\n';
    for (const auto v : values) std::cout << v << '\n';
  }
  return exit_code::success;
}

// ---------------------------------------------------------------------------
// density

int cmd_density(const RunConfig& cfg, std::uint64_t x) {
  Timer timer;
  const practium::DensityPoint point = practium::count_practical(x, cfg.workers);
  if (cfg.format == "json") {
    print_json(envelope("density", {{"x", x}},
                        {{"count", point.count}, {"ratio", point.ratio_text}}, nullptr,
                        timer.elapsed_ms(cfg.timing)));
  } else {
    std::cout << "P(" << x << ") = " << point.count
              << ", count*ln(x)/x = " << point.ratio_text << '\n';
  }
  return exit_code::success;
}

// ---------------------------------------------------------------------------
// sieve

int cmd_sieve(const RunConfig& cfg, std::uint64_t limit) {
  Timer timer;
  const practium::PracticalSet set = practium::PracticalSet::build(limit, cfg.workers);
  if (cfg.format == "json") {
    ordered_json list = ordered_json::array();
    set.for_each([&list](std::uint64_t n) { list.push_back(n); });
    print_json(envelope("sieve", {{"limit", limit}},
                        {{"count", set.count()}, {"practical", list}}, nullptr,
                        timer.elapsed_ms(cfg.timing)));
  } else {
    set.for_each([](std::uint64_t n) { std::cout << n << '\n'; });
  }
  return exit_code::success;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "practium: practical-number computations -- exact practicality tests,\n"
      "multiplier-chain certificates, cyclotomic machinery, S_b tables and\n"
      "desk-scale conjecture scans."};
  app.require_subcommand(1);
  app.footer(
      "Exit codes:\n"
      "  0   success / practical / verified\n"
      "  1   definitive false (not practical, certificate rejected)\n"
      "  2   undecided (factoring budget exhausted; add --hints or --budget)\n"
      "  64  usage or expression error\n"
      "  65  data or format error (files, out-of-range requests)\n"
      "  70  internal error\n"
      "\n"
      "Numbers may be written as expressions: products '*' of decimals and\n"
      "powers '^' plus top-level '+'/'-', e.g. 2^316+2 or 3^71-3.\n"
      "PRACTIUM_HINTS names a default factor-hints file (one decimal per\n"
      "line, '#' comments); only hints dividing the current target are used.");

  RunConfig cfg;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  std::string hints_flag;

  app.add_option("-f,--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
  app.add_option("-w,--workers", cfg.workers, "Worker threads for parallel stages")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "Pollard-rho iteration cap per cofactor")
      ->check(CLI::Range(std::uint64_t(10'000), std::uint64_t(1) << 40))
      ->capture_default_str();
  app.add_option("--hints", hints_flag,
                 "Factor-hints file (default: $PRACTIUM_HINTS if set)");
  app.add_flag("--timing", cfg.timing,
               "Measure runtime_ms in JSON reports (breaks byte-for-byte determinism)");
  app.add_flag("--checkpoints", cfg.checkpoints,
               "Emit partial JSON progress reports to stderr every 10^4 candidates");

  // check
  std::string check_expr;
  auto* check = app.add_subcommand("check", "Decide practicality of one number");
  check->add_option("expression", check_expr, "Number or expression, e.g. 2^36+2")
      ->required();

  // stable
  std::uint64_t stable_b = 0, stable_cmax = 100, stable_nmax = 20000;
  auto* stable = app.add_subcommand("stable", "Reproduce the S_b membership table");
  stable->add_option("--b", stable_b, "Even quadratic coefficient b")->required();
  stable->add_option("--c-max", stable_cmax, "Largest c tested")->capture_default_str();
  stable->add_option("--n-max", stable_nmax, "Largest witness n tested")
      ->capture_default_str();

  // family
  std::string family_kind;
  std::uint64_t fam_b = 0, fam_c = 2, fam_seed = 2;
  unsigned fam_count = 3, fam_k = 0;
  std::string fam_emit;
  auto* family = app.add_subcommand("family", "Certified members of the infinite families");
  family->add_option("--kind", family_kind, "quadratic | power2")
      ->check(CLI::IsMember({"quadratic", "power2"}))
      ->required();
  family->add_option("--b", fam_b, "Quadratic: coefficient b");
  family->add_option("--c", fam_c, "Quadratic: constant c");
  family->add_option("--seed", fam_seed, "Quadratic: starting n (f(seed) must be practical)");
  family->add_option("--count", fam_count, "Quadratic: elements to emit")
      ->check(CLI::Range(1u, 16u));
  family->add_option("--k", fam_k, "power2: index k of 2^(35*3^k+1)+2");
  family->add_option("--emit-cert", fam_emit, "power2: write the certificate to this file");

  // triple
  unsigned triple_d = 6, triple_k = 0;
  std::string triple_emit;
  auto* triple = app.add_subcommand("triple", "Certified practical Pythagorean triple");
  triple->add_option("--d", triple_d, "gcd tag, 4 or 6")
      ->check(CLI::IsMember({4u, 6u}))
      ->required();
  triple->add_option("--k", triple_k, "Generation index")->capture_default_str();
  triple->add_option("--emit-certs", triple_emit,
                     "Write the three certificates to PREFIX.{a,b,c}.cert");

  // certify
  std::string certify_path;
  bool certify_strong = false;
  auto* certify = app.add_subcommand("certify", "Verify a certificate file");
  certify->add_option("file", certify_path, "Certificate file")->required();
  certify->add_flag("--strong", certify_strong,
                    "Use the sigma(acc)+1 bound (factors intermediate accumulators)");

  // scan
  std::string scan_which;
  std::uint64_t scan_limit = 100000;
  auto* scan = app.add_subcommand("scan", "Desk-scale conjecture scans");
  scan->add_option("--which", scan_which, "goldbach | twin | sun | oddprime")
      ->check(CLI::IsMember({"goldbach", "twin", "sun", "oddprime"}))
      ->required();
  scan->add_option("--limit", scan_limit, "Scan bound")->capture_default_str();

  // density
  std::uint64_t density_x = 1000000;
  auto* density = app.add_subcommand("density", "Count practical numbers and report the density ratio");
  density->add_option("--x", density_x, "Count practical numbers <= x")->required();

  // sieve
  std::uint64_t sieve_limit = 0;
  auto* sieve = app.add_subcommand("sieve", "Emit all practical numbers up to a limit");
  sieve->add_option("--limit", sieve_limit, "Upper bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::usage;
  }

  try {
    if (hints_flag.empty()) {
      if (const char* env = std::getenv("PRACTIUM_HINTS")) hints_flag = env;
    }
    if (!hints_flag.empty()) {
      cfg.hints_path = hints_flag;
      cfg.hint_pool = practium::load_hints(hints_flag);
    }

    if (*check) return cmd_check(cfg, check_expr);
    if (*stable) return cmd_stable(cfg, stable_b, stable_cmax, stable_nmax);
    if (*family) {
      if (family_kind == "quadratic") {
        return cmd_family_quadratic(cfg, fam_b, fam_c, fam_seed, fam_count);
      }
      return cmd_family_power2(cfg, fam_k, fam_emit);
    }
    if (*triple) return cmd_triple(cfg, triple_d, triple_k, triple_emit);
    if (*certify) return cmd_certify(cfg, certify_path, certify_strong);
    if (*scan) return cmd_scan(cfg, scan_which, scan_limit);
    if (*density) return cmd_density(cfg, density_x);
    if (*sieve) return cmd_sieve(cfg, sieve_limit);
    return exit_code::usage;
  } catch (const practium::FactoringRequired& e) {
    std::cerr << "practium: " << e.what() << '\n';
    return exit_code::undecided;
  } catch (const practium::SeedNotPractical& e) {
    std::cerr << "practium: " << e.what() << '\n';
    return exit_code::definitive_false;
  } catch (const practium::ParseError& e) {
    std::cerr << "practium: " << e.what() << '\n';
    return exit_code::data;
  } catch (const practium::LimitExceeded& e) {
    std::cerr << "practium: " << e.what() << '\n';
    return exit_code::data;
  } catch (const practium::InvalidHint& e) {
    std::cerr << "practium: " << e.what() << '\n';
    return exit_code::data;
  } catch (const std::invalid_argument& e) {
    std::cerr << "practium: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const practium::Error& e) {
    std::cerr << "practium: internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
}
