// Acceptance suite: exercises every headline capability end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "practium/certificate.hpp"
#include "practium/cyclotomic.hpp"
#include "practium/factorization.hpp"
#include "practium/families.hpp"
#include "practium/practical.hpp"
#include "practium/search.hpp"
#include "practium/sieve.hpp"

using namespace practium;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << name;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

void run_criterion(int criterion, const std::string& name,
                   const std::function<std::pair<bool, std::string>()>& body) {
  try {
    const auto [ok, detail] = body();
    report(criterion, name, ok, detail);
  } catch (const std::exception& e) {
    report(criterion, name, false, std::string("exception: ") + e.what());
  }
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(PRACTIUM_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult result;
  std::array<char, 4096> buffer{};
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string hints_path() { return std::string(PRACTIUM_TEST_DATA_DIR) + "/m2.hints"; }

// --------------------------------------------------------------------------
// 1. S_b table reproduction

struct DisplayedTable {
  std::uint64_t b;
  std::uint64_t r1, r2;                  // excluded residues mod 12
  std::set<std::uint64_t> exceptions;    // excluded beyond the residue rule
};

const std::vector<DisplayedTable> kDisplayedTables = {
    {0, 1, 10, {43, 67, 93}},  {2, 2, 11, {44, 68, 94}}, {4, 2, 5, {47, 71, 97}},
    {6, 7, 10, {52, 76}},      {8, 2, 5, {59, 83}},      {10, 2, 11, {68, 92}},
    {12, 1, 10, {79}},         {14, 2, 11, {92}},        {16, 2, 5, {}},
    {18, 7, 10, {}},           {20, 2, 5, {}},
};

std::pair<bool, std::string> criterion_stables() {
  for (const auto& expected : kDisplayedTables) {
    std::vector<std::uint64_t> want;
    for (std::uint64_t c = 1; c <= 100; ++c) {
      if (c % 12 == expected.r1 || c % 12 == expected.r2) continue;
      if (expected.exceptions.contains(c)) continue;
      want.push_back(c);
    }
    const STableResult table = s_table(expected.b, 100, 20000);
    if (table.members != want) {
      return {false, "S_" + std::to_string(expected.b) + " mismatch"};
    }
  }
  return {true, "all eleven displayed sets reproduced exactly"};
}

// --------------------------------------------------------------------------
// 2. Theorem 1.3 base cases through the CLI

std::pair<bool, std::string> criterion_base_cases() {
  const CliResult m0 = run_cli("check 2^36+2");
  if (m0.exit_code != 0) return {false, "check 2^36+2 exited " + std::to_string(m0.exit_code)};
  const CliResult m1 = run_cli("check 2^106+2");
  if (m1.exit_code != 0) return {false, "check 2^106+2 exited " + std::to_string(m1.exit_code)};
  const CliResult m2 = run_cli("--hints " + hints_path() + " check 2^316+2");
  if (m2.exit_code != 0) return {false, "check 2^316+2 exited " + std::to_string(m2.exit_code)};
  return {true, "m_0, m_1 in default budget; m_2 with the shipped hints"};
}

// --------------------------------------------------------------------------
// 3. Theorem 1.3 induction certificates, k = 3..6

std::pair<bool, std::string> criterion_power_two_induction() {
  FactorOptions opts;
  opts.hints = load_hints(hints_path());
  for (unsigned k = 3; k <= 6; ++k) {
    const PowerTwoMember member = power_two_member(k, opts);
    if (!verify(member.certificate, VerifyMode::weak)) {
      return {false, "certificate for k = " + std::to_string(k) + " failed"};
    }
    if (member.certificate.chain.size() != 2 * (k - 2)) {
      return {false, "unexpected chain length at k = " + std::to_string(k)};
    }
  }
  // The chain inequalities behind each induction step, exactly.
  for (unsigned j = 3; j <= 6; ++j) {
    Natural x = 2;
    unsigned long e = 1;
    for (unsigned i = 1; i < j; ++i) e *= 3;
    x = pow2(e);  // 2^(3^(j-1)), thousands of bits by j = 6
    const Natural phi6 = eval(cyclotomic_poly(6), x);
    const Natural phi30 = eval(cyclotomic_poly(30), x);
    const Natural phi42 = eval(cyclotomic_poly(42), x);
    const Natural phi210 = eval(cyclotomic_poly(210), x);
    if (!(phi6 * phi30 * phi42 < 4 * (pow_nat(x, 35) + 1))) {
      return {false, "product bound fails at step " + std::to_string(j)};
    }
    if (!(phi210 < pow_nat(x, 48))) {
      return {false, "Phi_210 bound fails at step " + std::to_string(j)};
    }
    if (!verify_paper_bounds(x).all()) {
      return {false, "inequality battery fails at step " + std::to_string(j)};
    }
  }
  return {true, "k = 3..6 verified; bounds hold exactly at every induction point"};
}

// --------------------------------------------------------------------------
// 4. Theorem 1.4 families

std::pair<bool, std::string> criterion_triples() {
  for (const unsigned d : {4u, 6u}) {
    for (unsigned k = 0; k <= 4; ++k) {
      const PythagoreanTriple t = pythagorean_family(d, k);
      if (t.a * t.a + t.b * t.b != t.c * t.c) {
        return {false, "identity fails at d=" + std::to_string(d) + " k=" + std::to_string(k)};
      }
      Natural g;
      mpz_gcd(g.get_mpz_t(), t.a.get_mpz_t(), t.b.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
      if (g != d) {
        return {false, "gcd fails at d=" + std::to_string(d) + " k=" + std::to_string(k)};
      }
      if (!verify(t.cert_a) || !verify(t.cert_b) || !verify(t.cert_c)) {
        return {false, "certificate fails at d=" + std::to_string(d) + " k=" + std::to_string(k)};
      }
    }
  }
  return {true, "identity, gcd and certificates hold for d in {4,6}, k <= 4"};
}

// --------------------------------------------------------------------------
// 5. Oracle equivalence

std::pair<bool, std::string> criterion_oracle_equivalence() {
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const bool stewart = is_practical(factor(Natural(n))).practical;
    const bool oracle = is_practical_oracle(Natural(n)).practical;
    if (stewart != oracle) {
      return {false, "disagreement at n = " + std::to_string(n)};
    }
  }
  return {true, "zero disagreements for m <= 20000"};
}

// --------------------------------------------------------------------------
// 6. Cyclotomic exactness

std::pair<bool, std::string> criterion_cyclotomic() {
  const std::vector<long long> phi6 = {1, -1, 1};
  const std::vector<long long> phi30 = {1, 1, 0, -1, -1, -1, 0, 1, 1};
  const std::vector<long long> phi42 = {1, 1, 0, -1, -1, 0, 1, 0, -1, -1, 0, 1, 1};
  // x^48 - x^47 + x^46 + x^43 - x^42 + 2x^41 - x^40 + x^39 + x^36 - x^35
  // + x^34 - x^33 + x^32 - x^31 - x^28 - x^26 - x^24 - x^22 - x^20 - x^17
  // + x^16 - x^15 + x^14 - x^13 + x^12 + x^9 - x^8 + 2x^7 - x^6 + x^5
  // + x^2 - x + 1, written here in ascending degree.
  const std::vector<long long> phi210 = {
      1,  -1, 1,  0,  0, 1, -1, 2,  -1, 1,  0,  0,  1,  -1, 1,  -1, 1,
      -1, 0,  0,  -1, 0, -1, 0,  -1, 0,  -1, 0,  -1, 0,  0,  -1, 1,  -1,
      1,  -1, 1,  0,  0, 1, -1, 2,  -1, 1,  0,  0,  1,  -1, 1};
  if (cyclotomic_poly(6).coefficients != phi6) return {false, "Phi_6 coefficients"};
  if (cyclotomic_poly(30).coefficients != phi30) return {false, "Phi_30 coefficients"};
  if (cyclotomic_poly(42).coefficients != phi42) return {false, "Phi_42 coefficients"};
  if (cyclotomic_poly(210).coefficients != phi210) return {false, "Phi_210 coefficients"};

  for (unsigned long n = 1; n <= 300; ++n) {
    for (const int xi : {2, 3, 10}) {
      Integer prod = 1;
      for (unsigned long d = 1; d <= n; ++d) {
        if (n % d == 0) prod *= eval(cyclotomic_poly(d), xi);
      }
      if (prod != pow_nat(xi, n) - 1) {
        return {false, "product identity fails at n = " + std::to_string(n)};
      }
    }
  }

  if (!verify_paper_bounds(512).all()) return {false, "bounds fail at x = 512"};
  gmp_randstate_t state;
  gmp_randinit_default(state);
  gmp_randseed_ui(state, 20260810);
  for (int i = 0; i < 50; ++i) {
    Natural x;
    mpz_urandomb(x.get_mpz_t(), state, 1 + static_cast<unsigned>(i * 20));  // up to 1000 bits
    x += 512;
    if (!verify_paper_bounds(x).all()) {
      gmp_randclear(state);
      return {false, "bounds fail at random x (" + to_string(x) + ")"};
    }
  }
  gmp_randclear(state);
  return {true, "printed expansions, product identity, inequality battery all exact"};
}

// --------------------------------------------------------------------------
// 7. Desk-scale conjecture scans

std::pair<bool, std::string> criterion_scans() {
  if (!goldbach_practical(100'000).empty()) {
    return {false, "goldbach counterexample below 10^5"};
  }
  if (!odd_prime_plus_practical(100'000).empty()) {
    return {false, "prime+practical counterexample below 10^5"};
  }
  const auto twins = twin_practical(100'000);
  if (twins.empty()) return {false, "no twin practical numbers below 10^5"};
  for (const auto m : twins) {
    for (const auto v : {m - 2, m, m + 2}) {
      if (v <= 10'000'000 && !is_practical_oracle(Natural(v)).practical) {
        return {false, "twin element " + std::to_string(v) + " fails the oracle"};
      }
    }
  }
  const auto chain = sun_chain_search(10'000);
  if (chain.empty()) return {false, "no q, q+2, q^2+2 chains below 10^4"};
  for (const auto q : chain) {
    for (const std::uint64_t v : {q, q + 2, q * q + 2}) {
      if (v <= 10'000'000 && !is_practical_oracle(Natural(v)).practical) {
        return {false, "sun element " + std::to_string(v) + " fails the oracle"};
      }
    }
  }
  return {true, "goldbach/oddprime empty; " + std::to_string(twins.size()) + " twins and " +
                    std::to_string(chain.size()) + " sun chains re-verified"};
}

// --------------------------------------------------------------------------
// 8. Density behavior

std::pair<bool, std::string> criterion_density() {
  const DensityPoint p5 = count_practical(100'000);
  const DensityPoint p6 = count_practical(1'000'000);
  const DensityPoint p7 = count_practical(10'000'000);
  const double lo = std::min({p5.ratio, p6.ratio, p7.ratio});
  const double hi = std::max({p5.ratio, p6.ratio, p7.ratio});
  std::ostringstream detail;
  detail << "ratios " << p5.ratio_text << ", " << p6.ratio_text << ", " << p7.ratio_text;
  if (hi > lo * 1.20) return {false, detail.str() + " spread exceeds 20%"};
  return {true, detail.str()};
}

// --------------------------------------------------------------------------
// 9. Determinism

std::pair<bool, std::string> criterion_determinism() {
  const std::string invocations[] = {
      "stable --b 8 --format json",
      "scan --which goldbach --limit 20000 --format json",
      "density --x 1000000 --format json",
      "triple --d 4 --k 1 --format json",
      "--workers 1 stable --b 8 --format json",
      "--workers 4 stable --b 8 --format json",
  };
  std::string reference_stable;
  for (const auto& inv : invocations) {
    const CliResult first = run_cli(inv);
    const CliResult second = run_cli(inv);
    if (first.exit_code != second.exit_code || first.output != second.output) {
      return {false, "outputs differ for: " + inv};
    }
    if (first.output.empty()) return {false, "empty output for: " + inv};
    if (inv.find("stable --b 8") != std::string::npos) {
      if (reference_stable.empty()) {
        reference_stable = first.output;
      } else if (reference_stable != first.output) {
        return {false, "worker count changed stable output"};
      }
    }
  }
  return {true, "byte-identical JSON across repeated runs and worker counts"};
}

}  // namespace

int main() {
  run_criterion(1, "S_b tables for b = 0, 2, ..., 20", criterion_stables);
  run_criterion(2, "power-of-two base cases m_0, m_1, m_2", criterion_base_cases);
  run_criterion(3, "power-of-two induction certificates k = 3..6",
                criterion_power_two_induction);
  run_criterion(4, "practical Pythagorean triples d = 4, 6 with k <= 4", criterion_triples);
  run_criterion(5, "Stewart test equals the subset-sum oracle to 20000",
                criterion_oracle_equivalence);
  run_criterion(6, "cyclotomic expansions, product identity, bounds", criterion_cyclotomic);
  run_criterion(7, "conjecture scans at desk scale", criterion_scans);
  run_criterion(8, "density ratio stability across three decades", criterion_density);
  run_criterion(9, "byte-identical reports", criterion_determinism);

  if (failures != 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
