#include "practium/certificate.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "practium/errors.hpp"
#include "practium/expr.hpp"
#include "practium/practical.hpp"

namespace practium {

VerifyReport verify(const PracticalCertificate& cert, VerifyMode mode,
                    const FactorOptions& opts) {
  VerifyReport report;

  if (!is_practical(cert.base).practical) {
    report.failure = VerifyReport::Failure::base_not_practical;
    return report;
  }

  Natural product = cert.base.value;
  for (const auto& mul : cert.chain) product *= mul;
  if (product != cert.target) {
    report.failure = VerifyReport::Failure::chain_product_mismatch;
    return report;
  }

  Natural acc = cert.base.value;
  for (std::size_t i = 0; i < cert.chain.size(); ++i) {
    const Natural& mul = cert.chain[i];
    if (mul < 1) {
      report.failure = VerifyReport::Failure::bound_violated;
      report.step = i;
      return report;
    }
    if (mode == VerifyMode::weak) {
      if (mul > 2 * acc) {
        report.failure = VerifyReport::Failure::bound_violated;
        report.step = i;
        return report;
      }
    } else {
      // sigma(acc) + 1 bound; the base sigma is free, later steps must factor.
      FactorOptions acc_opts = opts;
      acc_opts.hints = applicable_hints(opts.hints, acc);
      const Factorization facc = i == 0 ? cert.base : factor(acc, acc_opts);
      if (!facc.complete()) {
        throw FactoringRequired("strong verification could not factor step " +
                                std::to_string(i) + " accumulator");
      }
      if (mul > sigma(facc) + 1) {
        report.failure = VerifyReport::Failure::bound_violated;
        report.step = i;
        return report;
      }
    }
    acc *= mul;
  }
  report.ok = true;
  return report;
}

PracticalCertificate certify_product(const Factorization& base,
                                     std::vector<Natural> multipliers) {
  if (!base.complete()) throw IncompleteFactorization();
  if (!is_practical(base).practical) {
    throw std::invalid_argument("certify_product: base is not practical");
  }
  std::sort(multipliers.begin(), multipliers.end());
  PracticalCertificate cert;
  cert.base = base;
  cert.target = base.value;
  for (const auto& mul : multipliers) cert.target *= mul;
  cert.chain = std::move(multipliers);
  const VerifyReport report = verify(cert, VerifyMode::weak);
  if (!report.ok) throw NotCertifiable(report.step);
  return cert;
}

std::string to_text(const PracticalCertificate& cert) {
  std::ostringstream out;
  out << "base " << to_string(cert.base.value) << '\n';
  out << "target " << to_string(cert.target) << '\n';
  for (const auto& mul : cert.chain) {
    out << "mul " << to_string(mul) << '\n';
  }
  return out.str();
}

PracticalCertificate parse_certificate(std::string_view text, const FactorOptions& opts) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool have_base = false, have_target = false;
  Natural base_value, target;
  std::vector<Natural> chain;

  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto space = line.find_first_of(" \t", first);
    if (space == std::string::npos) {
      throw ParseError("certificate line " + std::to_string(lineno) + ": missing value");
    }
    const std::string keyword = line.substr(first, space - first);
    const std::string value = line.substr(space + 1);
    if (keyword == "base") {
      if (have_base) throw ParseError("certificate has more than one base line");
      base_value = parse_product(value);
      have_base = true;
    } else if (keyword == "target") {
      if (have_target) throw ParseError("certificate has more than one target line");
      target = parse_product(value);
      have_target = true;
    } else if (keyword == "mul") {
      chain.push_back(parse_product(value));
    } else {
      throw ParseError("certificate line " + std::to_string(lineno) +
                       ": unknown keyword '" + keyword + "'");
    }
  }
  if (!have_base || !have_target) {
    throw ParseError("certificate needs both a base and a target line");
  }

  PracticalCertificate cert;
  FactorOptions base_opts = opts;
  base_opts.hints = applicable_hints(opts.hints, base_value);
  cert.base = factor(base_value, base_opts);
  cert.target = std::move(target);
  cert.chain = std::move(chain);
  return cert;
}

PracticalCertificate load_certificate(const std::string& path, const FactorOptions& opts) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open certificate file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_certificate(buffer.str(), opts);
}

}  // namespace practium
