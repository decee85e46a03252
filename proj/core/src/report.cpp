#include "practium/report.hpp"

#include <sstream>

namespace practium {

std::string stable_csv(const STableResult& result) {
  std::ostringstream out;
  out << "c,member,witness_n\n";
  for (std::uint64_t c = 1; c <= result.c_max; ++c) {
    const auto it = result.witnesses.find(c);
    if (it != result.witnesses.end()) {
      out << c << ",1," << it->second << '\n';
    } else {
      out << c << ",0,\n";
    }
  }
  return out.str();
}

}  // namespace practium
