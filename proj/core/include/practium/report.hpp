#pragma once

#include <string>

#include "practium/search.hpp"

namespace practium {

// CSV export of an S_b table: header "c,member,witness_n", one row per c in
// 1..c_max, empty witness column for non-members.
std::string stable_csv(const STableResult& result);

}  // namespace practium
