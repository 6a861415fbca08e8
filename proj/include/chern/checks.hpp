#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chern/catalogue.hpp"

namespace chern::checks {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Every invariant suite: arithmetic axioms, ring laws, lattice duality,
// class-algebra identities on randomized inputs plus all catalogued
// instances, table reproduction, Riemann-Roch, the rigidity scan, the
// conjugation square and the definition-file round trip.
std::vector<CheckResult> run_all(int cases = 120, uint64_t seed = 20260808);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace chern::checks
