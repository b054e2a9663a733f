#pragma once

#include <filesystem>
#include <random>
#include <vector>

#include "cxs/diagonal.hpp"
#include "cxs/scenario.hpp"

namespace cxs::test {

inline std::string scenario_path(const std::string& name) {
  return std::string(CXS_SCENARIO_DIR) + "/" + name;
}

inline Scenario load(const std::string& name) { return load_scenario(scenario_path(name)); }

inline std::vector<Scenario> corpus() {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(CXS_SCENARIO_DIR))
    if (e.path().extension() == ".scn") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<Scenario> out;
  for (const auto& p : paths) out.push_back(load_scenario(p.string()));
  return out;
}

struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(gen);
  }
  Rat rat() {
    long num = integer(-6, 6);
    long den = integer(1, 4);
    return Rat(num) / den;
  }
  Rat nonzero_rat() {
    for (;;) {
      Rat r = rat();
      if (r != 0) return r;
    }
  }
  FormalVec vec(const std::vector<std::string>& gens) {
    FormalVec v;
    for (const auto& g : gens) fv_add(v, FormalVec{{g, rat()}});
    return v;
  }
};

}  // namespace cxs::test
