#ifndef COBORD_VERIFY_HPP
#define COBORD_VERIFY_HPP

#include "cobord/expr.hpp"
#include "cobord/fixed_points.hpp"
#include "cobord/sw.hpp"

namespace cobord {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail; // first counterexample or summary data
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckLine> lines;

  bool pass() const {
    for (const auto &l : lines)
      if (!l.pass)
        return false;
    return true;
  }
  void add(std::string name, bool ok, std::string detail = "") {
    lines.push_back({std::move(name), ok, std::move(detail)});
  }
};

struct VerifyOptions {
  int maxDegree = -1;   // default: the model's presentation degree
  int tateMax = -1;     // default: min(maxDegree, 8)
  int eregWindow = 3;   // e-exponent window for the regularity slices
  int nfSamples = 1000; // randomized normal-form inputs
  int gammaSamples = 200;
  int extSamples = 500;
  uint64_t seed = 0x5eed5eedULL;
};

SuiteReport verify_fgl(const Model &m, const VerifyOptions &opt = {});
SuiteReport verify_omega(const Model &m, const VerifyOptions &opt = {});
SuiteReport verify_tate(const Model &m, const VerifyOptions &opt = {});
SuiteReport verify_relations(const Model &m, const VerifyOptions &opt = {});
SuiteReport verify_completeness(const Model &m, const VerifyOptions &opt = {});
SuiteReport verify_extended(const Model &m, const VerifyOptions &opt = {});
SuiteReport verify_sw(const Model &m, const VerifyOptions &opt = {});

std::vector<SuiteReport> verify_all(const Model &m,
                                    const VerifyOptions &opt = {});

// Deterministic pseudo-random homogeneous classes for property checks.
class RandomClasses {
public:
  RandomClasses(const Model &m, uint64_t seed, int maxDegree);
  // nullopt when the degree has no monomials
  EqClass sample(int degree, int terms);
  EqClass sample_up_to(int maxDegree, int terms); // homogeneous, degree varies
  std::mt19937_64 &rng() { return rng_; }

private:
  const Model &m_;
  std::mt19937_64 rng_;
  std::vector<std::vector<Monomial>> byDegree_;
};

} // namespace cobord

#endif
