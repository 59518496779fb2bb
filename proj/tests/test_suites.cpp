#include <doctest.h>

#include <set>

#include "cobord/verify.hpp"
#include "test_util.hpp"

using namespace cobord;
using cobord::testutil::model;

// Two checks fail by necessity and are pinned as such: the defining identity
// F*(1/F) = 1 forces the interior negative reciprocal entries to be nonzero
// (first witness c(2,-1) = c(1,0)), so the vanishing claim for them cannot
// hold, and consequently c(3,0) differs from the projective-space class by
// the square of c(1,0). Everything else must pass.
static const std::set<std::string> expected_fail = {
    "c(i,-i-1)=1 and other negative entries vanish",
    "class restrictions match projective-space numbers",
};

TEST_CASE("verification suites on the shared model") {
  VerifyOptions opt;
  opt.nfSamples = 60;
  opt.gammaSamples = 40;
  opt.extSamples = 60;
  for (const SuiteReport &rep : verify_all(model(), opt)) {
    for (const auto &line : rep.lines) {
      INFO("suite ", rep.suite, ": ", line.name, " -- ", line.detail);
      if (expected_fail.count(line.name))
        CHECK(!line.pass);
      else
        CHECK(line.pass);
    }
  }
}
