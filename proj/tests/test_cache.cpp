#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cobord/cache.hpp"
#include "cobord/model.hpp"
#include "test_util.hpp"

using namespace cobord;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string &name) : path("cobord_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
  void write(const std::string &data) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << data;
  }
  std::string read() const {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
};

} // namespace

TEST_CASE("cache round-trip is byte-identical") {
  FglContext ctx = build_fgl(6);
  build_c_table(ctx);
  TempFile tmp("roundtrip.cache");
  cache_save(ctx, tmp.path);
  std::string first = tmp.read();
  CHECK(first == cache_serialize(ctx));

  FglContext loaded = cache_load(tmp.path);
  CHECK(loaded.N == ctx.N);
  CHECK(cache_serialize(loaded) == first);

  // loaded tables feed the axioms checks unchanged
  CHECK(check_fgl_axioms(loaded, 6).ok());
  CHECK(check_associativity(loaded, 6).ok);
}

TEST_CASE("version and header validation") {
  TempFile tmp("badheader.cache");
  tmp.write("cobordism-cache v0 N=6 window=5\n");
  CHECK_THROWS_AS(cache_load(tmp.path), CacheError);
  tmp.write("not a cache\n");
  CHECK_THROWS_AS(cache_load(tmp.path), CacheError);
  tmp.write("");
  CHECK_THROWS_AS(cache_load(tmp.path), CacheError);
}

TEST_CASE("malformed records are rejected") {
  FglContext ctx = build_fgl(5);
  build_c_table(ctx);
  std::string data = cache_serialize(ctx);

  TempFile tmp("badrecord.cache");
  tmp.write(data + "a 1 2 b7\n"); // missing '='
  CHECK_THROWS_AS(cache_load(tmp.path), CacheError);

  tmp.write(data + "a 1 2 = q9\n"); // unknown variable
  CHECK_THROWS_AS(cache_load(tmp.path), CacheError);

  // an inhomogeneous entry
  tmp.write(data + "a 1 3 = b1\n");
  CHECK_THROWS_AS(cache_load(tmp.path), CacheError);
}

TEST_CASE("a deleted generator record surfaces as a dimension mismatch") {
  // remove both a(1,2) and a(2,1): the file still loads (symmetry holds
  // vacuously) but the degree-2 slice of the coefficient ring collapses
  FglContext ctx = build_fgl(8); // enough for a presentation at N=2..3
  build_c_table(ctx);
  std::string data = cache_serialize(ctx);
  std::istringstream in(data);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("a 1 2 =", 0) == 0 || line.rfind("a 2 1 =", 0) == 0)
      continue;
    out << line << "\n";
  }
  TempFile tmp("corrupt.cache");
  tmp.write(out.str());

  FglContext loaded = cache_load(tmp.path); // lenient: records load as zero
  ModelParams params;
  params.N = 3;
  params.K = 5; // context truncation 8 to match the cached table
  try {
    Model::build_from(params, std::move(loaded));
    FAIL("expected a dimension mismatch");
  } catch (const BuildError &e) {
    std::string msg = e.what();
    CHECK(msg.find("degree 2") != std::string::npos);
  }
}
