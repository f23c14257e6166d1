#include <doctest.h>

#include <sstream>

#include "radialdec/error.hpp"
#include "radialdec/golden.hpp"
#include "radialdec/io.hpp"

using namespace radialdec;

TEST_SUITE("io") {

TEST_CASE("spectral CSV round trip") {
  sphharm::SpectralField f(3);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = 1.0 / (3.0 + double(i)) - 0.1;
  std::stringstream s;
  io::write_spectral_csv(s, f);
  CHECK(s.str().rfind("n,m,coeff\n0,0,", 0) == 0);
  const auto g = io::read_spectral_csv(s);
  REQUIRE(g.max_degree() == 3);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(g[i] == f[i]);
}

TEST_CASE("spectral CSV in any order with gaps") {
  std::istringstream s("n,m,coeff\n2,-1,4.5\n0,0,1\n");
  const auto g = io::read_spectral_csv(s);
  CHECK(g.max_degree() == 2);
  CHECK(g[sphharm::storage_index(2, -1)] == 4.5);
  CHECK(g[0] == 1.0);
  CHECK(g[sphharm::storage_index(1, 1)] == 0.0);
}

TEST_CASE("sample CSV forms") {
  std::istringstream a("0.5\n-1\n2e-3\n");
  CHECK(io::read_samples_csv(a) == std::vector<double>{0.5, -1.0, 2e-3});
  std::istringstream b("node,value\n0,1.5\n1,2.5\n");
  CHECK(io::read_samples_csv(b) == std::vector<double>{1.5, 2.5});
}

TEST_CASE("golden naming and hashing") {
  // Reference value from an independent FNV-1a implementation.
  CHECK(golden::manifold_hash("dimple", 0.4, 3, 590) == "ed00e39f3a8552cb");
  CHECK(golden::file_name("exp-poly", "fountain", 0.1, 194) == "exp-poly_fountain_r0-0.10_n194.json");
  CHECK(golden::manifold_hash("dimple", 0.4, 3, 590) != golden::manifold_hash("dimple", 0.4, 3, 434));
}

}
