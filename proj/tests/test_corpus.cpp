#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lieab/acceptance.hpp"
#include "lieab/corpus.hpp"
#include "lieab/decision.hpp"
#include "lieab/errors.hpp"
#include "lieab/structure.hpp"

using namespace lieab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> corpus_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(LIEAB_CORPUS_DIR))
    if (e.path().extension() == ".lie") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

bool flag(const StructureReport& r, const std::string& key) {
  if (key == "abelian") return r.is_abelian;
  if (key == "nilpotent") return r.is_nilpotent;
  if (key == "filiform") return r.is_filiform;
  if (key == "semisimple") return r.is_semisimple;
  if (key == "characteristically_nilpotent") return r.is_characteristically_nilpotent;
  FAIL("unknown flag " << key);
  return false;
}

int parse_error_line(std::string_view text) {
  try {
    parse_algebra(text);
  } catch (const ParseError& e) {
    return static_cast<int>(e.line());
  }
  return -1;
}

}  // namespace

TEST_CASE("shipped corpus files round-trip byte for byte") {
  const auto files = corpus_files();
  CHECK(files.size() >= 25);
  for (const auto& p : files) {
    const std::string text = slurp(p);
    const AlgebraFile f = parse_algebra(text);
    CHECK_MESSAGE(serialize(f.algebra, f.expectations) == text, p.string());
    CHECK(parse_algebra(serialize(f.algebra, f.expectations)).algebra == f.algebra);
  }
}

TEST_CASE("shipped corpus expectations hold") {
  DecisionOptions o;
  for (const auto& p : corpus_files()) {
    const AlgebraFile f = load_algebra(p.string());
    const StructureReport s = classify(f.algebra);
    const InvariantReport r = compute_invariants(f.algebra, o);
    for (const Expectation& e : f.expectations) {
      INFO(p.filename().string() << ": " << e.key << " = " << e.value);
      CHECK(!e.provenance.empty());
      if (e.key == "alpha") {
        CHECK(r.alpha == std::stoul(e.value));
      } else if (e.key == "beta") {
        CHECK(r.beta == std::stoul(e.value));
      } else if (e.key == "k_abelian") {
        CHECK(s.k_abelian_index == std::stoul(e.value));
      } else {
        CHECK(flag(s, e.key) == (e.value == "true"));
      }
    }
  }
}

TEST_CASE("every family serializes and reparses") {
  for (const auto& spec : acceptance_corpus()) {
    const LieAlgebra g = family(spec);
    const AlgebraFile f = parse_algebra(serialize(g));
    CHECK_MESSAGE(f.algebra == g, spec);
    CHECK(f.algebra.name() == g.name());
  }
  CHECK(family("g5,3") == family("g5_3"));
  CHECK_THROWS_AS(family("nope"), UnknownFamily);
  CHECK_THROWS_AS(family("f:2"), PreconditionFailed);
  CHECK(families().size() >= 20);
}

TEST_CASE("parser accepts the documented term syntax") {
  const AlgebraFile f = parse_algebra(
      "# comment\n"
      "format: 1\n"
      "name: test\n"
      "dim: 3\n"
      "field: Q\n"
      "\n"
      "[1,2] = e3\n"
      "expect alpha = 2 # derived: by hand\n");
  CHECK(f.algebra == family("n3"));
  REQUIRE(f.expectations.size() == 1);
  CHECK(f.expectations[0] == Expectation{"alpha", "2", "derived: by hand"});

  CHECK(parse_vector("-e1 + 1/2*e3 - 2*e2", 3) == Vector{-1, -2, Scalar::rational(1, 2)});
  CHECK(format_vector(Vector{0, 1, Scalar::rational(-1, 2)}) == "1/1*e2 + -1/2*e3");
  CHECK(format_vector(zero_vector(2)) == "0");
  CHECK(parse_vector_list("e1\n# skip\n\ne2 + e3\n", 3).size() == 2);
}

TEST_CASE("parser errors carry line numbers") {
  const std::string header = "format: 1\nname: x\ndim: 3\nfield: Q\n";
  CHECK(parse_error_line(header + "[2,1] = e3\n") == 5);
  CHECK(parse_error_line(header + "[1,4] = e3\n") == 5);
  CHECK(parse_error_line(header + "[1,2] = e3\n[1,2] = e3\n") == 6);
  CHECK(parse_error_line(header + "[1,2] = e7\n") == 5);
  CHECK(parse_error_line(header + "[1,2] = 1/0*e3\n") == 5);
  CHECK(parse_error_line("format: 2\n") == 1);
  CHECK(parse_error_line("format: 1\nname: x\n[1,2] = e3\n") == 3);
  CHECK_THROWS_AS(parse_algebra(header + "[1,2] = i*e3\n"), Error);
  // Jacobi failures are validation errors, not parse errors.
  CHECK_THROWS_AS(parse_algebra(header + "[1,2] = e3\n[2,3] = e2\n"), ValidationError);
  CHECK_THROWS_AS(load_algebra("/nonexistent/file.lie"), Error);
}
