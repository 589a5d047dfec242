#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lieab/lie_algebra.hpp"

namespace lieab {

/// `expect <key> = <value> # <provenance>` line of an algebra file.
struct Expectation {
  std::string key;    // alpha, beta, or a structure flag
  std::string value;  // integer or true/false
  std::string provenance;

  friend bool operator==(const Expectation&, const Expectation&) = default;
};

struct AlgebraFile {
  LieAlgebra algebra;
  std::vector<Expectation> expectations;
};

/// Parses the line-oriented algebra format and validates the Jacobi identity.
/// Throws ParseError (with line number) or ValidationError.
AlgebraFile parse_algebra(std::string_view text);
AlgebraFile load_algebra(const std::string& path);

/// Canonical text: fixed header order, brackets sorted by (i,j), components
/// by k, reduced fractions. Comments are not preserved.
std::string serialize(const LieAlgebra& g, const std::vector<Expectation>& expectations = {});

/// Vector in bracket right-hand-side syntax, e.g. "1/1*e2 + -1/2*e4".
Vector parse_vector(std::string_view text, std::size_t dim);
std::string format_vector(const Vector& v);

/// One vector per non-comment line. Throws ParseError.
std::vector<Vector> parse_vector_list(std::string_view text, std::size_t dim);

struct FamilyInfo {
  std::string name;
  std::string parameter;  // empty when the family takes none
  std::string description;
};

const std::vector<FamilyInfo>& families();

/// Builds a family member from "name" or "name:param" (e.g. "f:5",
/// "g4:1/2", "twist4:QI"). Throws UnknownFamily.
LieAlgebra family(std::string_view spec);

/// Standard graded filiform algebra [e1, ei] = e(i+1), 2 <= i <= n-1.
LieAlgebra standard_filiform(std::size_t n);

}  // namespace lieab
