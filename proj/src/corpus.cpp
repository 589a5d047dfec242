#include "lieab/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "lieab/closed_forms.hpp"
#include "lieab/errors.hpp"

namespace lieab {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

bool parse_size(std::string_view s, std::size_t& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Term "c*ek", "ek" or "-ek"; k is 1-based.
void parse_term(std::string_view tok, bool negate, std::size_t dim, Vector& v, std::vector<bool>& seen) {
  Scalar c = 1;
  std::string_view basis = tok;
  if (auto star = tok.rfind('*'); star != std::string_view::npos) {
    c = Scalar::parse(tok.substr(0, star));
    basis = tok.substr(star + 1);
  } else if (!basis.empty() && basis.front() == '-') {
    c = -1;
    basis.remove_prefix(1);
  }
  std::size_t k = 0;
  if (basis.size() < 2 || basis.front() != 'e' || !parse_size(basis.substr(1), k))
    throw ValidationError("malformed term '" + std::string(tok) + "'");
  if (k < 1 || k > dim) throw ValidationError("basis index out of range in '" + std::string(tok) + "'");
  if (seen[k - 1]) throw ValidationError("repeated component e" + std::to_string(k));
  seen[k - 1] = true;
  v[k - 1] = negate ? -c : c;
}

}  // namespace

Vector parse_vector(std::string_view text, std::size_t dim) {
  Vector v = zero_vector(dim);
  const auto toks = split_ws(trim(text));
  if (toks.size() == 1 && toks[0] == "0") return v;
  if (toks.empty() || toks.size() % 2 == 0) throw ValidationError("malformed vector '" + std::string(text) + "'");
  std::vector<bool> seen(dim, false);
  parse_term(toks[0], false, dim, v, seen);
  for (std::size_t i = 1; i < toks.size(); i += 2) {
    if (toks[i] != "+" && toks[i] != "-") throw ValidationError("expected '+' or '-' between terms");
    parse_term(toks[i + 1], toks[i] == "-", dim, v, seen);
  }
  return v;
}

std::string format_vector(const Vector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += v[k].to_string() + "*e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

AlgebraFile parse_algebra(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::string name;
  std::size_t dim = 0;
  bool have_dim = false, have_field = false, have_format = false;
  Field field = Field::Q;
  std::map<std::pair<std::size_t, std::size_t>, Vector> brackets;
  std::vector<Expectation> expectations;

  auto fail = [&](const std::string& what) { return ParseError(line_no, what); };
  auto header_done = [&] {
    if (!have_dim || !have_field) throw fail("'dim' and 'field' must precede bracket lines");
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      header_done();
      const auto close = line.find(']');
      const auto comma = line.find(',');
      if (close == std::string_view::npos || comma == std::string_view::npos || comma > close)
        throw fail("malformed bracket");
      std::size_t i = 0, j = 0;
      if (!parse_size(line.substr(1, comma - 1), i) || !parse_size(line.substr(comma + 1, close - comma - 1), j))
        throw fail("malformed bracket indices");
      if (i >= j) throw fail("bracket [i,j] requires i < j");
      if (i < 1 || j > dim) throw fail("bracket index out of range");
      std::string_view rest = trim(line.substr(close + 1));
      if (rest.empty() || rest.front() != '=') throw fail("expected '=' after bracket");
      if (brackets.count({i, j})) throw fail("duplicate bracket [" + std::to_string(i) + "," + std::to_string(j) + "]");
      try {
        brackets[{i, j}] = parse_vector(rest.substr(1), dim);
      } catch (const Error& e) {
        throw fail(e.what());
      }
      continue;
    }

    if (line.rfind("expect", 0) == 0 && line.size() > 6 && (line[6] == ' ' || line[6] == '\t')) {
      Expectation e;
      std::string_view body = line.substr(6);
      if (auto hash = body.find('#'); hash != std::string_view::npos) {
        e.provenance = std::string(trim(body.substr(hash + 1)));
        body = body.substr(0, hash);
      }
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) throw fail("expected 'expect <key> = <value>'");
      e.key = std::string(trim(body.substr(0, eq)));
      e.value = std::string(trim(body.substr(eq + 1)));
      if (e.key.empty() || e.value.empty() || e.key.find(' ') != std::string::npos)
        throw fail("malformed expectation");
      expectations.push_back(std::move(e));
      continue;
    }

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw fail("unrecognized line");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = trim(line.substr(colon + 1));
    if (!brackets.empty()) throw fail("header line after bracket lines");
    if (key == "format") {
      if (value != "1") throw fail("unsupported format version");
      have_format = true;
    } else if (key == "name") {
      name = std::string(value);
    } else if (key == "dim") {
      if (!parse_size(value, dim)) throw fail("malformed dimension");
      have_dim = true;
    } else if (key == "field") {
      try {
        field = parse_field(value);
      } catch (const Error& e) {
        throw fail(e.what());
      }
      have_field = true;
    } else {
      throw fail("unknown header '" + std::string(key) + "'");
    }
  }
  (void)have_format;
  if (!have_dim || !have_field) throw ParseError(line_no, "missing 'dim' or 'field' header");

  AlgebraFile out;
  out.algebra = LieAlgebra(dim, field, name);
  for (const auto& [ij, v] : brackets) {
    try {
      out.algebra.set_bracket(ij.first - 1, ij.second - 1, v);
    } catch (const FieldMismatch& e) {
      throw ValidationError(std::string("bracket [") + std::to_string(ij.first) + "," + std::to_string(ij.second) +
                            "]: " + e.what());
    }
  }
  require_valid(out.algebra);
  out.expectations = std::move(expectations);
  return out;
}

AlgebraFile load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionFailed("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

std::string serialize(const LieAlgebra& g, const std::vector<Expectation>& expectations) {
  std::string out = "format: 1\n";
  out += "name: " + g.name() + "\n";
  out += "dim: " + std::to_string(g.dimension()) + "\n";
  out += std::string("field: ") + to_string(g.field()) + "\n";
  for (std::size_t i = 0; i < g.dimension(); ++i)
    for (std::size_t j = i + 1; j < g.dimension(); ++j) {
      const Vector& v = g.structure(i, j);
      if (is_zero(v)) continue;
      out += "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] = " + format_vector(v) + "\n";
    }
  for (const auto& e : expectations) {
    out += "expect " + e.key + " = " + e.value;
    if (!e.provenance.empty()) out += " # " + e.provenance;
    out += "\n";
  }
  return out;
}

std::vector<Vector> parse_vector_list(std::string_view text, std::size_t dim) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::vector<Vector> out;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(parse_vector(line, dim));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

namespace {

using Bracket = std::pair<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Scalar>>>;

// Builds an algebra from 1-based bracket data.
LieAlgebra from_brackets(std::size_t n, const std::string& name, const std::vector<Bracket>& data,
                         Field field = Field::Q) {
  LieAlgebra g(n, field, name);
  for (const auto& [ij, comps] : data) {
    Vector v = zero_vector(n);
    for (const auto& [k, c] : comps) v[k - 1] += c;
    g.set_bracket(ij.first - 1, ij.second - 1, v);
  }
  require_valid(g);
  return g;
}

std::size_t size_param(std::string_view family, std::string_view param, std::size_t lo, std::size_t hi) {
  std::size_t v = 0;
  if (!parse_size(param, v) || v < lo || v > hi)
    throw UnknownFamily("family '" + std::string(family) + "' needs an integer parameter in [" +
                        std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

const Scalar one = 1;
const Scalar minus_one = -1;

}  // namespace

LieAlgebra standard_filiform(std::size_t n) {
  if (n < 3) throw UnknownFamily("filiform algebras need n >= 3");
  std::vector<Bracket> data;
  for (std::size_t i = 2; i < n; ++i) data.push_back({{1, i}, {{i + 1, one}}});
  return from_brackets(n, "f:" + std::to_string(n), data);
}

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> list = {
      {"abelian", "n", "abelian algebra of dimension n"},
      {"f", "n", "standard graded filiform, [e1,ei] = e(i+1)"},
      {"n3", "", "Heisenberg algebra, [e1,e2] = e3"},
      {"n4", "", "[e1,e2] = e3, [e1,e3] = e4"},
      {"g5_1", "", "[e1,e3] = e5, [e2,e4] = e5"},
      {"g5_2", "", "[e1,e2] = e4, [e1,e3] = e5"},
      {"g5_3", "", "[e1,e2] = e4, [e1,e4] = e5, [e2,e3] = e5"},
      {"g5_4", "", "[e1,e2] = e3, [e1,e3] = e4, [e2,e3] = e5"},
      {"g5_5", "", "[e1,e2] = e3, [e1,e3] = e4, [e1,e4] = e5"},
      {"g5_6", "", "[e1,e2] = e3, [e1,e3] = e4, [e1,e4] = e5, [e2,e3] = e5"},
      {"r2", "", "non-abelian 2-dimensional, [e1,e2] = e2"},
      {"g1", "", "r2 + r2"},
      {"g2", "", "sl2 + C"},
      {"g3", "", "[e1,e2] = e2, [e1,e3] = e3, [e1,e4] = 2e4, [e2,e3] = e4"},
      {"g4", "a", "[e1,e2] = e2, [e1,e3] = e2 + a e3, [e1,e4] = (a+1) e4, [e2,e3] = e4"},
      {"twist4", "Q|QI", "[x1,x2] = x2 - x3, [x1,x3] = x2 + x3, [x1,x4] = 2x4, [x2,x3] = x4"},
      {"cnla7", "", "characteristically nilpotent, [x1,xi] = x(i+1), [x2,x3] = x6 + x7, [x2,x4] = x7"},
      {"sl2", "", "[e1,e2] = e2, [e1,e3] = -e3, [e2,e3] = e1"},
      {"sl2_plus_abelian", "l", "sl2 + C^l"},
      {"sl", "m", "sl_m in the Chevalley basis, 2 <= m <= 4"},
      {"borel", "m", "Borel subalgebra of sl_m, 2 <= m <= 4"},
      {"filiform_q6", "", "3-abelian filiform, f6 plus [e2,e5] = e6, [e3,e4] = -e6"},
  };
  return list;
}

LieAlgebra family(std::string_view spec_in) {
  // "g5,2" is accepted for "g5_2".
  std::string canonical(spec_in);
  if (canonical.rfind("g5,", 0) == 0) canonical[2] = '_';
  const std::string_view spec = canonical;
  std::string_view name = spec, param;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    param = spec.substr(colon + 1);
  }
  const auto it = std::find_if(families().begin(), families().end(), [&](const FamilyInfo& f) { return f.name == name; });
  if (it == families().end()) throw UnknownFamily("unknown family '" + std::string(name) + "'");
  if (it->parameter.empty() && !param.empty())
    throw UnknownFamily("family '" + std::string(name) + "' takes no parameter");
  if (!it->parameter.empty() && param.empty())
    throw UnknownFamily("family '" + std::string(name) + "' needs parameter " + it->parameter);

  const std::string n(name);
  if (name == "abelian") {
    LieAlgebra g = abelian_algebra(size_param(name, param, 0, 64));
    g.set_name(std::string(spec));
    return g;
  }
  if (name == "f") return standard_filiform(size_param(name, param, 3, 64));
  if (name == "n3") return from_brackets(3, n, {{{1, 2}, {{3, one}}}});
  if (name == "n4") return from_brackets(4, n, {{{1, 2}, {{3, one}}}, {{1, 3}, {{4, one}}}});
  if (name == "g5_1") return from_brackets(5, n, {{{1, 3}, {{5, one}}}, {{2, 4}, {{5, one}}}});
  if (name == "g5_2") return from_brackets(5, n, {{{1, 2}, {{4, one}}}, {{1, 3}, {{5, one}}}});
  if (name == "g5_3")
    return from_brackets(5, n, {{{1, 2}, {{4, one}}}, {{1, 4}, {{5, one}}}, {{2, 3}, {{5, one}}}});
  if (name == "g5_4")
    return from_brackets(5, n, {{{1, 2}, {{3, one}}}, {{1, 3}, {{4, one}}}, {{2, 3}, {{5, one}}}});
  if (name == "g5_5")
    return from_brackets(5, n, {{{1, 2}, {{3, one}}}, {{1, 3}, {{4, one}}}, {{1, 4}, {{5, one}}}});
  if (name == "g5_6")
    return from_brackets(5, n, {{{1, 2}, {{3, one}}}, {{1, 3}, {{4, one}}}, {{1, 4}, {{5, one}}}, {{2, 3}, {{5, one}}}});
  if (name == "r2") return from_brackets(2, n, {{{1, 2}, {{2, one}}}});
  if (name == "g1") return from_brackets(4, n, {{{1, 2}, {{2, one}}}, {{3, 4}, {{4, one}}}});
  if (name == "g2" || name == "sl2") {
    const std::size_t dim = name == "g2" ? 4 : 3;
    return from_brackets(dim, n, {{{1, 2}, {{2, one}}}, {{1, 3}, {{3, minus_one}}}, {{2, 3}, {{1, one}}}});
  }
  if (name == "g3")
    return from_brackets(4, n,
                         {{{1, 2}, {{2, one}}}, {{1, 3}, {{3, one}}}, {{1, 4}, {{4, Scalar(2)}}}, {{2, 3}, {{4, one}}}});
  if (name == "g4") {
    Scalar a;
    try {
      a = Scalar::parse(param);
    } catch (const Error&) {
      throw UnknownFamily("family 'g4' needs a scalar parameter");
    }
    return from_brackets(4, std::string(spec),
                         {{{1, 2}, {{2, one}}}, {{1, 3}, {{2, one}, {3, a}}}, {{1, 4}, {{4, a + one}}}, {{2, 3}, {{4, one}}}},
                         a.field());
  }
  if (name == "twist4") {
    Field field;
    try {
      field = parse_field(param);
    } catch (const Error&) {
      throw UnknownFamily("family 'twist4' needs parameter Q or QI");
    }
    LieAlgebra g = from_brackets(4, std::string(spec),
                                 {{{1, 2}, {{2, one}, {3, minus_one}}},
                                  {{1, 3}, {{2, one}, {3, one}}},
                                  {{1, 4}, {{4, Scalar(2)}}},
                                  {{2, 3}, {{4, one}}}},
                                 field);
    g.set_labels({"x1", "x2", "x3", "x4"});
    return g;
  }
  if (name == "cnla7") {
    std::vector<Bracket> data;
    for (std::size_t i = 2; i <= 6; ++i) data.push_back({{1, i}, {{i + 1, one}}});
    data.push_back({{2, 3}, {{6, one}, {7, one}}});
    data.push_back({{2, 4}, {{7, one}}});
    LieAlgebra g = from_brackets(7, n, data);
    g.set_labels({"x1", "x2", "x3", "x4", "x5", "x6", "x7"});
    return g;
  }
  if (name == "sl2_plus_abelian") {
    LieAlgebra g = direct_sum(family("sl2"), abelian_algebra(size_param(name, param, 0, 32)));
    g.set_name(std::string(spec));
    return g;
  }
  if (name == "sl" || name == "borel") {
    const std::size_t m = size_param(name, param, 2, 4);
    LieAlgebra g = name == "sl" ? special_linear(m) : borel_special_linear(m);
    g.set_name(std::string(spec));
    return g;
  }
  if (name == "filiform_q6") {
    std::vector<Bracket> data;
    for (std::size_t i = 2; i <= 5; ++i) data.push_back({{1, i}, {{i + 1, one}}});
    data.push_back({{2, 5}, {{6, one}}});
    data.push_back({{3, 4}, {{6, minus_one}}});
    return from_brackets(6, n, data);
  }
  throw UnknownFamily("unknown family '" + n + "'");
}

}  // namespace lieab
