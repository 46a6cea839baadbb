#include "hcaa/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace hcaa {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

void expect(bool ok, const std::string& what) {
  if (!ok) fail(what);
}

const Json& field(const Json& j, const char* key) {
  expect(j.is_object(), std::string("expected an object with key \"") + key + "\"");
  auto it = j.find(key);
  expect(it != j.end(), std::string("missing key \"") + key + "\"");
  return *it;
}

Index index_from_json(const Json& j, const char* what) {
  expect(j.is_number_integer(), std::string(what) + " must be an integer");
  return j.get<Index>();
}

}  // namespace

Json to_json(const Rat& q) { return to_string(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  expect(j.is_string(), "rational must be a string \"p/q\" or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(e.message());
  }
}

Json to_json(const RatMat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMat matrix_from_json(const Json& j) {
  expect(j.is_array(), "matrix must be an array of rows");
  const Index r = static_cast<Index>(j.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(j.front().size());
  RatMat m(r, c);
  for (Index i = 0; i < r; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    expect(row.is_array() && static_cast<Index>(row.size()) == c, "matrix rows must be arrays of equal length");
    for (Index k = 0; k < c; ++k) m(i, k) = rat_from_json(row[static_cast<size_t>(k)]);
  }
  return m;
}

Json vector_to_json(const RatVec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

RatVec vector_from_json(const Json& j) {
  expect(j.is_array(), "vector must be an array");
  RatVec v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = rat_from_json(j[static_cast<size_t>(i)]);
  return v;
}

Json to_json(const LieAlgebra& l) {
  Json brackets = Json::array();
  for (Index i = 0; i < l.dim(); ++i)
    for (Index j = i + 1; j < l.dim(); ++j) {
      Json coeffs = Json::array();
      for (Index k = 0; k < l.dim(); ++k)
        if (l.c(i, j, k) != 0) coeffs.push_back({{"k", k}, {"c", to_json(l.c(i, j, k))}});
      if (!coeffs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"coeffs", std::move(coeffs)}});
    }
  return {{"dim", l.dim()}, {"brackets", std::move(brackets)}};
}

LieAlgebra algebra_from_json(const Json& j) {
  const Index n = index_from_json(field(j, "dim"), "dim");
  expect(n > 0, "dim must be positive");
  std::vector<RatMat> ad(static_cast<size_t>(n), zeros(n, n));
  std::set<std::pair<Index, Index>> seen;
  const Json& brackets = field(j, "brackets");
  expect(brackets.is_array(), "brackets must be an array");
  for (const Json& b : brackets) {
    const Index i = index_from_json(field(b, "i"), "i"), k0 = index_from_json(field(b, "j"), "j");
    expect(i >= 0 && i < n && k0 >= 0 && k0 < n && i != k0, "bracket indices out of range");
    expect(seen.insert(std::minmax(i, k0)).second, "bracket [e_i, e_j] listed twice");
    const Json& coeffs = field(b, "coeffs");
    expect(coeffs.is_array(), "coeffs must be an array");
    for (const Json& c : coeffs) {
      const Index k = index_from_json(field(c, "k"), "k");
      expect(k >= 0 && k < n, "coefficient index out of range");
      const Rat v = rat_from_json(field(c, "c"));
      ad[static_cast<size_t>(i)](k, k0) += v;
      ad[static_cast<size_t>(k0)](k, i) -= v;
    }
  }
  return LieAlgebra(std::move(ad));
}

Json to_json(const AlmostAbelianSpec& s) {
  return {{"n", s.n},       {"mu", to_json(s.mu)}, {"v0", vector_to_json(s.v0)}, {"X", to_json(s.X)},
          {"Y", to_json(s.Y)}, {"Z", to_json(s.Z)},   {"W", to_json(s.W)}};
}

AlmostAbelianSpec spec_from_json(const Json& j) {
  const Index n = index_from_json(field(j, "n"), "n");
  expect(n >= 1, "n must be at least 1");
  AlmostAbelianSpec s = AlmostAbelianSpec::zero(static_cast<int>(n));
  if (j.contains("mu")) s.mu = rat_from_json(j["mu"]);
  if (j.contains("v0")) s.v0 = vector_from_json(j["v0"]);
  const char* names[] = {"X", "Y", "Z", "W"};
  RatMat* blocks[] = {&s.X, &s.Y, &s.Z, &s.W};
  const bool has_b = j.contains("B");
  for (int a = 0; a < 4; ++a)
    if (j.contains(names[a])) *blocks[a] = matrix_from_json(j[names[a]]);
  if (has_b) {
    const RatMat b = matrix_from_json(j["B"]);
    const Index k = n - 1;
    require(b.rows() == 4 * k && b.cols() == 4 * k, ErrorKind::InvalidSpec, "B must be 4(n-1) square");
    bool any_block = false;
    for (int a = 0; a < 4; ++a) any_block = any_block || j.contains(names[a]);
    if (!any_block)
      for (int a = 0; a < 4; ++a) *blocks[a] = b.block(a * k, 0, k, k);
    s.validate();
    require(s.B() == b, ErrorKind::InvalidSpec, "B does not commute with the quaternionic structure");
  }
  s.validate();
  return s;
}

Json to_json(const HypercomplexTriple& t) {
  return {{"J1", to_json(t.J1)}, {"J2", to_json(t.J2)}, {"J3", to_json(t.J3)}};
}

HypercomplexTriple triple_from_json(const Json& j) {
  return {matrix_from_json(field(j, "J1")), matrix_from_json(field(j, "J2")), matrix_from_json(field(j, "J3"))};
}

SpecialTime time_from_json(const Json& j) {
  try {
    if (j.is_string()) return SpecialTime::parse(j.get<std::string>());
    const Json& kind = field(j, "kind");
    expect(kind.is_string(), "time kind must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "two_pi_over") return SpecialTime::two_pi_over(static_cast<long>(index_from_json(field(j, "m"), "m")));
    if (k == "hyperbolic_log")
      return SpecialTime::hyperbolic_log(static_cast<long>(index_from_json(field(j, "m"), "m")));
    if (k == "rational") return SpecialTime::rational(rat_from_json(field(j, "t")));
    fail("unknown time kind \"" + k + "\"");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    fail(e.message());
  }
}

Json to_json(const SpecialTime& t) {
  switch (t.kind) {
    case SpecialTime::Kind::TwoPiOver: return {{"kind", "two_pi_over"}, {"m", t.m.str()}};
    case SpecialTime::Kind::HyperbolicLog: return {{"kind", "hyperbolic_log"}, {"m", t.m.str()}};
    case SpecialTime::Kind::Rational: break;
  }
  return {{"kind", "rational"}, {"t", to_json(t.t)}};
}

Json to_json(const ThreeForm& c) {
  // Nonzero components on increasing triples.
  Json out = Json::array();
  for (Index i = 0; i < c.dim(); ++i)
    for (Index j = i + 1; j < c.dim(); ++j)
      for (Index k = j + 1; k < c.dim(); ++k)
        if (c(i, j, k) != 0) out.push_back({{"ijk", {i, j, k}}, {"c", to_json(c(i, j, k))}});
  return out;
}

Json to_json(const AbelianizationResult& h) {
  Json torsion = Json::array();
  for (const Int& t : h.torsion) torsion.push_back(t.str());
  return {{"free_rank", h.free_rank}, {"torsion", std::move(torsion)}, {"text", h.str()}};
}

Json to_json(const WitnessCertificate& w) {
  auto polys = [](const std::vector<RatPoly>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(p.str());
    return out;
  };
  Json divisors = Json::array();
  for (const auto& d : w.exp_divisors) divisors.push_back({{"irreducible", d.irreducible.str()}, {"exponent", d.exponent}});
  return {{"conjugate", w.conjugate},     {"exp_elementary_divisors", std::move(divisors)},
          {"expected_invariant_factors", polys(w.expected)}, {"witness_invariant_factors", polys(w.witness)},
          {"char_poly", w.char_poly.str()}, {"det", w.det.str()}};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  expect(static_cast<bool>(in), "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const Error& e) {
    fail(path + ": " + e.message());
  }
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace hcaa
