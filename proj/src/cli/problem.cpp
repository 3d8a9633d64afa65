#include "ampdyn/cli/problem.hpp"

#include <fstream>
#include <sstream>

namespace ampdyn::cli {

const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::Abelian: return "abelian";
    case ProblemKind::Lattice: return "lattice";
    case ProblemKind::Cone: return "cone";
    case ProblemKind::Poly: return "poly";
  }
  return "?";
}

bool ProblemFile::operator==(const ProblemFile& o) const {
  return kind == o.kind && rows == o.rows && translation == o.translation && gram == o.gram &&
         generators == o.generators && big == o.big && invariance == o.invariance && start == o.start &&
         poly == o.poly;
}

mpq_class parse_rational(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty number");
  for (char c : token)
    if (c == '.' || c == 'e' || c == 'E') throw std::invalid_argument("floating-point literal '" + std::string(token) + "'");
  const auto slash = token.find('/');
  auto integer = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("malformed number '" + std::string(s) + "'");
    return mpz_class(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  if (slash == std::string_view::npos) return mpq_class(integer(token));
  const mpz_class num = integer(token.substr(0, slash));
  const mpz_class den = integer(token.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

namespace {

[[noreturn]] void parse_error(std::size_t line, std::size_t field, const std::string& msg) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ", field " + std::to_string(field) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

RatVector numbers(const std::vector<std::string>& tok, std::size_t line) {
  RatVector out;
  for (std::size_t i = 1; i < tok.size(); ++i) {
    try {
      out.push_back(parse_rational(tok[i]));
    } catch (const std::invalid_argument& e) {
      parse_error(line, i + 1, e.what());
    }
  }
  if (out.empty()) parse_error(line, 2, "expected at least one number after '" + tok[0] + "'");
  return out;
}

std::string join(const RatVector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + ampdyn::to_string(v[i]);
  return s;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  ProblemFile p;
  bool have_kind = false, have_poly = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "kind") {
      if (have_kind) parse_error(line_no, 1, "duplicate 'kind'");
      if (tok.size() != 2) parse_error(line_no, 2, "expected one of abelian, lattice, cone, poly");
      if (tok[1] == "abelian") p.kind = ProblemKind::Abelian;
      else if (tok[1] == "lattice") p.kind = ProblemKind::Lattice;
      else if (tok[1] == "cone") p.kind = ProblemKind::Cone;
      else if (tok[1] == "poly") p.kind = ProblemKind::Poly;
      else parse_error(line_no, 2, "unknown kind '" + tok[1] + "'");
      have_kind = true;
      continue;
    }
    if (!have_kind) parse_error(line_no, 1, "the first entry must be 'kind'");
    if (key == "row") {
      p.rows.push_back(numbers(tok, line_no));
    } else if (key == "translation" && p.kind == ProblemKind::Abelian) {
      if (tok.size() != 2 || (tok[1] != "true" && tok[1] != "false")) parse_error(line_no, 2, "expected true or false");
      p.translation = tok[1] == "true";
    } else if (key == "gram" && p.kind == ProblemKind::Lattice) {
      p.gram.push_back(numbers(tok, line_no));
    } else if (key == "gen" && p.kind == ProblemKind::Cone) {
      p.generators.push_back(numbers(tok, line_no));
    } else if (key == "big" && p.kind == ProblemKind::Cone) {
      if (p.big) parse_error(line_no, 1, "duplicate 'big'");
      p.big = numbers(tok, line_no);
    } else if (key == "start" && p.kind == ProblemKind::Cone) {
      if (p.start) parse_error(line_no, 1, "duplicate 'start'");
      p.start = numbers(tok, line_no);
    } else if (key == "invariance" && p.kind == ProblemKind::Cone) {
      if (tok.size() != 2 || (tok[1] != "exact" && tok[1] != "forward"))
        parse_error(line_no, 2, "expected exact or forward");
      p.invariance = tok[1] == "exact" ? conedyn::Invariance::Exact : conedyn::Invariance::Forward;
    } else if (key == "coeffs" && p.kind == ProblemKind::Poly) {
      if (have_poly) parse_error(line_no, 1, "duplicate 'coeffs'");
      const RatVector c = numbers(tok, line_no);
      std::vector<mpz_class> zc;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].get_den() != 1) parse_error(line_no, i + 2, "polynomial coefficients must be integers");
        zc.push_back(c[i].get_num());
      }
      p.poly = exactpoly::IntPoly(zc);
      have_poly = true;
    } else {
      parse_error(line_no, 1, "unexpected '" + key + "' for kind " + to_string(p.kind));
    }
  }
  if (!have_kind) parse_error(line_no + 1, 1, "missing 'kind'");
  auto check_rows = [&](const std::vector<RatVector>& rows, const char* what, std::size_t width) {
    if (rows.empty()) parse_error(line_no + 1, 1, std::string("missing '") + what + "' lines");
    for (const auto& r : rows)
      if (r.size() != width)
        parse_error(line_no + 1, 1, std::string("'") + what + "' entries must have length " + std::to_string(width));
  };
  switch (p.kind) {
    case ProblemKind::Abelian:
      check_rows(p.rows, "row", p.rows.size());
      break;
    case ProblemKind::Lattice:
      check_rows(p.rows, "row", p.rows.size());
      check_rows(p.gram, "gram", p.rows.size());
      break;
    case ProblemKind::Cone: {
      check_rows(p.rows, "row", p.rows.size());
      check_rows(p.generators, "gen", p.rows.size());
      if (p.big && p.big->size() != p.rows.size()) parse_error(line_no + 1, 1, "'big' length differs from the dimension");
      if (p.start && p.start->size() != p.rows.size()) parse_error(line_no + 1, 1, "'start' length differs from the dimension");
      break;
    }
    case ProblemKind::Poly:
      if (!have_poly) parse_error(line_no + 1, 1, "missing 'coeffs'");
      if (p.poly.is_zero()) parse_error(line_no + 1, 1, "zero polynomial");
      break;
  }
  return p;
}

ProblemFile read_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string serialize(const ProblemFile& p) {
  std::string out = std::string("kind ") + to_string(p.kind) + "\n";
  for (const auto& r : p.rows) out += "row " + join(r) + "\n";
  switch (p.kind) {
    case ProblemKind::Abelian:
      out += std::string("translation ") + (p.translation ? "true" : "false") + "\n";
      break;
    case ProblemKind::Lattice:
      for (const auto& r : p.gram) out += "gram " + join(r) + "\n";
      break;
    case ProblemKind::Cone:
      for (const auto& g : p.generators) out += "gen " + join(g) + "\n";
      if (p.big) out += "big " + join(*p.big) + "\n";
      if (p.start) out += "start " + join(*p.start) + "\n";
      out += std::string("invariance ") + (p.invariance == conedyn::Invariance::Exact ? "exact" : "forward") + "\n";
      break;
    case ProblemKind::Poly: {
      RatVector c;
      for (const auto& x : p.poly.coeffs()) c.emplace_back(x);
      out += "coeffs " + join(c) + "\n";
      break;
    }
  }
  return out;
}

IntMatrix integer_matrix(const std::vector<RatVector>& rows, const char* what) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j].get_den() != 1)
        fail(ErrorKind::Parse, std::string(what) + " row " + std::to_string(i + 1) + ", field " + std::to_string(j + 2) +
                                   ": expected an integer");
      m(i, j) = rows[i][j].get_num();
    }
  return m;
}

RatMatrix rational_matrix(const std::vector<RatVector>& rows) { return RatMatrix::from_rows(rows); }

}  // namespace ampdyn::cli
