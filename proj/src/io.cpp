#include "gorkit/io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

namespace gorkit {

namespace {

struct LineReader {
  std::istream& in;
  int line = 0;

  /** Tokens of the next line that is not blank or pure comment; false at EOF. */
  bool next(std::vector<std::string>& toks) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      std::erase(raw, '\r');
      std::istringstream ss(raw);
      toks.assign(std::istream_iterator<std::string>(ss), std::istream_iterator<std::string>());
      if (!toks.empty()) return true;
    }
    return false;
  }

  std::vector<std::string> require(const char* what) {
    std::vector<std::string> toks;
    if (!next(toks)) throw ParseError(line + 1, std::string("unexpected end of file, expected ") + what);
    return toks;
  }

  void require_eof() {
    std::vector<std::string> toks;
    if (next(toks)) throw ParseError(line, "trailing content");
  }
};

Int parse_int(const std::string& tok, int line) {
  bool ok = !tok.empty();
  for (std::size_t i = 0; i < tok.size() && ok; ++i)
    ok = std::isdigit(static_cast<unsigned char>(tok[i])) || (i == 0 && tok[i] == '-' && tok.size() > 1);
  if (!ok) throw ParseError(line, "non-integer token '" + tok + "'");
  return Int(tok, 10);
}

long parse_count(const std::string& tok, int line, const char* what) {
  Int v = parse_int(tok, line);
  if (v < 1 || !v.fits_slong_p()) throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
  return v.get_si();
}

std::vector<Vec> read_rows(LineReader& r, long n, long d) {
  std::vector<Vec> rows;
  for (long i = 0; i < n; ++i) {
    auto toks = r.require("a vertex row");
    if (static_cast<long>(toks.size()) != d)
      throw ParseError(r.line, "expected " + std::to_string(d) + " coordinates, got " +
                                   std::to_string(toks.size()));
    Vec v;
    v.reserve(d);
    for (const auto& t : toks) v.push_back(parse_int(t, r.line));
    rows.push_back(std::move(v));
  }
  return rows;
}

std::pair<long, long> read_header(LineReader& r, const char* second) {
  auto toks = r.require("a header");
  if (toks.size() != 2) throw ParseError(r.line, "malformed header, expected two numbers");
  long d = parse_count(toks[0], r.line, "dimension");
  long n = parse_count(toks[1], r.line, second);
  return {d, n};
}

}  // namespace

LatticePolytope read_polytope(std::istream& in) {
  LineReader r{in};
  auto [d, n] = read_header(r, "vertex count");
  LatticePolytope p = build_polytope(read_rows(r, n, d));
  r.require_eof();
  return p;
}

std::vector<LatticePolytope> read_nef_parts(std::istream& in) {
  LineReader r{in};
  auto [d, nparts] = read_header(r, "part count");
  std::vector<LatticePolytope> parts;
  for (long i = 0; i < nparts; ++i) {
    auto toks = r.require("a part size");
    if (toks.size() != 1) throw ParseError(r.line, "expected a single part size");
    long n = parse_count(toks[0], r.line, "part size");
    parts.push_back(build_polytope(read_rows(r, n, d)));
  }
  r.require_eof();
  return parts;
}

namespace {
template <typename F>
auto with_file(const std::string& path, F f) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return f(in);
}
}  // namespace

LatticePolytope read_polytope_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_polytope(in); });
}

std::vector<LatticePolytope> read_nef_file(const std::string& path) {
  return with_file(path, [](std::istream& in) { return read_nef_parts(in); });
}

namespace {
void write_rows(std::ostream& out, const std::vector<Vec>& rows) {
  for (const auto& v : rows) {
    for (std::size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << v[j];
    out << "\n";
  }
}
}  // namespace

void write_polytope(std::ostream& out, const LatticePolytope& p) {
  out << p.ambient_dim() << " " << p.n_vertices() << "\n";
  write_rows(out, p.vertices());
}

void write_nef_parts(std::ostream& out, const std::vector<LatticePolytope>& parts) {
  if (parts.empty()) throw std::invalid_argument("write_nef_parts: no parts");
  out << parts[0].ambient_dim() << " " << parts.size() << "\n";
  for (const auto& p : parts) {
    out << p.n_vertices() << "\n";
    write_rows(out, p.vertices());
  }
}

nlohmann::json json_int(const Int& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

nlohmann::json json_rat(const Rat& x) { return x.get_str(); }

nlohmann::json json_vec(const Vec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : v) a.push_back(json_int(c));
  return a;
}

nlohmann::json json_vertices(const LatticePolytope& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : p.vertices()) a.push_back(json_vec(v));
  return a;
}

nlohmann::json json_unipoly(const UniPoly& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(json_int(c));
  return nlohmann::json{{"unipoly", a}};
}

nlohmann::json json_laurent2(const LaurentPoly2& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& [key, c] : p.terms())
    a.push_back(nlohmann::json::array({key.first, key.second, json_int(c)}));
  return nlohmann::json{{"laurent2", a}};
}

}  // namespace gorkit
