#include "unitri/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "unitri/error.hpp"
#include "unitri/text.hpp"

namespace unitri {

namespace {

struct Line {
  std::size_t number;
  std::size_t column;  // 1-based column of the first non-blank character
  std::string raw;     // comment stripped, untrimmed
  std::string body;    // trimmed
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const auto b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = raw.find_last_not_of(" \t\r");
    out.push_back(Line{no, b + 1, raw, raw.substr(b, e - b + 1)});
  }
  return out;
}

// Parses `key = value` headers; returns nullopt if the line is not of that form.
std::optional<std::size_t> header_value(const Line& line, std::string_view key) {
  const auto eq = line.body.find('=');
  if (eq == std::string::npos || line.body.find("->") != std::string::npos) return std::nullopt;
  std::string k = line.body.substr(0, eq);
  k.erase(std::remove_if(k.begin(), k.end(), [](char c) { return c == ' ' || c == '\t'; }), k.end());
  if (k != key) return std::nullopt;
  std::string v = line.body.substr(eq + 1);
  v.erase(std::remove_if(v.begin(), v.end(), [](char c) { return c == ' ' || c == '\t'; }), v.end());
  if (v.empty() || v.size() > 9 || v.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a natural number after '" + std::string(key) + " ='", line.number, line.column);
  return std::stoul(v);
}

}  // namespace

TruncatedLieMap parse_endomorphism(std::string_view text) {
  const auto lines = significant_lines(text);
  std::optional<std::size_t> n, level;
  std::size_t first_record = 0;
  for (; first_record < lines.size(); ++first_record) {
    const auto& l = lines[first_record];
    if (auto v = header_value(l, "n")) {
      n = v;
    } else if (auto w = header_value(l, "level")) {
      level = w;
    } else {
      break;
    }
  }
  if (!n || !level) {
    const std::size_t no = first_record < lines.size() ? lines[first_record].number : lines.empty() ? 1 : lines.back().number;
    throw ParseError("endomorphism file must start with 'n = ...' and 'level = ...'", no, 1);
  }
  if (*n < 2) throw ParseError("u_n needs n >= 2", lines.front().number, lines.front().column);

  FiltrationBasis basis = enumerate_basis(*n, *level);
  std::vector<std::optional<UniDerivation>> images(basis.size());
  for (std::size_t i = first_record; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const auto arrow = l.raw.find("->");
    if (arrow == std::string::npos) throw ParseError("expected 'j:alpha -> derivation'", l.number, l.column);
    BasisIndex idx;
    try {
      idx = parse_basis_index(l.raw.substr(0, arrow));
    } catch (const Error& e) {
      throw ParseError(e.what(), l.number, l.column);
    }
    const std::size_t pos = basis.position(idx);
    if (pos == basis.size())
      throw ParseError("basis element " + to_string(idx) + " is not in N_" + std::to_string(*level) +
                           " for n = " + std::to_string(*n),
                       l.number, l.column);
    if (images[pos]) throw ParseError("duplicate record for " + to_string(idx), l.number, l.column);
    images[pos] = parse_derivation(l.raw.substr(arrow + 2), *n, SourcePos{l.number, arrow + 3});
  }
  std::vector<UniDerivation> out;
  out.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i])
      throw ParseError("missing record for basis element " + to_string(basis[i]),
                       lines.empty() ? 1 : lines.back().number, 1);
    out.push_back(std::move(*images[i]));
  }
  return TruncatedLieMap(std::move(basis), std::move(out));
}

std::string format_endomorphism(const TruncatedLieMap& map) {
  std::ostringstream out;
  out << "n = " << map.ambient() << "\n";
  out << "level = " << map.level() << "\n";
  const auto& basis = map.domain();
  for (std::size_t i = 0; i < basis.size(); ++i) out << to_string(basis[i]) << " -> " << to_string(map.image(i)) << "\n";
  return out.str();
}

SpannedSubalgebra parse_spanners(std::string_view text, std::optional<std::size_t> n) {
  const auto lines = significant_lines(text);
  std::optional<std::size_t> header;
  std::size_t needed = 0;
  std::vector<const Line*> records;
  for (const auto& l : lines) {
    if (auto v = header_value(l, "n")) {
      if (!records.empty()) throw ParseError("'n = ...' must precede the spanners", l.number, l.column);
      header = v;
      continue;
    }
    needed = std::max(needed, infer_variable_count(l.raw, SourcePos{l.number, 1}));
    records.push_back(&l);
  }
  if (header && n && *header != *n)
    throw Error(Errc::ambient_mismatch, "spanner file declares n = " + std::to_string(*header) + " but n = " +
                                            std::to_string(*n) + " was requested");
  const std::size_t dim = header ? *header : n ? *n : std::max<std::size_t>(needed, 2);
  if (needed > dim)
    throw Error(Errc::ambient_mismatch,
                "spanner file mentions index " + std::to_string(needed) + " but n = " + std::to_string(dim));
  SpannedSubalgebra s{dim, {}};
  for (const Line* l : records) s.spanners.push_back(parse_derivation(l->raw, dim, SourcePos{l->number, 1}));
  return s;
}

std::string format_spanners(const SpannedSubalgebra& s) {
  std::string out = "n = " + std::to_string(s.ambient) + "\n";
  for (const auto& d : s.spanners) out += to_string(d) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::precondition, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::precondition, "cannot write '" + path + "'");
  out << contents;
  if (!out) throw Error(Errc::precondition, "failed writing '" + path + "'");
}

}  // namespace unitri
