#include "unitri/automorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "unitri/error.hpp"
#include "unitri/text.hpp"

namespace unitri {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(Errc::invalid_automorphism, msg); }

}  // namespace

TriangularAutomorphism::TriangularAutomorphism(std::vector<Scalar> scales, std::vector<Polynomial> tails)
    : scales_(std::move(scales)), tails_(std::move(tails)) {
  const std::size_t n = scales_.size();
  if (tails_.size() != n) invalid("scale and tail vectors differ in length");
  images_.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const Scalar& c = scales_[j - 1];
    const Polynomial& a = tails_[j - 1];
    require_same_ambient(n, a.ambient(), "automorphism construction");
    if (c == 0) invalid("scale of x" + std::to_string(j) + " is zero");
    if (a.max_support_index() > j - 1)
      invalid("tail of x" + std::to_string(j) + " must lie in K[x1..x" + std::to_string(j - 1) + "]");
    if (a.constant_term() != 0) invalid("tail of x" + std::to_string(j) + " has a nonzero constant term");
    images_.push_back(Polynomial::monomial(Monomial::variable(n, j), c) + a);
  }
}

TriangularAutomorphism TriangularAutomorphism::identity(std::size_t n) {
  return TriangularAutomorphism(std::vector<Scalar>(n, Scalar(1)), std::vector<Polynomial>(n, Polynomial(n)));
}

TriangularAutomorphism TriangularAutomorphism::from_images(std::vector<Polynomial> images) {
  const std::size_t n = images.size();
  std::vector<Scalar> scales;
  std::vector<Polynomial> tails;
  scales.reserve(n);
  tails.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const Polynomial& img = images[j - 1];
    require_same_ambient(n, img.ambient(), "automorphism construction");
    const Monomial xj = Monomial::variable(n, j);
    Scalar c = img.coefficient(xj);
    Polynomial rest = img - Polynomial::monomial(xj, c);
    if (rest.max_support_index() >= j)
      invalid("image of x" + std::to_string(j) + " is not of the form c x" + std::to_string(j) +
              " + a(x1..x" + std::to_string(j - 1) + ")");
    scales.push_back(std::move(c));
    tails.push_back(std::move(rest));
  }
  return TriangularAutomorphism(std::move(scales), std::move(tails));
}

bool TriangularAutomorphism::is_identity() const {
  for (std::size_t j = 0; j < scales_.size(); ++j)
    if (scales_[j] != 1 || !tails_[j].is_zero()) return false;
  return true;
}

bool TriangularAutomorphism::is_torus() const {
  for (const auto& a : tails_)
    if (!a.is_zero()) return false;
  return true;
}

Polynomial apply_to_poly(const TriangularAutomorphism& sigma, const Polynomial& p) {
  require_same_ambient(sigma.ambient(), p.ambient(), "automorphism action");
  return substitute(p, sigma.images());
}

TriangularAutomorphism compose(const TriangularAutomorphism& sigma, const TriangularAutomorphism& tau) {
  require_same_ambient(sigma.ambient(), tau.ambient(), "automorphism composition");
  std::vector<Polynomial> images;
  images.reserve(sigma.ambient());
  for (const auto& t : tau.images()) images.push_back(substitute(t, sigma.images()));
  return TriangularAutomorphism::from_images(std::move(images));
}

TriangularAutomorphism invert(const TriangularAutomorphism& sigma) {
  const std::size_t n = sigma.ambient();
  // Slots k ≥ j still hold x_k; a_j never reads them.
  std::vector<Polynomial> inv;
  inv.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) inv.push_back(Polynomial::variable(n, k));
  std::vector<Scalar> scales;
  std::vector<Polynomial> tails;
  for (std::size_t j = 1; j <= n; ++j) {
    const Scalar c_inv = 1 / sigma.scale(j);
    Polynomial tail = -substitute(sigma.tail(j), inv) * c_inv;
    inv[j - 1] = Polynomial::monomial(Monomial::variable(n, j), c_inv) + tail;
    scales.push_back(c_inv);
    tails.push_back(std::move(tail));
  }
  return TriangularAutomorphism(std::move(scales), std::move(tails));
}

UniDerivation act_on_derivation(const TriangularAutomorphism& sigma, const UniDerivation& d) {
  require_same_ambient(sigma.ambient(), d.ambient(), "automorphism action on a derivation");
  const std::size_t n = d.ambient();
  std::vector<Polynomial> g;
  g.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    Polynomial rhs = substitute(d.coefficient(j), sigma.images());
    const Polynomial& a = sigma.tail(j);
    if (!a.is_zero()) {
      for (std::size_t k = 1; k < j; ++k) {
        if (g[k - 1].is_zero()) continue;
        Polynomial da = partial_derivative(a, k);
        if (!da.is_zero()) rhs -= g[k - 1] * da;
      }
    }
    g.push_back(rhs * (1 / sigma.scale(j)));
  }
  return UniDerivation(std::move(g));
}

std::string to_string(const TriangularAutomorphism& sigma) {
  std::string out;
  const std::size_t n = sigma.ambient();
  for (std::size_t j = 1; j <= n; ++j) {
    if (sigma.scale(j) == 1 && sigma.tail(j).is_zero()) continue;
    const Monomial xj = Monomial::variable(n, j);
    std::string line = "x" + std::to_string(j) + " -> " + to_string(Polynomial::monomial(xj, sigma.scale(j)));
    if (!sigma.tail(j).is_zero()) {
      const std::string t = to_string(sigma.tail(j));
      line += t.front() == '-' ? " - " + t.substr(1) : " + " + t;
    }
    out += line + "\n";
  }
  return out.empty() ? "# identity\n" : out;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

TriangularAutomorphism parse_automorphism(std::string_view text, std::optional<std::size_t> n) {
  struct Line {
    std::size_t var;
    std::string rhs;
    SourcePos pos;
  };
  std::vector<Line> lines;
  std::optional<std::size_t> header_n;
  std::size_t needed = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    const auto hash = raw.find('#');
    const std::string body = trim(std::string_view(raw).substr(0, hash));
    if (body.empty()) continue;
    const std::size_t col = raw.find_first_not_of(" \t") + 1;
    if (body.rfind("n", 0) == 0 && body.find('=') != std::string::npos && body.find("->") == std::string::npos) {
      const std::string value = trim(body.substr(body.find('=') + 1));
      try {
        header_n = std::stoul(value);
      } catch (const std::exception&) {
        throw ParseError("malformed variable-count line", lineno, col);
      }
      continue;
    }
    const auto arrow = body.find("->");
    if (arrow == std::string::npos) throw ParseError("expected 'xK -> image'", lineno, col);
    const std::string lhs = trim(body.substr(0, arrow));
    if (lhs.size() < 2 || lhs[0] != 'x' || lhs.find_first_not_of("0123456789", 1) != std::string::npos)
      throw ParseError("left side must be a variable xK", lineno, col);
    const std::size_t var = std::stoul(lhs.substr(1));
    if (var == 0) throw ParseError("variables are numbered from 1", lineno, col);
    const std::size_t rhs_off = raw.find("->") + 2;
    SourcePos pos{lineno, rhs_off + 1};
    std::string rhs = raw.substr(rhs_off, hash == std::string::npos ? std::string::npos : hash - rhs_off);
    needed = std::max({needed, var, infer_variable_count(rhs, pos)});
    for (const auto& l : lines)
      if (l.var == var) throw ParseError("duplicate line for x" + std::to_string(var), lineno, col);
    lines.push_back({var, std::move(rhs), pos});
  }
  if (header_n && n && *header_n != *n)
    throw Error(Errc::ambient_mismatch, "automorphism declares n = " + std::to_string(*header_n) +
                                            " but n = " + std::to_string(*n) + " was requested");
  const std::size_t dim = header_n ? *header_n : n ? *n : std::max<std::size_t>(needed, 1);
  if (needed > dim)
    throw Error(Errc::ambient_mismatch,
                "automorphism mentions x" + std::to_string(needed) + " but n = " + std::to_string(dim));
  std::vector<Polynomial> images;
  for (std::size_t k = 1; k <= dim; ++k) images.push_back(Polynomial::variable(dim, k));
  for (const auto& l : lines) images[l.var - 1] = parse_polynomial(l.rhs, dim, l.pos);
  try {
    return TriangularAutomorphism::from_images(std::move(images));
  } catch (const Error& e) {
    if (e.code() != Errc::invalid_automorphism) throw;
    for (const auto& l : lines) {
      std::vector<Polynomial> probe;
      for (std::size_t k = 1; k <= dim; ++k)
        probe.push_back(k == l.var ? parse_polynomial(l.rhs, dim, l.pos) : Polynomial::variable(dim, k));
      try {
        (void)TriangularAutomorphism::from_images(std::move(probe));
      } catch (const Error& inner) {
        throw ParseError(inner.what(), l.pos.line, l.pos.column);
      }
    }
    throw;
  }
}

}  // namespace unitri
