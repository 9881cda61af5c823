#include "unitri/filtration.hpp"

#include <algorithm>
#include <sstream>

#include "unitri/error.hpp"

namespace unitri {

Exponent BasisIndex::level() const noexcept {
  Exponent best = 0;
  for (Exponent e : alpha) best = std::max(best, e);
  return best;
}

UniDerivation BasisIndex::to_derivation(std::size_t n) const {
  std::vector<Exponent> exps(n, 0);
  std::copy(alpha.begin(), alpha.end(), exps.begin());
  return UniDerivation::monomial(target, Monomial(std::move(exps)));
}

std::string to_string(const BasisIndex& b) {
  std::string out = std::to_string(b.target) + ":";
  for (std::size_t k = 0; k < b.alpha.size(); ++k) out += (k ? "," : "") + std::to_string(b.alpha[k]);
  return out;
}

BasisIndex parse_basis_index(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  const auto colon = s.find(':');
  auto bad = [&]() { return Error(Errc::parse, "malformed basis index '" + std::string(text) + "'"); };
  if (colon == std::string::npos || colon == 0) throw bad();
  BasisIndex b;
  try {
    if (s.substr(0, colon).find_first_not_of("0123456789") != std::string::npos) throw bad();
    b.target = std::stoul(s.substr(0, colon));
    std::string rest = s.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) throw bad();
      b.alpha.push_back(static_cast<Exponent>(std::stoul(item)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
      if (pos == rest.size()) throw bad();
    }
  } catch (const std::out_of_range&) {
    throw bad();
  }
  if (b.target == 0 || b.alpha.size() != b.target - 1)
    throw Error(Errc::parse, "basis index '" + std::string(text) + "' needs exactly j-1 exponents");
  return b;
}

FiltrationBasis::FiltrationBasis(std::size_t n, std::size_t level, std::vector<BasisIndex> elements)
    : n_(n), level_(level), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& b = elements_[i];
    if (b.target == 0 || b.target > n_ || b.alpha.size() != b.target - 1 || b.level() > level_)
      throw Error(Errc::precondition, "basis element " + to_string(b) + " does not belong to N_" +
                                          std::to_string(level_) + " for n = " + std::to_string(n_));
    std::vector<Exponent> key(n_, 0);
    std::copy(b.alpha.begin(), b.alpha.end(), key.begin());
    lookup_.emplace(std::make_pair(b.target, std::move(key)), i);
  }
}

std::size_t FiltrationBasis::position(std::size_t j, const Monomial& m) const {
  auto it = lookup_.find(std::make_pair(j, m.exponents()));
  return it == lookup_.end() ? elements_.size() : it->second;
}

std::size_t FiltrationBasis::position(const BasisIndex& b) const {
  if (b.target == 0 || b.target > n_) return elements_.size();
  std::vector<Exponent> key(n_, 0);
  std::copy(b.alpha.begin(), b.alpha.end(), key.begin());
  auto it = lookup_.find(std::make_pair(b.target, std::move(key)));
  return it == lookup_.end() ? elements_.size() : it->second;
}

FiltrationBasis enumerate_basis(std::size_t n, std::size_t d) {
  if (n < 2) throw Error(Errc::precondition, "u_n needs n >= 2, got n = " + std::to_string(n));
  std::vector<BasisIndex> elements;
  elements.reserve(filtration_dimension(n, d));
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<Monomial> alphas;
    std::vector<Exponent> cur(j - 1, 0);
    for (;;) {
      alphas.emplace_back(cur);
      std::size_t k = 0;
      while (k < cur.size() && cur[k] == d) cur[k++] = 0;
      if (k == cur.size()) break;
      ++cur[k];
    }
    std::sort(alphas.begin(), alphas.end(), GrlexLess{});
    for (auto& a : alphas) elements.push_back(BasisIndex{j, a.exponents()});
  }
  return FiltrationBasis(n, d, std::move(elements));
}

std::size_t filtration_dimension(std::size_t n, std::size_t d) {
  std::size_t total = 0;
  std::size_t term = 1;
  for (std::size_t j = 1; j <= n; ++j) {
    total += term;
    term *= d + 1;
  }
  return total;
}

std::vector<Scalar> coords(const UniDerivation& d, const FiltrationBasis& basis) {
  require_same_ambient(d.ambient(), basis.ambient(), "coords");
  std::vector<Scalar> out(basis.size(), Scalar(0));
  for (std::size_t j = 1; j <= d.ambient(); ++j) {
    for (const auto& [m, c] : d.coefficient(j).terms()) {
      const std::size_t pos = basis.position(j, m);
      if (pos == basis.size()) {
        BasisIndex witness{j, {}};
        for (std::size_t k = 1; k < j; ++k) witness.alpha.push_back(m.exponent(k));
        throw Error(Errc::outside_filtration_level, "outside filtration level: basis element " +
                                                        to_string(witness) + " is not in N_" +
                                                        std::to_string(basis.level()));
      }
      out[pos] = c;
    }
  }
  return out;
}

UniDerivation combine(const FiltrationBasis& basis, const std::vector<Scalar>& coefficients) {
  if (coefficients.size() != basis.size())
    throw Error(Errc::precondition, "coordinate vector has the wrong length");
  const std::size_t n = basis.ambient();
  std::vector<std::vector<Polynomial::Term>> slots(n);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coefficients[i] == 0) continue;
    const auto& b = basis[i];
    std::vector<Exponent> exps(n, 0);
    std::copy(b.alpha.begin(), b.alpha.end(), exps.begin());
    slots[b.target - 1].emplace_back(Monomial(std::move(exps)), coefficients[i]);
  }
  std::vector<Polynomial> coeffs;
  for (auto& s : slots) coeffs.push_back(Polynomial::from_terms(n, std::move(s)));
  return UniDerivation(std::move(coeffs));
}

std::size_t membership_level(const UniDerivation& d) {
  Exponent best = 0;
  for (const auto& f : d.coefficients()) best = std::max(best, f.max_exponent());
  return best;
}

TruncatedLieMap::TruncatedLieMap(FiltrationBasis domain, std::vector<UniDerivation> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (images_.size() != domain_.size())
    throw Error(Errc::precondition, "map lists " + std::to_string(images_.size()) + " images for a basis of size " +
                                        std::to_string(domain_.size()));
  for (const auto& img : images_) require_same_ambient(domain_.ambient(), img.ambient(), "truncated map");
}

TruncatedLieMap TruncatedLieMap::identity(std::size_t n, std::size_t d) {
  FiltrationBasis b = enumerate_basis(n, d);
  std::vector<UniDerivation> images;
  images.reserve(b.size());
  for (const auto& e : b.elements()) images.push_back(e.to_derivation(n));
  return TruncatedLieMap(std::move(b), std::move(images));
}

TruncatedLieMap TruncatedLieMap::zero(std::size_t n, std::size_t d) {
  FiltrationBasis b = enumerate_basis(n, d);
  std::vector<UniDerivation> images(b.size(), UniDerivation(n));
  return TruncatedLieMap(std::move(b), std::move(images));
}

UniDerivation TruncatedLieMap::operator()(const UniDerivation& d) const {
  const std::vector<Scalar> c = coords(d, domain_);
  UniDerivation out(ambient());
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) out += images_[i] * c[i];
  return out;
}

DerivationSpace::Row to_row(const UniDerivation& d) {
  DerivationSpace::Row row;
  for (std::size_t j = 1; j <= d.ambient(); ++j)
    for (const auto& [m, c] : d.coefficient(j).terms()) row.emplace(SlotKey{j, m}, c);
  return row;
}

UniDerivation from_row(std::size_t n, const DerivationSpace::Row& row) {
  std::vector<std::vector<Polynomial::Term>> slots(n);
  for (const auto& [k, c] : row) slots.at(k.slot - 1).emplace_back(k.monomial, c);
  std::vector<Polynomial> coeffs;
  for (auto& s : slots) coeffs.push_back(Polynomial::from_terms(n, std::move(s)));
  return UniDerivation(std::move(coeffs));
}

std::vector<UniDerivation> span_basis(std::size_t n, const std::vector<UniDerivation>& ds) {
  DerivationSpace space;
  for (const auto& d : ds) {
    require_same_ambient(n, d.ambient(), "span");
    if (!d.is_zero()) space.insert(to_row(d));
  }
  std::vector<UniDerivation> out;
  for (const auto& row : space.reduced_basis()) out.push_back(from_row(n, row));
  return out;
}

std::size_t span_rank(const std::vector<UniDerivation>& ds) {
  DerivationSpace space;
  for (const auto& d : ds)
    if (!d.is_zero()) space.insert(to_row(d));
  return space.rank();
}

std::vector<UniDerivation> derived_span(const SpannedSubalgebra& s, std::size_t budget_level) {
  for (std::size_t i = 0; i < s.spanners.size(); ++i) {
    require_same_ambient(s.ambient, s.spanners[i].ambient(), "derived span");
    if (membership_level(s.spanners[i]) > budget_level)
      throw Error(Errc::precondition, "spanner " + std::to_string(i + 1) + " lies outside N_" +
                                          std::to_string(budget_level));
  }
  DerivationSpace space;
  for (std::size_t a = 0; a < s.spanners.size(); ++a)
    for (std::size_t b = a + 1; b < s.spanners.size(); ++b) {
      UniDerivation br = bracket(s.spanners[a], s.spanners[b]);
      if (!br.is_zero()) space.insert(to_row(br));
    }
  std::vector<UniDerivation> out;
  for (const auto& row : space.reduced_basis()) out.push_back(from_row(s.ambient, row));
  return out;
}

std::size_t derived_length(const SpannedSubalgebra& s, std::size_t budget_level) {
  for (std::size_t i = 0; i < s.spanners.size(); ++i)
    if (membership_level(s.spanners[i]) > budget_level)
      throw Error(Errc::precondition, "spanner " + std::to_string(i + 1) + " lies outside N_" +
                                          std::to_string(budget_level));
  std::vector<UniDerivation> current = span_basis(s.ambient, s.spanners);
  std::size_t length = 0;
  while (!current.empty()) {
    ++length;
    std::size_t level = 0;
    for (const auto& d : current) level = std::max(level, membership_level(d));
    current = derived_span(SpannedSubalgebra{s.ambient, std::move(current)}, level);
  }
  return length;
}

std::size_t derived_length_upper_bound(const SpannedSubalgebra& s) {
  std::size_t lowest = s.ambient + 1;
  for (const auto& d : s.spanners) lowest = std::min(lowest, ideal_index(d).value);
  return s.ambient + 1 - lowest;
}

namespace {

void require_preserved(const TruncatedLieMap& m, std::size_t sublevel) {
  if (sublevel > m.level())
    throw Error(Errc::precondition, "sublevel " + std::to_string(sublevel) + " exceeds the domain level " +
                                        std::to_string(m.level()));
  const auto& basis = m.domain();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].level() > sublevel) continue;
    if (membership_level(m.image(i)) > sublevel)
      throw Error(Errc::filtration_not_preserved, "filtration not preserved: image of " + to_string(basis[i]) +
                                                      " leaves N_" + std::to_string(sublevel));
  }
}

}  // namespace

std::size_t rank_of(const TruncatedLieMap& m, std::size_t sublevel) {
  require_preserved(m, sublevel);
  DerivationSpace space;
  const auto& basis = m.domain();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].level() <= sublevel && !m.image(i).is_zero()) space.insert(to_row(m.image(i)));
  return space.rank();
}

std::vector<std::vector<Scalar>> restriction_matrix(const TruncatedLieMap& m, std::size_t sublevel) {
  require_preserved(m, sublevel);
  const FiltrationBasis sub = enumerate_basis(m.ambient(), sublevel);
  std::vector<std::vector<Scalar>> rows;
  const auto& basis = m.domain();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].level() <= sublevel) rows.push_back(coords(m.image(i), sub));
  return rows;
}

std::string format_matrix(const std::vector<std::vector<Scalar>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << to_string(row[k]);
    out << '\n';
  }
  return out.str();
}

}  // namespace unitri
