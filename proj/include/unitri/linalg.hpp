#ifndef UNITRI_LINALG_HPP
#define UNITRI_LINALG_HPP

#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <vector>

#include "unitri/scalar.hpp"

namespace unitri {

/// Incrementally maintained row space of sparse rational vectors.
///
/// Rows are stored fraction-free as primitive integer vectors in echelon form,
/// keyed by their leading (smallest) column. Elimination always pivots on the
/// first nonzero column, so `reduced_basis()` is the unique reduced row echelon
/// basis of the span regardless of insertion order.
template <class Key, class Less = std::less<Key>>
class RowSpace {
 public:
  using IntRow = std::map<Key, Integer, Less>;
  using Row = std::map<Key, Scalar, Less>;

  /// Returns true if the row was independent of the rows seen so far.
  bool insert(const Row& row) {
    IntRow r = reduce(to_integer(row));
    if (r.empty()) return false;
    const Key lead = r.begin()->first;
    pivots_.emplace(lead, std::move(r));
    return true;
  }

  bool contains(const Row& row) const { return reduce(to_integer(row)).empty(); }

  std::size_t rank() const noexcept { return pivots_.size(); }

  std::vector<Row> reduced_basis() const {
    std::map<Key, IntRow, Less> rows = pivots_;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
      const Key& k = it->first;
      const IntRow& piv = it->second;
      for (auto jt = std::next(it); jt != rows.rend(); ++jt) {
        auto hit = jt->second.find(k);
        if (hit != jt->second.end()) eliminate(jt->second, hit->second, piv);
      }
    }
    std::vector<Row> out;
    out.reserve(rows.size());
    for (const auto& [k, r] : rows) {
      const Integer& lead = r.begin()->second;
      Row q;
      for (const auto& [col, v] : r) {
        Scalar s(v, lead);
        s.canonicalize();
        q.emplace(col, std::move(s));
      }
      out.push_back(std::move(q));
    }
    return out;
  }

 private:
  static IntRow to_integer(const Row& row) {
    Integer den = 1;
    for (const auto& [k, v] : row)
      if (v != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    IntRow out;
    for (const auto& [k, v] : row)
      if (v != 0) out.emplace(k, Integer(v.get_num() * (den / v.get_den())));
    make_primitive(out);
    return out;
  }

  static void make_primitive(IntRow& r) {
    if (r.empty()) return;
    Integer g = 0;
    for (const auto& [k, v] : r) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    if (r.begin()->second < 0) g = -g;
    if (g != 1)
      for (auto& [k, v] : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }

  // r ← (p/g) r − (a/g) pivot where a = r[lead(pivot)], p = pivot[lead], g = gcd(a, p).
  static void eliminate(IntRow& r, Integer a, const IntRow& piv) {
    Integer p = piv.begin()->second;
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(p.get_mpz_t(), p.get_mpz_t(), g.get_mpz_t());
    if (p != 1)
      for (auto& [k, v] : r) v *= p;
    for (const auto& [k, v] : piv) {
      auto [it, inserted] = r.try_emplace(k, 0);
      it->second -= a * v;
      if (it->second == 0) r.erase(it);
    }
    make_primitive(r);
  }

  IntRow reduce(IntRow r) const {
    while (!r.empty()) {
      auto piv = pivots_.find(r.begin()->first);
      if (piv == pivots_.end()) break;
      eliminate(r, r.begin()->second, piv->second);
    }
    return r;
  }

  std::map<Key, IntRow, Less> pivots_;
};

}  // namespace unitri

#endif  // UNITRI_LINALG_HPP
