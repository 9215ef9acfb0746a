#pragma once

#include "qflag/partition.hpp"
#include "qflag/quiver.hpp"
#include "qflag/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace qflag {

/// (lambda_1, ..., lambda_rho): the product s^1_{lambda_1} ... s^rho_{lambda_rho}.
/// Entry k belongs to vertex k + 1. A basis element when every entry fits its
/// vertex box; otherwise a raw tuple awaiting reduction.
using SchurTuple = std::vector<Partition>;
using BasisElement = SchurTuple;

inline int boxes(const SchurTuple &t) {
  int n = 0;
  for (const auto &p : t)
    n += p.size();
  return n;
}

inline bool is_basis_element(const Quiver &q, const SchurTuple &t) {
  if (static_cast<int>(t.size()) != q.rho())
    return false;
  for (int i = 1; i <= q.rho(); ++i)
    if (!fits_box(t[i - 1], q.box_rows(i), q.box_cols(i)))
      return false;
  return true;
}

/// q_1^{d_1} ... q_rho^{d_rho} times a Schur tuple.
struct QTerm {
  std::vector<int> q;
  SchurTuple tuple;
  friend auto operator<=>(const QTerm &, const QTerm &) = default;
  friend bool operator==(const QTerm &, const QTerm &) = default;
};

inline bool q_is_one(const std::vector<int> &q) {
  for (int d : q)
    if (d != 0)
      return false;
  return true;
}

/// Finite exact-rational combination of keys, with no zero coefficients.
template <typename Key> class LinearCombination {
public:
  using Terms = std::map<Key, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(const Key &k, const Rational &c = 1) { add(k, c); }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Key &k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Key &k, const Rational &c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  LinearCombination &operator+=(const LinearCombination &o) {
    for (const auto &[k, c] : o.terms_)
      add(k, c);
    return *this;
  }
  LinearCombination &operator-=(const LinearCombination &o) {
    for (const auto &[k, c] : o.terms_)
      add(k, -c);
    return *this;
  }
  LinearCombination &operator*=(const Rational &c) {
    if (c == 0)
      terms_.clear();
    for (auto &[k, v] : terms_)
      v *= c;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination &b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination &b) { return a -= b; }
  friend LinearCombination operator*(const Rational &c, LinearCombination a) { return a *= c; }
  friend bool operator==(const LinearCombination &, const LinearCombination &) = default;

private:
  Terms terms_;
};

using CohClass = LinearCombination<SchurTuple>;
using QuantumClass = LinearCombination<QTerm>;

inline SchurTuple empty_tuple(const Quiver &q) { return SchurTuple(q.rho()); }

/// s^i_lambda as a one-term tuple (vertex i is 1-based).
inline SchurTuple single_factor(const Quiver &q, int vertex, const Partition &p) {
  SchurTuple t(q.rho());
  t.at(vertex - 1) = p;
  return t;
}

inline std::vector<int> q_zero(const Quiver &q) { return std::vector<int>(q.rho(), 0); }

inline QuantumClass to_quantum(const Quiver &q, const CohClass &c) {
  QuantumClass out;
  for (const auto &[t, v] : c.terms())
    out.add(QTerm{q_zero(q), t}, v);
  return out;
}

/// Drops every term carrying a positive power of some q_i.
inline CohClass classical_limit(const QuantumClass &c) {
  CohClass out;
  for (const auto &[k, v] : c.terms())
    if (q_is_one(k.q))
      out.add(k.tuple, v);
  return out;
}

/// Classical classes split by complex degree (total number of boxes).
inline std::map<int, CohClass> degree(const CohClass &c) {
  std::map<int, CohClass> out;
  for (const auto &[t, v] : c.terms())
    out[boxes(t)].add(t, v);
  return out;
}

/// Total degree q-degree + boxes of a quantum term.
inline int total_degree(const Quiver &q, const QTerm &t) {
  return fano_degree(q, CurveClass{t.q}) + boxes(t.tuple);
}

} // namespace qflag
