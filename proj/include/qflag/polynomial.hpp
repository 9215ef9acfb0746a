#pragma once

#include "qflag/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qflag {

/// Upper bound on the number of variables a Polynomial can carry. Enough for
/// every desk-scale quiver (Chern roots plus quantum parameters).
inline constexpr std::size_t kMaxVariables = 16;

/// Dense exponent vector with byte-sized entries. Comparison is
/// lexicographic on the variable index.
class Monomial {
public:
  Monomial() = default;
  Monomial(std::initializer_list<int> exps) {
    if (exps.size() > kMaxVariables)
      throw ValidationError("monomial has too many variables");
    std::size_t i = 0;
    for (int e : exps)
      set(i++, e);
  }

  int operator[](std::size_t i) const { return exps_[i]; }

  void set(std::size_t i, int e) {
    if (e < 0 || e > 255)
      throw ValidationError("monomial exponent out of range: " + std::to_string(e));
    exps_[i] = static_cast<std::uint8_t>(e);
  }
  void add(std::size_t i, int e) { set(i, exps_[i] + e); }

  int degree() const {
    int d = 0;
    for (auto e : exps_)
      d += e;
    return d;
  }

  Monomial operator*(const Monomial &o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      int e = exps_[i] + o.exps_[i];
      if (e > 255)
        throw ValidationError("monomial exponent overflow");
      r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    return r;
  }

  bool divides(const Monomial &o) const {
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exps_[i] > o.exps_[i])
        return false;
    return true;
  }

  /// Requires divides(o).
  Monomial quotient_of(const Monomial &o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      r.exps_[i] = static_cast<std::uint8_t>(o.exps_[i] - exps_[i]);
    return r;
  }

  const std::array<std::uint8_t, kMaxVariables> &raw() const { return exps_; }

  friend auto operator<=>(const Monomial &, const Monomial &) = default;
  friend bool operator==(const Monomial &, const Monomial &) = default;

private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial &m) const noexcept {
    // FNV-1a over the exponent bytes.
    std::uint64_t h = 1469598103934665603ull;
    for (auto b : m.raw()) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Sparse polynomial with exact rational coefficients in a fixed number of
/// variables. Zero coefficients are never stored.
class Polynomial {
public:
  using Terms = std::unordered_map<Monomial, Rational, MonomialHash>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {
    if (nvars > kMaxVariables)
      throw ValidationError("too many polynomial variables: " + std::to_string(nvars));
  }

  static Polynomial constant(std::size_t nvars, const Rational &c) {
    Polynomial p(nvars);
    p.add_term(Monomial{}, c);
    return p;
  }

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    Polynomial p(nvars);
    Monomial m;
    m.set(index, 1);
    p.add_term(m, 1);
    return p;
  }

  static Polynomial monomial(std::size_t nvars, const Monomial &m, const Rational &c = 1) {
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Terms &terms() const { return terms_; }

  Rational coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial &m, const Rational &c) {
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  /// this += c * m * p
  void add_scaled(const Polynomial &p, const Rational &c, const Monomial &m = Monomial{}) {
    if (c == 0)
      return;
    for (const auto &[pm, pc] : p.terms_)
      add_term(pm * m, pc * c);
  }

  Polynomial &operator+=(const Polynomial &o) {
    for (const auto &[m, c] : o.terms_)
      add_term(m, c);
    return *this;
  }
  Polynomial &operator-=(const Polynomial &o) {
    for (const auto &[m, c] : o.terms_)
      add_term(m, -c);
    return *this;
  }
  Polynomial &operator*=(const Rational &c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto &[m, v] : terms_)
      v *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational &c) { return a *= c; }
  friend Polynomial operator*(const Rational &c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    Polynomial r(std::max(a.nvars_, b.nvars_));
    if (a.is_zero() || b.is_zero())
      return r;
    r.terms_.reserve(a.size() * b.size());
    for (const auto &[ma, ca] : a.terms_)
      for (const auto &[mb, cb] : b.terms_)
        r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

  friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.terms_ == b.terms_; }

  int total_degree() const {
    int d = -1;
    for (const auto &[m, c] : terms_)
      d = std::max(d, m.degree());
    return d;
  }

  /// Renames variable i to perm[i].
  Polynomial permuted(std::span<const std::size_t> perm) const {
    Polynomial r(nvars_);
    for (const auto &[m, c] : terms_) {
      Monomial pm;
      for (std::size_t i = 0; i < nvars_; ++i)
        pm.set(perm[i], m[i]);
      r.add_term(pm, c);
    }
    return r;
  }

  /// Terms sorted by descending monomial (lex on variable index).
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const {
    std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto &x, const auto &y) { return x.first > y.first; });
    return v;
  }

  std::string to_string(const std::function<std::string(std::size_t)> &name) const {
    if (is_zero())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : sorted_terms()) {
      Rational a = abs(c);
      if (first)
        os << (c < 0 ? "-" : "");
      else
        os << (c < 0 ? " - " : " + ");
      first = false;
      bool unit = (m.degree() == 0);
      if (a != 1 || unit)
        os << a.get_str();
      bool need_sep = (a != 1);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0)
          continue;
        if (need_sep)
          os << '*';
        os << name(i);
        if (m[i] > 1)
          os << '^' << m[i];
        need_sep = true;
      }
    }
    return os.str();
  }

  std::string to_string() const {
    return to_string([](std::size_t i) { return "x" + std::to_string(i + 1); });
  }

private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Elementary symmetric polynomial e_k in the given variables of an
/// nvars-variable ring.
inline Polynomial elementary_symmetric(std::size_t nvars, std::span<const std::size_t> vars, int k) {
  Polynomial r(nvars);
  if (k < 0 || static_cast<std::size_t>(k) > vars.size())
    return r;
  std::vector<int> pick(vars.size(), 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  // pick is sorted descending; walk all combinations via prev_permutation.
  do {
    Monomial m;
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (pick[i])
        m.add(vars[i], 1);
    r.add_term(m, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return r;
}

} // namespace qflag
