#pragma once

#include "qflag/partition.hpp"
#include "qflag/polynomial.hpp"
#include "qflag/rational.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qflag {

/// Integer combination of Schur polynomials in a fixed number of variables.
/// Terms whose partition is longer than the variable count are identically
/// zero and are dropped on insertion.
class SchurCombination {
public:
  using Terms = std::map<Partition, Integer>;

  explicit SchurCombination(int nvars = 0) : nvars_(nvars) {}

  static SchurCombination single(const Partition &p, int nvars, const Integer &c = 1) {
    SchurCombination s(nvars);
    s.add(p, c);
    return s;
  }

  int nvars() const { return nvars_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Integer coefficient(const Partition &p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(const Partition &p, const Integer &c) {
    if (c == 0 || p.length() > nvars_)
      return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  SchurCombination &operator+=(const SchurCombination &o) {
    for (const auto &[p, c] : o.terms_)
      add(p, c);
    return *this;
  }

  friend bool operator==(const SchurCombination &a, const SchurCombination &b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty())
      return "0";
    std::string s;
    bool first = true;
    for (const auto &[p, c] : terms_) {
      if (!first)
        s += c < 0 ? " - " : " + ";
      else if (c < 0)
        s += "-";
      first = false;
      Integer a = abs(c);
      if (a != 1)
        s += a.get_str() + " ";
      s += "s" + format_partition(p);
    }
    return s;
  }

private:
  int nvars_;
  Terms terms_;
};

/// e_k * s_lambda in r variables: add a vertical k-strip (at most one box
/// per row) in every possible way.
inline SchurCombination pieri_vertical(const Partition &lambda, int k, int r) {
  if (k < 0 || k > r)
    throw ValidationError("pieri_vertical: need 0 <= k <= r, got k=" + std::to_string(k));
  SchurCombination out(r);
  if (lambda.length() > r)
    return out;
  std::vector<int> rows(r);
  for (int i = 0; i < r; ++i)
    rows[i] = lambda[i];
  auto rec = [&](auto &&self, int row, int left) -> void {
    if (left == 0) {
      out.add(Partition(rows), 1);
      return;
    }
    if (r - row < left)
      return;
    // Row `row` gets a box only if the row above is still strictly longer.
    if (row == 0 || rows[row] + 1 <= rows[row - 1]) {
      ++rows[row];
      self(self, row + 1, left - 1);
      --rows[row];
    }
    self(self, row + 1, left);
  };
  rec(rec, 0, k);
  return out;
}

/// Littlewood-Richardson product s_lambda * s_mu in r variables.
///
/// Enumerates LR fillings of nu/lambda with content mu: labels 1, 2, ... are
/// added as horizontal strips, and a label i placed in row k requires
///   #(i in rows <= k) <= #(i-1 in rows < k),
/// which is exactly the lattice condition on the reverse reading word.
inline SchurCombination lr_multiply(const Partition &lambda, const Partition &mu, int r) {
  if (lambda.length() > r || mu.length() > r)
    throw ValidationError("lr_multiply: partition longer than the number of variables");
  SchurCombination out(r);
  const int labels = mu.length();
  std::vector<int> shape(r);
  for (int i = 0; i < r; ++i)
    shape[i] = lambda[i];
  // count[label][row]
  std::vector<std::vector<int>> count(labels + 1, std::vector<int>(r, 0));

  auto place_label = [&](auto &&place_self, int label) -> void {
    if (label > labels) {
      out.add(Partition(shape), 1);
      return;
    }
    const std::vector<int> before = shape;
    auto strip = [&](auto &&strip_self, int row, int left, int cum_label, int cum_prev) -> void {
      if (left == 0) {
        place_self(place_self, label + 1);
        return;
      }
      if (row >= r)
        return;
      int limit = (row == 0) ? left : std::min(left, before[row - 1] - before[row]);
      for (int a = limit; a >= 0; --a) {
        int cum = cum_label + a;
        if (label >= 2 && cum > cum_prev)
          continue;
        shape[row] += a;
        count[label][row] += a;
        int prev_next = cum_prev + (label >= 2 ? count[label - 1][row] : 0);
        strip_self(strip_self, row + 1, left - a, cum, prev_next);
        shape[row] -= a;
        count[label][row] -= a;
      }
    };
    strip(strip, 0, mu[label - 1], 0, 0);
  };
  place_label(place_label, 1);
  return out;
}

/// Thread-safe memo of LR products, keyed by (lambda, mu, r) with the pair
/// stored in canonical order.
class LrCache {
public:
  const SchurCombination &multiply(const Partition &lambda, const Partition &mu, int r) {
    const bool swap = mu < lambda;
    Key key{swap ? mu : lambda, swap ? lambda : mu, r};
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end())
        return it->second;
    }
    SchurCombination value = lr_multiply(std::get<0>(key), std::get<1>(key), r);
    std::lock_guard lock(mutex_);
    return memo_.try_emplace(std::move(key), std::move(value)).first->second;
  }

private:
  using Key = std::tuple<Partition, Partition, int>;
  std::mutex mutex_;
  std::map<Key, SchurCombination> memo_;
};

/// s_lambda(x_{vars[0]}, ..., x_{vars[r-1]}) as a polynomial in an
/// nvars-variable ring, summing content monomials over semistandard
/// tableaux. Entries equal to r form a horizontal strip lambda/mu, which
/// gives the recursion used here. Zero if lambda is longer than r.
inline Polynomial schur_polynomial(const Partition &lambda, std::size_t nvars,
                                   std::span<const std::size_t> vars) {
  const int r = static_cast<int>(vars.size());
  Polynomial out(nvars);
  if (lambda.length() > r)
    return out;
  if (r == 0) {
    if (lambda.empty())
      out.add_term(Monomial{}, 1);
    return out;
  }
  auto rest = vars.first(vars.size() - 1);
  std::size_t last = vars.back();
  // mu_i ranges over [lambda_{i+1}, lambda_i]; mu has at most r-1 parts.
  std::vector<int> mu(lambda.length(), 0);
  auto rec = [&](auto &&self, int i) -> void {
    if (i == lambda.length()) {
      Partition m(mu);
      if (m.length() > r - 1)
        return;
      int removed = lambda.size() - m.size();
      Monomial shift;
      shift.set(last, removed);
      out.add_scaled(schur_polynomial(m, nvars, rest), 1, shift);
      return;
    }
    for (int v = lambda[i + 1]; v <= lambda[i]; ++v) {
      mu[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// s_lambda(x_1, ..., x_r) as a polynomial in r variables.
inline Polynomial monomial_expansion(const Partition &lambda, int r) {
  std::vector<std::size_t> vars(r);
  for (int i = 0; i < r; ++i)
    vars[i] = i;
  return schur_polynomial(lambda, static_cast<std::size_t>(r), vars);
}

} // namespace qflag
