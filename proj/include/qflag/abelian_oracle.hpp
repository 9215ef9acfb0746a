#pragma once

#include "qflag/classes.hpp"
#include "qflag/linalg.hpp"
#include "qflag/polynomial.hpp"
#include "qflag/quiver.hpp"
#include "qflag/rational.hpp"
#include "qflag/ring_classical.hpp"
#include "qflag/schur.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qflag {

enum class Mode { classical, quantum };

/// Independent check on the rim-hook rings through the abelianization.
///
/// Works in Q[x_ij, q_i] where x_i1..x_ir_i are the Chern roots at vertex i.
/// The toric relations are turned into rewrite rules
///   x_ij^{s_i} -> RHS_ij,
/// obtained by expanding
///   prod_{a into i} prod_k (x_ij - x_{s(a)k})
///     - (-1)^(r_i - 1) q_i prod_{a out of i} prod_k (x_{t(a)k} - x_ij)
/// in powers of x_ij with elementary symmetric coefficients and solving for
/// the leading power (x_01 = 0). The leading terms x_ij^{s_i} are pairwise
/// coprime, so the rules form a Groebner basis and normal forms do not
/// depend on the rewrite order.
class AbelianOracle {
public:
  explicit AbelianOracle(const Quiver &q) : quiver_(q) {
    offsets_.assign(q.rho() + 2, 0);
    for (int i = 1; i <= q.rho(); ++i)
      offsets_[i + 1] = offsets_[i] + q.rank(i);
    nx_ = offsets_[q.rho() + 1];
    nvars_ = nx_ + q.rho();
    if (nvars_ > kMaxVariables)
      throw ValidationError("quiver too large for the toric oracle (" + std::to_string(nvars_) +
                            " variables)");
    top_exponent_.assign(nx_, 0);
    for (int i = 1; i <= q.rho(); ++i)
      for (int j = 1; j <= q.rank(i); ++j)
        top_exponent_[x_index(i, j)] = q.s(i);
    build_rules(Mode::classical);
    if (q.is_fano())
      build_rules(Mode::quantum);
  }

  const Quiver &quiver() const { return quiver_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t nx() const { return nx_; }
  std::size_t x_index(int vertex, int copy) const { return offsets_[vertex] + copy - 1; }
  std::size_t q_index(int vertex) const { return nx_ + vertex - 1; }

  std::string variable_name(std::size_t v) const {
    if (v >= nx_)
      return "q" + std::to_string(v - nx_ + 1);
    int i = 1;
    while (offsets_[i + 1] <= v)
      ++i;
    return "x" + std::to_string(i) + std::to_string(v - offsets_[i] + 1);
  }

  /// RHS of the rule for x_{vertex,copy}^{s_vertex}.
  const Polynomial &rule(Mode mode, int vertex, int copy) const {
    return rules_.at(mode_index(mode)).at(x_index(vertex, copy));
  }

  /// The generator x^{s_i} - RHS as a polynomial.
  Polynomial generator(Mode mode, int vertex, int copy) const {
    Monomial lead;
    lead.set(x_index(vertex, copy), quiver_.s(vertex));
    return Polynomial::monomial(nvars_, lead) - rule(mode, vertex, copy);
  }

  bool is_normal(const Monomial &m) const { return reducible_variable(m) < 0; }

  /// Normal form with a fixed strategy (highest reducible variable first),
  /// memoized per monomial.
  Polynomial normal_form(const Polynomial &p, Mode mode) const {
    require_mode(mode);
    Polynomial out(nvars_);
    for (const auto &[m, c] : p.terms())
      out.add_scaled(normal_form_monomial(m, mode), c);
    return out;
  }

  /// Normal form where every rewrite picks a random reducible term and a
  /// random reducible variable. Used to test order independence.
  template <typename Rng> Polynomial normal_form_random(const Polynomial &p, Mode mode, Rng &rng) const {
    require_mode(mode);
    Polynomial work = p, out(nvars_);
    std::vector<std::size_t> candidates;
    while (!work.is_zero()) {
      auto it = work.terms().begin();
      std::advance(it, static_cast<long>(rng() % std::min<std::size_t>(work.size(), 16)));
      Monomial m = it->first;
      Rational c = it->second;
      work.add_term(m, -c);
      candidates.clear();
      for (std::size_t v = 0; v < nx_; ++v)
        if (m[v] >= top_exponent_[v])
          candidates.push_back(v);
      if (candidates.empty()) {
        out.add_term(m, c);
        continue;
      }
      std::size_t v = candidates[rng() % candidates.size()];
      Monomial rest = m;
      rest.set(v, m[v] - top_exponent_[v]);
      work.add_scaled(rules_[mode_index(mode)][v], c, rest);
    }
    return out;
  }

  /// prod_i s_{lambda_i}(x_i1, ..., x_ir_i).
  Polynomial lift(const SchurTuple &t) const {
    Polynomial out = Polynomial::constant(nvars_, 1);
    for (int i = 1; i <= quiver_.rho(); ++i)
      if (!t.at(i - 1).empty())
        out = out * lift_factor(i, t[i - 1]);
    return out;
  }

  Polynomial lift(const CohClass &c) const {
    Polynomial out(nvars_);
    for (const auto &[t, v] : c.terms())
      out.add_scaled(lift(t), v);
    return out;
  }

  Polynomial lift(const QuantumClass &c) const {
    Polynomial out(nvars_);
    for (const auto &[k, v] : c.terms()) {
      Monomial qm;
      for (int i = 1; i <= quiver_.rho(); ++i)
        if (!k.q.empty())
          qm.set(q_index(i), k.q.at(i - 1));
      out.add_scaled(lift(k.tuple), v, qm);
    }
    return out;
  }

  /// prod_i prod_{j<k} (x_ij - x_ik), without normalizing constant.
  Polynomial omega() const {
    Polynomial out = Polynomial::constant(nvars_, 1);
    for (int i = 1; i <= quiver_.rho(); ++i)
      for (int j = 1; j <= quiver_.rank(i); ++j)
        for (int k = j + 1; k <= quiver_.rank(i); ++k)
          out = out * (Polynomial::variable(nvars_, x_index(i, j)) - Polynomial::variable(nvars_, x_index(i, k)));
    return out;
  }

  /// True iff lift(claimed) * omega and lift(a) * lift(b) * omega have the
  /// same normal form.
  bool verify_product(const QuantumClass &a, const QuantumClass &b, const QuantumClass &claimed, Mode mode) const {
    for (const auto *c : {&a, &b, &claimed})
      for (const auto &[k, v] : c->terms())
        if (static_cast<int>(k.tuple.size()) != quiver_.rho())
          throw ValidationError("class does not belong to this quiver");
    const Polynomial w = omega();
    Polynomial lhs = normal_form(lift(claimed) * w, mode);
    Polynomial rhs = normal_form(normal_form(lift(a) * w, mode) * lift(b), mode);
    return lhs == rhs;
  }

  bool verify_product(const CohClass &a, const CohClass &b, const CohClass &claimed) const {
    return verify_product(to_quantum(quiver_, a), to_quantum(quiver_, b), to_quantum(quiver_, claimed),
                          Mode::classical);
  }

  /// Coefficient of prod x_ij^{s_i - 1} in the classical normal form, with
  /// the top monomial integrating to 1.
  Rational toric_integrate(const Polynomial &p) const {
    Monomial top;
    for (std::size_t v = 0; v < nx_; ++v)
      top.set(v, top_exponent_[v] - 1);
    return normal_form(p, Mode::classical).coefficient(top);
  }

  /// Integral over the quiver flag variety:
  ///   (-1)^{|R+|} / |W| * integral over the toric variety of lift * omega^2.
  Rational martin_integrate(const CohClass &c) const {
    long positive_roots = 0;
    Integer weyl = 1;
    for (int i = 1; i <= quiver_.rho(); ++i) {
      long r = quiver_.rank(i);
      positive_roots += r * (r - 1) / 2;
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), r);
      weyl *= f;
    }
    const Polynomial w = omega();
    Polynomial w2 = normal_form(w * w, Mode::classical);
    Rational integral = toric_integrate(lift(c) * w2);
    return Rational(sign_of_power(positive_roots)) * integral / Rational(weyl);
  }

private:
  static std::size_t mode_index(Mode m) { return m == Mode::classical ? 0 : 1; }

  void require_mode(Mode mode) const {
    if (rules_[mode_index(mode)].empty())
      throw ValidationError("quantum rewriting requires a Fano quiver");
  }

  /// Highest x-variable whose exponent reaches its rule's leading power.
  int reducible_variable(const Monomial &m) const {
    for (std::size_t v = nx_; v-- > 0;)
      if (m[v] >= top_exponent_[v])
        return static_cast<int>(v);
    return -1;
  }

  const Polynomial &lift_factor(int vertex, const Partition &p) const {
    auto key = std::make_pair(vertex, p);
    std::lock_guard lock(lift_mutex_);
    auto it = lift_cache_.find(key);
    if (it != lift_cache_.end())
      return it->second;
    std::vector<std::size_t> vars;
    for (int j = 1; j <= quiver_.rank(vertex); ++j)
      vars.push_back(x_index(vertex, j));
    return lift_cache_.emplace(key, schur_polynomial(p, nvars_, vars)).first->second;
  }

  Polynomial normal_form_monomial(const Monomial &m, Mode mode) const {
    int v = reducible_variable(m);
    if (v < 0)
      return Polynomial::monomial(nvars_, m);
    auto &cache = nf_cache_[mode_index(mode)];
    {
      std::lock_guard lock(nf_mutex_);
      auto it = cache.find(m);
      if (it != cache.end())
        return it->second;
    }
    Monomial rest = m;
    rest.set(v, m[v] - top_exponent_[v]);
    Polynomial out(nvars_);
    for (const auto &[t, c] : rules_[mode_index(mode)][v].terms())
      out.add_scaled(normal_form_monomial(rest * t, mode), c);
    std::lock_guard lock(nf_mutex_);
    cache.emplace(m, out);
    return out;
  }

  /// e_k in the Chern roots of a vertex; zero for k > 0 at the source.
  Polynomial elementary(int vertex, int k) const {
    if (k == 0)
      return Polynomial::constant(nvars_, 1);
    if (vertex == 0)
      return Polynomial(nvars_);
    std::vector<std::size_t> vars;
    for (int j = 1; j <= quiver_.rank(vertex); ++j)
      vars.push_back(x_index(vertex, j));
    return elementary_symmetric(nvars_, vars, k);
  }

  /// sum over (k_a) with sum k of prod_a e_{k_a}(x_{endpoint(a)}).
  Polynomial composition_sum(const std::vector<int> &endpoints, int k) const {
    Polynomial out(nvars_);
    std::vector<int> ks(endpoints.size(), 0);
    auto rec = [&](auto &&self, std::size_t a, int left, const Polynomial &acc) -> void {
      if (a == endpoints.size()) {
        if (left == 0)
          out += acc;
        return;
      }
      int bound = endpoints[a] == 0 ? 1 : quiver_.rank(endpoints[a]);
      for (int x = 0; x <= std::min(bound, left); ++x) {
        Polynomial e = elementary(endpoints[a], x);
        if (e.is_zero())
          continue;
        self(self, a + 1, left - x, acc * e);
      }
    };
    rec(rec, 0, k, Polynomial::constant(nvars_, 1));
    return out;
  }

  void build_rules(Mode mode) {
    auto &rules = rules_[mode_index(mode)];
    rules.assign(nx_, Polynomial(nvars_));
    for (int i = 1; i <= quiver_.rho(); ++i) {
      const int s = quiver_.s(i), s_out = quiver_.s_out(i);
      const auto sources = quiver_.arrow_sources_into(i);
      const auto targets = quiver_.arrow_targets_from(i);
      std::vector<Polynomial> in_sums, out_sums;
      for (int k = 0; k <= s; ++k)
        in_sums.push_back(composition_sum(sources, k));
      if (mode == Mode::quantum)
        for (int k = 0; k <= s_out; ++k)
          out_sums.push_back(composition_sum(targets, k));
      for (int j = 1; j <= quiver_.rank(i); ++j) {
        const std::size_t v = x_index(i, j);
        Polynomial rhs(nvars_);
        for (int k = 1; k <= s; ++k) {
          Monomial xp;
          xp.set(v, s - k);
          rhs.add_scaled(in_sums[k], -sign_of_power(k), xp);
        }
        if (mode == Mode::quantum) {
          Monomial qi;
          qi.set(q_index(i), 1);
          const int outer = sign_of_power(quiver_.rank(i) - 1);
          for (int k = 0; k <= s_out; ++k) {
            Monomial xp = qi;
            xp.set(v, s_out - k);
            rhs.add_scaled(out_sums[k], outer * sign_of_power(s_out - k), xp);
          }
        }
        rules[v] = std::move(rhs);
      }
    }
  }

  Quiver quiver_;
  std::vector<std::size_t> offsets_;
  std::size_t nx_ = 0;
  std::size_t nvars_ = 0;
  std::vector<int> top_exponent_;
  std::array<std::vector<Polynomial>, 2> rules_;

  mutable std::mutex nf_mutex_;
  mutable std::unordered_map<Monomial, Polynomial, MonomialHash> nf_cache_[2];
  mutable std::mutex lift_mutex_;
  mutable std::map<std::pair<int, Partition>, Polynomial> lift_cache_;
};

/// M[a][b] = integral of a * b over the quiver flag variety, for basis
/// elements a, b in basis_enumerate order.
inline Matrix pairing_matrix(const ClassicalRing &ring, const AbelianOracle &oracle) {
  const auto basis = ring.basis();
  Matrix m(basis.size(), std::vector<Rational>(basis.size()));
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b) {
      Rational v = oracle.martin_integrate(ring.multiply(basis[a], basis[b]));
      m[a][b] = v;
      m[b][a] = v;
    }
  return m;
}

} // namespace qflag
