#pragma once

#include "qflag/classes.hpp"
#include "qflag/partition.hpp"
#include "qflag/quiver.hpp"
#include "qflag/schur.hpp"

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace qflag::detail {

/// One summand of a rim-hook rewrite of s^i_lambda: coefficient, the new
/// partition at vertex i, whether q_i is picked up, and the elementary
/// symmetric factors e_k to multiply into other vertices.
struct Emission {
  int sign = 1;
  Partition partition;
  bool quantum = false;
  std::vector<std::pair<int, int>> elementary; // (vertex, k), k >= 1
};

/// Rewrites raw Schur tuples into the basis of boxed tuples using the
/// classical rim-hook rule and, in quantum mode, the quantum rim-hook rule.
class RimHookReducer {
public:
  RimHookReducer(const Quiver &q, bool quantum) : quiver_(q), quantum_(quantum) {}

  const Quiver &quiver() const { return quiver_; }
  bool quantum() const { return quantum_; }

  /// The expansion of s^i_lambda for a too-wide lambda with length <= r_i.
  const std::vector<Emission> &rule(int i, const Partition &lambda) const {
    std::pair<int, Partition> key{i, lambda};
    {
      std::lock_guard lock(mutex_);
      auto it = rules_.find(key);
      if (it != rules_.end())
        return it->second;
    }
    auto value = build_rule(i, lambda);
    std::lock_guard lock(mutex_);
    return rules_.try_emplace(std::move(key), std::move(value)).first->second;
  }

  /// Normal form of an arbitrary combination of raw terms.
  QuantumClass reduce(const QuantumClass &raw) const {
    std::map<QTerm, Rational, MeasureOrder> work;
    for (const auto &[k, c] : raw.terms()) {
      check_tuple(k.tuple);
      QTerm t = k;
      if (t.q.empty())
        t.q.assign(quiver_.rho(), 0);
      if (static_cast<int>(t.q.size()) != quiver_.rho())
        throw ValidationError("quantum monomial has the wrong number of parameters");
      if (!quantum_ && !q_is_one(t.q))
        throw ValidationError("classical reduction of a term carrying quantum parameters");
      // s^i_mu vanishes when mu is longer than r_i.
      bool vanishes = false;
      for (int i = 1; i <= quiver_.rho(); ++i)
        vanishes = vanishes || t.tuple[i - 1].length() > quiver_.rank(i);
      if (!vanishes)
        accumulate(work, t, c);
    }

    QuantumClass result;
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      const QTerm &term = node.key();
      const Rational &coef = node.mapped();
      int vertex = too_wide_vertex(term.tuple);
      if (vertex == 0) {
        result.add(term, coef);
        continue;
      }
      for (const auto &e : rule(vertex, term.tuple[vertex - 1]))
        emit(work, term, coef, vertex, e);
    }
    return result;
  }

  /// Product of two classes: LR products vertex by vertex, then reduction.
  QuantumClass multiply(const QuantumClass &a, const QuantumClass &b) const {
    QuantumClass raw;
    for (const auto &[ka, ca] : a.terms())
      for (const auto &[kb, cb] : b.terms()) {
        check_tuple(ka.tuple);
        check_tuple(kb.tuple);
        std::vector<int> q(quiver_.rho());
        for (int i = 0; i < quiver_.rho(); ++i)
          q[i] = ka.q.at(i) + kb.q.at(i);
        // Cartesian product of per-vertex LR expansions.
        std::vector<std::pair<SchurTuple, Integer>> partial{{SchurTuple(quiver_.rho()), 1}};
        for (int i = 1; i <= quiver_.rho() && !partial.empty(); ++i) {
          const auto &lr = lr_.multiply(ka.tuple[i - 1], kb.tuple[i - 1], quiver_.rank(i));
          std::vector<std::pair<SchurTuple, Integer>> next;
          for (const auto &[t, c] : partial)
            for (const auto &[p, m] : lr.terms()) {
              auto nt = t;
              nt[i - 1] = p;
              next.emplace_back(std::move(nt), c * m);
            }
          partial = std::move(next);
        }
        for (const auto &[t, m] : partial)
          raw.add(QTerm{q, t}, ca * cb * Rational(m));
      }
    return reduce(raw);
  }

  void check_tuple(const SchurTuple &t) const {
    if (static_cast<int>(t.size()) != quiver_.rho())
      throw ValidationError("class has " + std::to_string(t.size()) + " vertex slots, quiver has " +
                            std::to_string(quiver_.rho()));
  }

private:
  /// Orders terms by decreasing (total boxes, boxes at vertex rho, ...,
  /// boxes at vertex 1). Every rewrite step strictly lowers this measure, so
  /// popping the largest term first means its coefficient is final.
  struct MeasureOrder {
    bool operator()(const QTerm &a, const QTerm &b) const {
      int ta = boxes(a.tuple), tb = boxes(b.tuple);
      if (ta != tb)
        return ta > tb;
      for (std::size_t i = a.tuple.size(); i-- > 0;) {
        int sa = a.tuple[i].size(), sb = b.tuple[i].size();
        if (sa != sb)
          return sa > sb;
      }
      return a < b;
    }
  };

  static void accumulate(std::map<QTerm, Rational, MeasureOrder> &work, const QTerm &k, const Rational &c) {
    if (c == 0)
      return;
    auto [it, inserted] = work.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        work.erase(it);
    }
  }

  /// Highest vertex holding a partition wider than its box, or 0.
  int too_wide_vertex(const SchurTuple &t) const {
    for (int i = quiver_.rho(); i >= 1; --i)
      if (t[i - 1].width() > quiver_.box_cols(i))
        return i;
    return 0;
  }

  void emit(std::map<QTerm, Rational, MeasureOrder> &work, const QTerm &term, const Rational &coef,
            int vertex, const Emission &e) const {
    QTerm base = term;
    base.tuple[vertex - 1] = e.partition;
    if (e.quantum)
      base.q[vertex - 1] += 1;
    std::vector<std::pair<SchurTuple, Integer>> partial{{base.tuple, 1}};
    for (const auto &[v, k] : e.elementary) {
      std::vector<std::pair<SchurTuple, Integer>> next;
      for (const auto &[t, c] : partial) {
        const SchurCombination added = pieri_vertical(t[v - 1], k, quiver_.rank(v));
        for (const auto &[p, m] : added.terms()) {
          auto nt = t;
          nt[v - 1] = p;
          next.emplace_back(std::move(nt), c * m);
        }
      }
      partial = std::move(next);
    }
    for (auto &[t, m] : partial)
      accumulate(work, QTerm{base.q, std::move(t)}, coef * Rational(m * e.sign));
  }

  /// Every vector (k_a) with 0 <= k_a <= bound[a] and sum k, passed to f.
  template <typename F>
  static void compositions(const std::vector<int> &bound, int k, F &&f) {
    std::vector<int> parts(bound.size(), 0);
    auto rec = [&](auto &&self, std::size_t a, int left) -> void {
      if (a == bound.size()) {
        if (left == 0)
          f(parts);
        return;
      }
      for (int x = 0; x <= std::min(bound[a], left); ++x) {
        parts[a] = x;
        self(self, a + 1, left - x);
      }
      parts[a] = 0;
    };
    rec(rec, 0, k);
  }

  /// One e-factor per arrow with k_a > 0, placed at the arrow's other end.
  static std::vector<std::pair<int, int>> factors(const std::vector<int> &endpoints, const std::vector<int> &ks) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t a = 0; a < ks.size(); ++a)
      if (ks[a] > 0)
        out.emplace_back(endpoints[a], ks[a]);
    return out;
  }

  std::vector<Emission> build_rule(int i, const Partition &lambda) const {
    std::vector<Emission> out;
    const int s = quiver_.s(i);

    // Classical part: arrows into i; s^0_mu vanishes for nonempty mu.
    std::vector<int> sources = quiver_.arrow_sources_into(i);
    std::vector<int> bound;
    for (int src : sources)
      bound.push_back(src == 0 ? 0 : quiver_.rank(src));
    for (int k = 1; k <= s; ++k) {
      SignedPartition hr = remove_rim_hook(add_first_row(lambda, s - k), s);
      if (hr.is_zero())
        continue;
      int sign = sign_of_power(k + 1) * hr.sign();
      compositions(bound, k, [&](const std::vector<int> &ks) {
        out.push_back({sign, hr.partition(), false, factors(sources, ks)});
      });
    }

    if (!quantum_)
      return out;

    // Quantum part: arrows out of i, weighted by (-1)^(r_i - 1) q_i.
    const int s_out = quiver_.s_out(i);
    std::vector<int> targets = quiver_.arrow_targets_from(i);
    std::vector<int> tbound;
    for (int t : targets)
      tbound.push_back(quiver_.rank(t));
    for (int k = 0; k <= s_out; ++k) {
      SignedPartition hr = remove_rim_hook(add_first_row(lambda, s_out - k), s);
      if (hr.is_zero())
        continue;
      int sign = sign_of_power(quiver_.rank(i) - 1) * sign_of_power(s_out - k) * hr.sign();
      compositions(tbound, k, [&](const std::vector<int> &ks) {
        out.push_back({sign, hr.partition(), true, factors(targets, ks)});
      });
    }
    return out;
  }

  Quiver quiver_;
  bool quantum_;
  mutable LrCache lr_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<int, Partition>, std::vector<Emission>> rules_;
};

} // namespace qflag::detail
