#pragma once

#include "qflag/classes.hpp"
#include "qflag/detail/rim_hook_reduction.hpp"
#include "qflag/quiver.hpp"
#include "qflag/ring_classical.hpp"

#include <memory>
#include <vector>

namespace qflag {

/// Small quantum cohomology of a Fano quiver flag variety on the Schur
/// basis, with one quantum parameter q_i per vertex of degree s_i - s'_i.
///
/// A too-wide s^i_lambda is rewritten with the quantum rim-hook rule: the
/// classical expansion over arrows into i plus (-1)^(r_i - 1) q_i times an
/// expansion over arrows out of i. Each quantum summand drops the total box
/// count by s_i - s'_i >= 1, so reduction terminates for Fano quivers only;
/// other quivers are rejected at construction.
class QuantumRing {
public:
  explicit QuantumRing(const Quiver &q) {
    if (!q.is_fano())
      throw ValidationError("quantum ring requires a Fano quiver (s_i - s'_i > 0 at every vertex)");
    reducer_ = std::make_unique<detail::RimHookReducer>(q, true);
  }

  const Quiver &quiver() const { return reducer_->quiver(); }

  std::vector<BasisElement> basis() const { return basis_enumerate(quiver()); }

  QuantumClass one() const { return QuantumClass(QTerm{q_zero(quiver()), empty_tuple(quiver())}); }

  QuantumClass embed(const CohClass &c) const { return to_quantum(quiver(), c); }

  QuantumClass reduce(const QuantumClass &raw) const { return reducer_->reduce(raw); }

  QuantumClass multiply(const QuantumClass &a, const QuantumClass &b) const {
    return reducer_->multiply(normalized(a), normalized(b));
  }

  QuantumClass multiply(const BasisElement &a, const BasisElement &b) const {
    return multiply(embed(CohClass(a)), embed(CohClass(b)));
  }

  const std::vector<detail::Emission> &rule(int vertex, const Partition &lambda) const {
    return reducer_->rule(vertex, lambda);
  }

private:
  QuantumClass normalized(const QuantumClass &c) const {
    QuantumClass out;
    for (const auto &[k, v] : c.terms()) {
      QTerm t = k;
      if (t.q.empty())
        t.q = q_zero(quiver());
      out.add(t, v);
    }
    return out;
  }

  std::unique_ptr<detail::RimHookReducer> reducer_;
};

} // namespace qflag
