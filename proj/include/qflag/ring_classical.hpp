#pragma once

#include "qflag/classes.hpp"
#include "qflag/detail/rim_hook_reduction.hpp"
#include "qflag/partition.hpp"
#include "qflag/quiver.hpp"

#include <map>
#include <memory>
#include <vector>

namespace qflag {

/// Enumerates the Schur basis: tuples (lambda_1, ..., lambda_rho) with
/// lambda_i in the r_i x (s_i - r_i) box. Vertex 1 varies slowest; within a
/// vertex partitions are ordered by size, then descending lex.
inline std::vector<BasisElement> basis_enumerate(const Quiver &q) {
  std::vector<BasisElement> out{SchurTuple{}};
  for (int i = 1; i <= q.rho(); ++i) {
    auto parts = partitions_in_box(q.box_rows(i), q.box_cols(i));
    std::vector<BasisElement> next;
    next.reserve(out.size() * parts.size());
    for (const auto &t : out)
      for (const auto &p : parts) {
        auto nt = t;
        nt.push_back(p);
        next.push_back(std::move(nt));
      }
    out = std::move(next);
  }
  return out;
}

/// The cohomology ring of a quiver flag variety on the Schur basis.
/// Products are computed with Littlewood-Richardson coefficients at each
/// vertex, after which too-wide partitions are removed with the classical
/// rim-hook rule until every partition fits its box.
class ClassicalRing {
public:
  explicit ClassicalRing(const Quiver &q)
      : reducer_(std::make_unique<detail::RimHookReducer>(q, false)) {}

  const Quiver &quiver() const { return reducer_->quiver(); }

  std::vector<BasisElement> basis() const { return basis_enumerate(quiver()); }

  CohClass one() const { return CohClass(empty_tuple(quiver())); }

  CohClass reduce(const CohClass &raw) const {
    return classical_limit(reducer_->reduce(to_quantum(quiver(), raw)));
  }

  CohClass multiply(const CohClass &a, const CohClass &b) const {
    return classical_limit(reducer_->multiply(to_quantum(quiver(), a), to_quantum(quiver(), b)));
  }

  CohClass multiply(const BasisElement &a, const BasisElement &b) const {
    return multiply(CohClass(a), CohClass(b));
  }

  /// The rewrite of s^i_lambda, for testing the rule on its own.
  const std::vector<detail::Emission> &rule(int vertex, const Partition &lambda) const {
    return reducer_->rule(vertex, lambda);
  }

private:
  std::unique_ptr<detail::RimHookReducer> reducer_;
};

} // namespace qflag
