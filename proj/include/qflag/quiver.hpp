#pragma once

#include "qflag/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qflag {

/// One block of parallel arrows: `multiplicity` arrows from `source` to
/// `target`.
struct ArrowSpec {
  int source = 0;
  int target = 0;
  int multiplicity = 1;
};

/// Raw quiver data as supplied by the user. Vertex 0 is the source and has
/// dimension 1; `dims[i-1]` is the dimension at vertex i.
struct QuiverSpec {
  int vertices = 0; // rho, not counting the source
  std::vector<int> dims;
  std::vector<ArrowSpec> arrows;
};

struct VertexRanks {
  int incoming = 0; // s_i
  int outgoing = 0; // s'_i
  friend bool operator==(const VertexRanks &, const VertexRanks &) = default;
};

namespace detail {

inline void check_shape(const QuiverSpec &spec) {
  if (spec.vertices < 1)
    throw ValidationError("quiver needs at least one vertex besides the source");
  if (static_cast<int>(spec.dims.size()) != spec.vertices)
    throw ValidationError("dims has " + std::to_string(spec.dims.size()) + " entries, expected " +
                          std::to_string(spec.vertices));
  for (int i = 0; i < spec.vertices; ++i)
    if (spec.dims[i] <= 0)
      throw ValidationError("positive dimension required (dims[" + std::to_string(i) +
                            "] = " + std::to_string(spec.dims[i]) + ")");
  for (std::size_t k = 0; k < spec.arrows.size(); ++k) {
    const auto &a = spec.arrows[k];
    const std::string where = "arrows[" + std::to_string(k) + "]: ";
    if (a.source >= a.target)
      throw ValidationError(where + "arrow with i >= j (" + std::to_string(a.source) + " -> " +
                            std::to_string(a.target) + ")");
    if (a.source < 0 || a.target > spec.vertices)
      throw ValidationError(where + "vertex out of range 0.." + std::to_string(spec.vertices));
    if (a.multiplicity < 0)
      throw ValidationError(where + "negative multiplicity");
  }
}

} // namespace detail

/// Validated quiver with dimension vector. Immutable after construction.
///
/// Vertices are numbered 0..rho in the supplied (topological) order, with
/// arrows only from lower to higher vertices. Inputs are assumed to be
/// graph-reduced; no grafting check is made.
class Quiver {
public:
  explicit Quiver(const QuiverSpec &spec) {
    detail::check_shape(spec);
    rho_ = spec.vertices;
    dims_.assign(rho_ + 1, 1);
    for (int i = 1; i <= rho_; ++i)
      dims_[i] = spec.dims[i - 1];
    mult_.assign((rho_ + 1) * (rho_ + 1), 0);
    for (const auto &a : spec.arrows)
      mult_[index(a.source, a.target)] += a.multiplicity;

    ranks_.assign(rho_ + 1, VertexRanks{});
    for (int i = 0; i <= rho_; ++i)
      for (int j = i + 1; j <= rho_; ++j) {
        ranks_[j].incoming += arrows(i, j) * dims_[i];
        ranks_[i].outgoing += arrows(i, j) * dims_[j];
      }
    for (int i = 1; i <= rho_; ++i) {
      int in_arrows = 0;
      for (int j = 0; j < i; ++j)
        in_arrows += arrows(j, i);
      if (in_arrows == 0)
        throw ValidationError("no incoming arrows at vertex " + std::to_string(i));
      if (ranks_[i].incoming <= dims_[i])
        throw ValidationError("degenerate vertex: s_" + std::to_string(i) + " = " +
                              std::to_string(ranks_[i].incoming) + " <= r_" + std::to_string(i) +
                              " = " + std::to_string(dims_[i]));
    }
    spec_ = spec;
  }

  int rho() const { return rho_; }
  /// r_i, with r_0 = 1.
  int rank(int i) const { return dims_[i]; }
  /// n_ij, the number of arrows i -> j (zero unless i < j).
  int arrows(int i, int j) const {
    if (i < 0 || j < 0 || i > rho_ || j > rho_ || i >= j)
      return 0;
    return mult_[index(i, j)];
  }
  int s(int i) const { return ranks_[i].incoming; }
  int s_out(int i) const { return ranks_[i].outgoing; }
  const VertexRanks &ranks(int i) const { return ranks_[i]; }
  const QuiverSpec &spec() const { return spec_; }

  /// Box for the Schur classes at vertex i: r_i rows, s_i - r_i columns.
  int box_rows(int i) const { return dims_[i]; }
  int box_cols(int i) const { return s(i) - dims_[i]; }

  /// Source vertex of each individual arrow into i (repeated by multiplicity).
  std::vector<int> arrow_sources_into(int i) const {
    std::vector<int> out;
    for (int j = 0; j < i; ++j)
      out.insert(out.end(), arrows(j, i), j);
    return out;
  }

  /// Target vertex of each individual arrow out of i (repeated by multiplicity).
  std::vector<int> arrow_targets_from(int i) const {
    std::vector<int> out;
    for (int j = i + 1; j <= rho_; ++j)
      out.insert(out.end(), arrows(i, j), j);
    return out;
  }

  /// Degree of q_i: s_i - s'_i.
  int q_degree(int i) const { return s(i) - s_out(i); }

  bool is_fano() const {
    for (int i = 1; i <= rho_; ++i)
      if (q_degree(i) <= 0)
        return false;
    return true;
  }

  friend bool operator==(const Quiver &a, const Quiver &b) {
    return a.rho_ == b.rho_ && a.dims_ == b.dims_ && a.mult_ == b.mult_;
  }

private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * (rho_ + 1) + j; }

  int rho_ = 0;
  std::vector<int> dims_;
  std::vector<int> mult_;
  std::vector<VertexRanks> ranks_;
  QuiverSpec spec_;
};

/// Ranks (s_i, s'_i) for vertices 1..rho; throws ValidationError on bad input.
inline std::vector<VertexRanks> validate(const QuiverSpec &spec) {
  Quiver q(spec);
  std::vector<VertexRanks> out;
  for (int i = 1; i <= q.rho(); ++i)
    out.push_back(q.ranks(i));
  return out;
}

inline bool is_fano(const Quiver &q) { return q.is_fano(); }

/// Vertex (i, j) of the abelianized quiver; the source is (0, 1).
struct AbelianVertex {
  int vertex = 0;
  int copy = 1;
  friend auto operator<=>(const AbelianVertex &, const AbelianVertex &) = default;
};

struct AbelianArrow {
  AbelianVertex source;
  AbelianVertex target;
  int parallel = 1; // 1..n_ij, distinguishes parallel arrows
  friend auto operator<=>(const AbelianArrow &, const AbelianArrow &) = default;
};

/// Toric quiver with r_i vertices for each vertex i of the original quiver
/// and n_ij arrows between every copy of i and every copy of j.
struct AbelianizedQuiver {
  std::vector<AbelianVertex> vertices; // excluding the source
  std::vector<AbelianArrow> arrows;    // sorted by (target, source, parallel)

  int incoming_rank(const AbelianVertex &v) const {
    int n = 0;
    for (const auto &a : arrows)
      if (a.target == v)
        ++n;
    return n;
  }
};

inline AbelianizedQuiver abelianize(const Quiver &q) {
  AbelianizedQuiver out;
  for (int i = 1; i <= q.rho(); ++i)
    for (int j = 1; j <= q.rank(i); ++j)
      out.vertices.push_back({i, j});
  for (int t = 1; t <= q.rho(); ++t)
    for (int tc = 1; tc <= q.rank(t); ++tc)
      for (int s = 0; s < t; ++s)
        for (int sc = 1; sc <= q.rank(s); ++sc)
          for (int m = 1; m <= q.arrows(s, t); ++m)
            out.arrows.push_back({{s, sc}, {t, tc}, m});
  return out;
}

/// Number of elements of the Schur basis: prod_i C(s_i, r_i).
inline Integer basis_count(const Quiver &q) {
  Integer n = 1;
  for (int i = 1; i <= q.rho(); ++i) {
    Integer c;
    mpz_bin_uiui(c.get_mpz_t(), q.s(i), q.rank(i));
    n *= c;
  }
  return n;
}

/// Complex dimension sum_i r_i (s_i - r_i).
inline int dimension(const Quiver &q) {
  int d = 0;
  for (int i = 1; i <= q.rho(); ++i)
    d += q.rank(i) * (q.s(i) - q.rank(i));
  return d;
}

/// Exponent vector (d_1, ..., d_rho) of a quantum monomial q^d.
struct CurveClass {
  std::vector<int> d;

  bool is_zero() const {
    for (int x : d)
      if (x != 0)
        return false;
    return true;
  }
  friend auto operator<=>(const CurveClass &, const CurveClass &) = default;
};

/// <-K, d> = sum_i d_i (s_i - s'_i).
inline int fano_degree(const Quiver &q, const CurveClass &c) {
  int deg = 0;
  for (int i = 1; i <= q.rho() && i <= static_cast<int>(c.d.size()); ++i)
    deg += c.d[i - 1] * q.q_degree(i);
  return deg;
}

} // namespace qflag
