#pragma once

#include "qflag/linalg.hpp"
#include "qflag/polynomial.hpp"
#include "qflag/quiver.hpp"
#include "qflag/rational.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qflag {

/// Finite sum of rational multiples of Laurent monomials. Exponent vectors
/// have a fixed length; zero coefficients are never stored.
class LaurentExpression {
public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  LaurentExpression() = default;
  explicit LaurentExpression(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const Exponents &e, const Rational &c) {
    if (e.size() != nvars_)
      throw ValidationError("Laurent exponent vector has the wrong length");
    if (c == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  friend bool operator==(const LaurentExpression &, const LaurentExpression &) = default;

private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Root variable y^i_{jk}, j != k.
struct RootVariable {
  int vertex = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const RootVariable &, const RootVariable &) = default;
};

/// The mirror potential of the abelianization with root variables:
///
///   W = sum_a x_a + sum_{i, j != k} y^i_{jk}
///   subject to, at every abelianized vertex v = (i, j),
///   prod_{t(a)=v} x_a / prod_{s(a)=v} x_a * prod_k y^i_{kj} / prod_k y^i_{jk} = q_i.
///
/// Variables are laid out as [x_a for each abelianized arrow][y][q_1..q_rho].
/// One basis arrow per abelianized vertex is solved for, which gives the
/// fiber potential W_q in the remaining variables.
class Superpotential {
public:
  /// `sources[i-1]` picks the source vertex of the basis arrow into i; an
  /// empty vector selects the lowest-numbered source at every vertex.
  explicit Superpotential(const Quiver &q, std::vector<int> sources = {}) : quiver_(q), ab_(abelianize(q)) {
    if (!q.is_fano())
      throw ValidationError("mirror construction requires a Fano quiver");
    for (int i = 1; i <= q.rho(); ++i)
      for (int j = 1; j <= q.rank(i); ++j)
        for (int k = 1; k <= q.rank(i); ++k)
          if (j != k)
            ys_.push_back({i, j, k});
    nx_ = ab_.arrows.size();
    nvars_ = nx_ + ys_.size() + q.rho();
    choose_basis(std::move(sources));
    build_constraints();
    solve();
    build_potentials();
  }

  const Quiver &quiver() const { return quiver_; }
  const AbelianizedQuiver &abelianized() const { return ab_; }
  const std::vector<RootVariable> &roots() const { return ys_; }
  std::size_t nvars() const { return nvars_; }
  std::size_t num_arrows() const { return nx_; }
  std::size_t x_var(std::size_t arrow) const { return arrow; }
  std::size_t y_var(std::size_t root) const { return nx_ + root; }
  std::size_t q_var(int vertex) const { return nx_ + ys_.size() + vertex - 1; }
  bool is_basis_arrow(std::size_t a) const { return std::find(basis_.begin(), basis_.end(), a) != basis_.end(); }

  /// Basis arrow solved at each abelianized vertex, in ab.vertices order.
  const std::vector<std::size_t> &basis_arrows() const { return basis_; }
  /// Constraint monomial (left-hand side) at each abelianized vertex.
  const std::vector<LaurentExpression::Exponents> &constraints() const { return constraints_; }
  /// x_{a_v} on the fiber, as a monomial in non-basis variables and q.
  const std::vector<LaurentExpression::Exponents> &solved() const { return solved_; }

  const LaurentExpression &potential() const { return w_; }
  const LaurentExpression &fiber_potential() const { return w_q_; }

  std::size_t vertex_index(const AbelianVertex &v) const {
    auto it = std::find(ab_.vertices.begin(), ab_.vertices.end(), v);
    if (it == ab_.vertices.end())
      throw ValidationError("not an abelianized vertex");
    return static_cast<std::size_t>(it - ab_.vertices.begin());
  }

  std::string variable_name(std::size_t v) const {
    if (v < nx_)
      return "x[" + std::to_string(v + 1) + "]";
    if (v < nx_ + ys_.size()) {
      const auto &y = ys_[v - nx_];
      return "y[" + std::to_string(y.vertex) + "," + std::to_string(y.j) + "," + std::to_string(y.k) + "]";
    }
    return "q[" + std::to_string(v - nx_ - ys_.size() + 1) + "]";
  }

private:
  LaurentExpression::Exponents unit(std::size_t v, int e = 1) const {
    LaurentExpression::Exponents out(nvars_, 0);
    out[v] = e;
    return out;
  }

  void choose_basis(std::vector<int> sources) {
    if (sources.empty())
      for (int i = 1; i <= quiver_.rho(); ++i) {
        int s = 0;
        while (quiver_.arrows(s, i) == 0)
          ++s;
        sources.push_back(s);
      }
    if (static_cast<int>(sources.size()) != quiver_.rho())
      throw ValidationError("one basis-arrow source per vertex required");
    for (const auto &v : ab_.vertices) {
      int s = sources[v.vertex - 1];
      if (quiver_.arrows(s, v.vertex) == 0)
        throw ValidationError("no arrow " + std::to_string(s) + " -> " + std::to_string(v.vertex) +
                              " to use as a basis arrow");
      AbelianArrow want{{s, 1}, v, 1};
      auto it = std::find(ab_.arrows.begin(), ab_.arrows.end(), want);
      basis_.push_back(static_cast<std::size_t>(it - ab_.arrows.begin()));
    }
  }

  void build_constraints() {
    for (const auto &v : ab_.vertices) {
      LaurentExpression::Exponents e(nvars_, 0);
      for (std::size_t a = 0; a < nx_; ++a) {
        if (ab_.arrows[a].target == v)
          e[x_var(a)] += 1;
        if (ab_.arrows[a].source == v)
          e[x_var(a)] -= 1;
      }
      for (std::size_t r = 0; r < ys_.size(); ++r) {
        const auto &y = ys_[r];
        if (y.vertex != v.vertex)
          continue;
        if (y.k == v.copy)
          e[y_var(r)] += 1; // y^i_{kj} with j = v.copy
        if (y.j == v.copy)
          e[y_var(r)] -= 1; // y^i_{jk}
      }
      constraints_.push_back(std::move(e));
    }
  }

  /// Solves every constraint for its basis arrow. Arrows out of v end at
  /// higher vertices, so going from the highest vertex down each basis
  /// arrow met on the right-hand side is already solved.
  void solve() {
    const std::size_t n = ab_.vertices.size();
    solved_.assign(n, {});
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k)
      order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ab_.vertices[b] < ab_.vertices[a]; });
    std::vector<bool> done(n, false);
    for (std::size_t v : order) {
      // x_{a_v} = q_i * x_{a_v} / constraint.
      LaurentExpression::Exponents e(nvars_, 0);
      for (std::size_t k = 0; k < nvars_; ++k)
        e[k] = -constraints_[v][k];
      e[x_var(basis_[v])] += 1;
      e[q_var(ab_.vertices[v].vertex)] += 1;
      for (std::size_t w = 0; w < n; ++w) {
        int c = e[x_var(basis_[w])];
        if (c == 0)
          continue;
        if (!done[w])
          throw ValidationError("basis arrow substitution is not triangular");
        e[x_var(basis_[w])] = 0;
        for (std::size_t k = 0; k < nvars_; ++k)
          e[k] += c * solved_[w][k];
      }
      solved_[v] = std::move(e);
      done[v] = true;
    }
  }

  void build_potentials() {
    w_ = LaurentExpression(nvars_);
    w_q_ = LaurentExpression(nvars_);
    for (std::size_t a = 0; a < nx_; ++a) {
      w_.add(unit(x_var(a)), 1);
      if (!is_basis_arrow(a))
        w_q_.add(unit(x_var(a)), 1);
    }
    for (std::size_t r = 0; r < ys_.size(); ++r) {
      w_.add(unit(y_var(r)), 1);
      w_q_.add(unit(y_var(r)), 1);
    }
    for (const auto &e : solved_)
      w_q_.add(e, 1);
  }

  Quiver quiver_;
  AbelianizedQuiver ab_;
  std::vector<RootVariable> ys_;
  std::size_t nx_ = 0;
  std::size_t nvars_ = 0;
  std::vector<std::size_t> basis_;
  std::vector<LaurentExpression::Exponents> constraints_;
  std::vector<LaurentExpression::Exponents> solved_;
  LaurentExpression w_;
  LaurentExpression w_q_;
};

/// The critical locus of W_q in linear form.
///
/// Writing X_a, Y for the values of the variables (X_{a_v} being the value
/// of the solved monomial), u d/du W_q = 0 for each non-basis variable u is
/// a linear system L. Its solutions are parametrized by one p_v per
/// abelianized vertex (p_source = 0):
///   X_a = p_{t(a)} - p_{s(a)},   Y^i_{jk} = p_{ik} - p_{ij},
/// and p_v plays the role of the Chern root x_ij. Substituting into the
/// constraints gives the relations
///   prod_{t(a)=v} X_a - sign_i q_i prod_{s(a)=v} X_a,
/// where sign_i is the value of the y-ratio, (-1)^(r_i - 1).
struct CriticalLocus {
  Matrix linear;             // rows: non-basis variables; columns: x then y values
  Matrix change_of_basis;    // rows: x then y values; columns: p_v
  bool parametrization_ok = false;
  std::vector<int> signs;    // per vertex i = 1..rho
  std::vector<Polynomial> relations; // per abelianized vertex, in (p_v, q_i) variables
  std::vector<std::string> specialized; // x[a_v] = +-q A_v, as text
};

namespace detail {

/// p-variable layout shared with the toric oracle: p_{ij} in vertex order,
/// then q_1..q_rho.
inline std::size_t p_index(const Quiver &q, const AbelianVertex &v) {
  std::size_t k = 0;
  for (int i = 1; i < v.vertex; ++i)
    k += q.rank(i);
  return k + v.copy - 1;
}

inline std::size_t p_count(const Quiver &q) {
  std::size_t n = 0;
  for (int i = 1; i <= q.rho(); ++i)
    n += q.rank(i);
  return n;
}

/// Value of each x and y variable as a linear polynomial in the p's.
inline std::vector<Polynomial> values(const Superpotential &sp) {
  const Quiver &q = sp.quiver();
  const std::size_t nv = p_count(q) + q.rho();
  std::vector<Polynomial> out;
  auto p = [&](const AbelianVertex &v) {
    return v.vertex == 0 ? Polynomial(nv) : Polynomial::variable(nv, p_index(q, v));
  };
  for (const auto &a : sp.abelianized().arrows)
    out.push_back(p(a.target) - p(a.source));
  for (const auto &y : sp.roots())
    out.push_back(p({y.vertex, y.k}) - p({y.vertex, y.j}));
  return out;
}

/// Evaluates prod_u value_u^{e_u} over the y-variables when the numerator
/// and denominator agree up to sign; returns that sign.
inline int y_ratio_sign(const Superpotential &sp, const std::vector<Polynomial> &vals,
                        const LaurentExpression::Exponents &e) {
  const std::size_t nv = vals.empty() ? 0 : vals[0].nvars();
  Polynomial num = Polynomial::constant(nv, 1), den = Polynomial::constant(nv, 1);
  for (std::size_t r = 0; r < sp.roots().size(); ++r) {
    int x = e[sp.y_var(r)];
    for (int k = 0; k < x; ++k)
      num = num * vals[sp.num_arrows() + r];
    for (int k = 0; k < -x; ++k)
      den = den * vals[sp.num_arrows() + r];
  }
  if (num == den)
    return 1;
  if (num == -den)
    return -1;
  throw ValidationError("root-variable ratio does not cancel on the critical locus");
}

} // namespace detail

inline CriticalLocus critical_relations(const Superpotential &sp) {
  const Quiver &q = sp.quiver();
  const auto &ab = sp.abelianized();
  const std::size_t na = sp.num_arrows(), ny = sp.roots().size(), unknowns = na + ny;
  const std::size_t n = ab.vertices.size();
  CriticalLocus out;

  for (std::size_t u = 0; u < unknowns; ++u) {
    if (u < na && sp.is_basis_arrow(u))
      continue;
    std::vector<Rational> row(unknowns, Rational(0));
    row[u] = 1;
    for (std::size_t v = 0; v < n; ++v)
      row[sp.basis_arrows()[v]] += sp.solved()[v][u];
    out.linear.push_back(std::move(row));
  }

  out.change_of_basis.assign(unknowns, std::vector<Rational>(n, Rational(0)));
  for (std::size_t a = 0; a < na; ++a) {
    const auto &arrow = ab.arrows[a];
    out.change_of_basis[a][sp.vertex_index(arrow.target)] += 1;
    if (arrow.source.vertex != 0)
      out.change_of_basis[a][sp.vertex_index(arrow.source)] -= 1;
  }
  for (std::size_t r = 0; r < ny; ++r) {
    const auto &y = sp.roots()[r];
    out.change_of_basis[na + r][sp.vertex_index({y.vertex, y.k})] += 1;
    out.change_of_basis[na + r][sp.vertex_index({y.vertex, y.j})] -= 1;
  }

  bool annihilates = true;
  for (const auto &row : out.linear)
    for (std::size_t c = 0; c < n; ++c) {
      Rational s = 0;
      for (std::size_t k = 0; k < unknowns; ++k)
        s += row[k] * out.change_of_basis[k][c];
      annihilates = annihilates && s == 0;
    }
  out.parametrization_ok =
      annihilates && rank(out.change_of_basis) == n && unknowns - rank(out.linear) == n;

  const auto vals = detail::values(sp);
  const std::size_t nv = detail::p_count(q) + q.rho();
  out.signs.assign(q.rho(), 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto &e = sp.constraints()[v];
    const int i = ab.vertices[v].vertex;
    int sign = detail::y_ratio_sign(sp, vals, e);
    if (out.signs[i - 1] != 0 && out.signs[i - 1] != sign)
      throw ValidationError("inconsistent root sign at vertex " + std::to_string(i));
    out.signs[i - 1] = sign;
    Polynomial in = Polynomial::constant(nv, 1), outgoing = Polynomial::constant(nv, 1);
    for (std::size_t a = 0; a < na; ++a) {
      for (int k = 0; k < e[sp.x_var(a)]; ++k)
        in = in * vals[a];
      for (int k = 0; k < -e[sp.x_var(a)]; ++k)
        outgoing = outgoing * vals[a];
    }
    Polynomial qi = Polynomial::variable(nv, detail::p_count(q) + i - 1);
    out.relations.push_back(in - qi * outgoing * Rational(sign));

    // x[a_v] = sign q^.. x^.. with the root variables evaluated.
    const auto &m = sp.solved()[v];
    int msign = detail::y_ratio_sign(sp, vals, m);
    std::string rhs = msign < 0 ? "-" : "";
    std::string factors;
    for (std::size_t k = 0; k < sp.nvars(); ++k) {
      if (m[k] == 0 || (k >= na && k < na + ny))
        continue;
      factors += (factors.empty() ? "" : " * ") + sp.variable_name(k) +
                 (m[k] == 1 ? "" : "^" + std::to_string(m[k]));
    }
    out.specialized.push_back(sp.variable_name(sp.x_var(sp.basis_arrows()[v])) + " = " + rhs +
                              (factors.empty() ? "1" : factors));
  }
  return out;
}

/// Monomial order used for ideal comparisons: weighted degree with
/// deg x = 1 and deg q_i = w_i, then x-degree, then exponents compared from
/// the highest x-variable down, then q's.
struct WeightedOrder {
  std::size_t nx = 0;
  std::vector<int> q_weights;

  int weighted(const Monomial &m) const {
    int d = 0;
    for (std::size_t v = 0; v < nx; ++v)
      d += m[v];
    for (std::size_t i = 0; i < q_weights.size(); ++i)
      d += q_weights[i] * m[nx + i];
    return d;
  }
  int x_degree(const Monomial &m) const {
    int d = 0;
    for (std::size_t v = 0; v < nx; ++v)
      d += m[v];
    return d;
  }
  /// True iff a < b.
  bool operator()(const Monomial &a, const Monomial &b) const {
    int wa = weighted(a), wb = weighted(b);
    if (wa != wb)
      return wa < wb;
    int xa = x_degree(a), xb = x_degree(b);
    if (xa != xb)
      return xa < xb;
    for (std::size_t v = nx; v-- > 0;)
      if (a[v] != b[v])
        return a[v] < b[v];
    for (std::size_t i = q_weights.size(); i-- > 0;)
      if (a[nx + i] != b[nx + i])
        return a[nx + i] < b[nx + i];
    return false;
  }

  static WeightedOrder for_quiver(const Quiver &q) {
    WeightedOrder o;
    o.nx = detail::p_count(q);
    for (int i = 1; i <= q.rho(); ++i)
      o.q_weights.push_back(q.q_degree(i));
    return o;
  }
};

inline std::pair<Monomial, Rational> leading_term(const Polynomial &p, const WeightedOrder &order) {
  auto it = std::max_element(p.terms().begin(), p.terms().end(),
                             [&](const auto &a, const auto &b) { return order(a.first, b.first); });
  return *it;
}

/// Remainder of multivariate division of p by the generators.
inline Polynomial divide(Polynomial p, const std::vector<Polynomial> &generators, const WeightedOrder &order) {
  std::vector<std::pair<Monomial, Rational>> leads;
  for (const auto &g : generators) {
    if (g.is_zero())
      throw ValidationError("zero generator in division");
    leads.push_back(leading_term(g, order));
  }
  Polynomial remainder(p.nvars());
  while (!p.is_zero()) {
    auto [m, c] = leading_term(p, order);
    bool divided = false;
    for (std::size_t k = 0; k < generators.size() && !divided; ++k)
      if (leads[k].first.divides(m)) {
        p.add_scaled(generators[k], -c / leads[k].second, leads[k].first.quotient_of(m));
        divided = true;
      }
    if (!divided) {
      remainder.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return remainder;
}

namespace detail {

inline std::string format_laurent_term(const Superpotential &sp, const LaurentExpression::Exponents &e,
                                       const Rational &c) {
  std::string s = c.get_str();
  for (std::size_t v = 0; v < e.size(); ++v)
    if (e[v] != 0)
      s += " * " + sp.variable_name(v) + (e[v] == 1 ? "" : "^" + std::to_string(e[v]));
  return s;
}

inline std::string format_root_polynomial(const Quiver &q, const Polynomial &p) {
  std::vector<std::string> names;
  for (int i = 1; i <= q.rho(); ++i)
    for (int j = 1; j <= q.rank(i); ++j)
      names.push_back("x[" + std::to_string(i) + "," + std::to_string(j) + "]");
  for (int i = 1; i <= q.rho(); ++i)
    names.push_back("q[" + std::to_string(i) + "]");
  return p.to_string([&](std::size_t v) { return names.at(v); });
}

} // namespace detail

/// Text emission: legend lines start with '#', one W_q term per line,
/// constraints prefixed "subject to:", the solved basis arrows with root
/// variables evaluated on the critical locus prefixed "critical:", and
/// cleared relations in Chern roots prefixed
/// "relation:".
inline std::string emit_mirror(const Superpotential &sp) {
  const auto &ab = sp.abelianized();
  std::string out;
  for (std::size_t a = 0; a < ab.arrows.size(); ++a) {
    const auto &arr = ab.arrows[a];
    out += "# " + sp.variable_name(sp.x_var(a)) + ": (" + std::to_string(arr.source.vertex) + "," +
           std::to_string(arr.source.copy) + ") -> (" + std::to_string(arr.target.vertex) + "," +
           std::to_string(arr.target.copy) + ")" + (sp.is_basis_arrow(a) ? " basis" : "") + "\n";
  }
  for (std::size_t r = 0; r < sp.roots().size(); ++r) {
    const auto &y = sp.roots()[r];
    out += "# " + sp.variable_name(sp.y_var(r)) + ": root at vertex " + std::to_string(y.vertex) + "\n";
  }
  out += "# W_q\n";
  // q-free terms first, then by total q-degree; ties by first variable.
  std::vector<std::pair<LaurentExpression::Exponents, Rational>> terms(sp.fiber_potential().terms().begin(),
                                                                       sp.fiber_potential().terms().end());
  const std::size_t first_q = sp.q_var(1);
  auto q_degree = [&](const LaurentExpression::Exponents &e) {
    int d = 0;
    for (std::size_t k = first_q; k < e.size(); ++k)
      d += e[k];
    return d;
  };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto &a, const auto &b) {
    int da = q_degree(a.first), db = q_degree(b.first);
    return da != db ? da < db : a.first > b.first;
  });
  for (const auto &[e, c] : terms)
    out += detail::format_laurent_term(sp, e, c) + "\n";
  for (std::size_t v = 0; v < ab.vertices.size(); ++v) {
    std::string lhs;
    const auto &e = sp.constraints()[v];
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0)
        lhs += (lhs.empty() ? "" : " * ") + sp.variable_name(k) + (e[k] == 1 ? "" : "^" + std::to_string(e[k]));
    out += "subject to: " + lhs + " = q[" + std::to_string(ab.vertices[v].vertex) + "]\n";
  }
  CriticalLocus locus = critical_relations(sp);
  for (const auto &s : locus.specialized)
    out += "critical: " + s + "\n";
  for (const auto &r : locus.relations)
    out += "relation: " + detail::format_root_polynomial(sp.quiver(), r) + " = 0\n";
  return out;
}

} // namespace qflag
