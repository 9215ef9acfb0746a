#pragma once

#include "qflag/classes.hpp"
#include "qflag/partition.hpp"
#include "qflag/quiver.hpp"
#include "qflag/rational.hpp"
#include "qflag/schur.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace qflag {

/// Text form of classes:
///
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := [rational] ('q' INT ['^' INT])* ('s' INT '[' INT (',' INT)* ']')*
///
/// Whitespace is ignored. A term with no factors is its coefficient, so `1`
/// is the identity and `0` is zero. Repeated factors at one vertex are
/// multiplied out with Littlewood-Richardson coefficients; the result is a
/// raw class that still has to be reduced.
enum class PrintOrder { lex, deg };

namespace detail {

class ClassParser {
public:
  ClassParser(std::string_view text, const Quiver &q) : quiver_(q) {
    for (std::size_t i = 0; i < text.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        columns_.push_back(i + 1);
      }
    original_ = std::string(text);
  }

  QuantumClass parse() {
    if (chars_.empty())
      fail("empty expression");
    QuantumClass out;
    int sign = 1;
    if (peek() == '+' || peek() == '-')
      sign = take() == '-' ? -1 : 1;
    out += term(sign);
    while (!done()) {
      char op = peek();
      if (op != '+' && op != '-')
        fail(std::string("expected '+' or '-', found '") + op + "'");
      ++pos_;
      out += term(op == '-' ? -1 : 1);
    }
    return out;
  }

private:
  bool done() const { return pos_ >= chars_.size(); }
  char peek() const { return done() ? '\0' : chars_[pos_]; }
  char take() { return chars_[pos_++]; }

  [[noreturn]] void fail(const std::string &what) const {
    std::size_t col = done() ? original_.size() + 1 : columns_[pos_];
    throw ParseError("column " + std::to_string(col) + ": " + what + " in '" + original_ + "'");
  }

  long integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > 1000000)
        fail("number too large");
    }
    return v;
  }

  QuantumClass term(int sign) {
    Rational coef(sign);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        ++pos_;
      std::string digits(chars_.begin() + start, chars_.begin() + pos_);
      Integer den = 1;
      if (peek() == '/') {
        ++pos_;
        std::size_t ds = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
          ++pos_;
        if (ds == pos_)
          fail("expected a denominator");
        den = Integer(std::string(chars_.begin() + ds, chars_.begin() + pos_));
        if (den == 0)
          fail("zero denominator");
      }
      Rational c{Integer(digits), den};
      c.canonicalize();
      coef *= c;
      any = true;
    }
    std::vector<int> qexp(quiver_.rho(), 0);
    while (peek() == 'q') {
      ++pos_;
      int v = vertex("q");
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = static_cast<int>(integer());
      }
      qexp[v - 1] += e;
      any = true;
    }
    std::vector<std::vector<Partition>> factors(quiver_.rho());
    while (peek() == 's') {
      ++pos_;
      int v = vertex("s");
      if (peek() != '[')
        fail("expected '[' after s" + std::to_string(v));
      std::size_t open = pos_;
      while (!done() && peek() != ']')
        ++pos_;
      if (done())
        fail("unterminated partition");
      ++pos_;
      std::string body(chars_.begin() + open, chars_.begin() + pos_);
      try {
        factors[v - 1].push_back(parse_partition(body));
      } catch (const Error &e) {
        pos_ = open;
        fail(e.what());
      }
      any = true;
    }
    if (!any)
      fail("expected a term");

    // Multiply out repeated factors at each vertex.
    std::vector<SchurCombination> per_vertex;
    for (int i = 1; i <= quiver_.rho(); ++i) {
      SchurCombination acc = SchurCombination::single(Partition(), quiver_.rank(i));
      for (const auto &p : factors[i - 1]) {
        if (p.length() > quiver_.rank(i)) {
          acc = SchurCombination(quiver_.rank(i));
          break;
        }
        SchurCombination next(quiver_.rank(i));
        for (const auto &[a, c] : acc.terms()) {
          const SchurCombination prod = lr_multiply(a, p, quiver_.rank(i));
          for (const auto &[b, m] : prod.terms())
            next.add(b, c * m);
        }
        acc = std::move(next);
      }
      per_vertex.push_back(std::move(acc));
    }
    QuantumClass out;
    std::vector<std::pair<SchurTuple, Integer>> partial{{SchurTuple(quiver_.rho()), 1}};
    for (int i = 1; i <= quiver_.rho(); ++i) {
      std::vector<std::pair<SchurTuple, Integer>> next;
      for (const auto &[t, c] : partial)
        for (const auto &[p, m] : per_vertex[i - 1].terms()) {
          auto nt = t;
          nt[i - 1] = p;
          next.emplace_back(std::move(nt), c * m);
        }
      partial = std::move(next);
    }
    for (const auto &[t, m] : partial)
      out.add(QTerm{qexp, t}, coef * Rational(m));
    return out;
  }

  int vertex(const char *what) {
    long v = integer();
    if (v < 1 || v > quiver_.rho())
      throw ValidationError(std::string(what) + std::to_string(v) + ": vertex out of range 1.." +
                            std::to_string(quiver_.rho()));
    return static_cast<int>(v);
  }

  const Quiver &quiver_;
  std::vector<char> chars_;
  std::vector<std::size_t> columns_;
  std::string original_;
  std::size_t pos_ = 0;
};

inline int q_weight(const std::vector<int> &d) {
  int w = 0;
  for (int x : d)
    w += x;
  return w;
}

/// Sort key comparison for printing: q-degree, then vertex by vertex
/// (size ascending, then lex descending).
inline bool print_before(const QTerm &a, const QTerm &b, PrintOrder order) {
  if (order == PrintOrder::deg) {
    int da = q_weight(a.q) + boxes(a.tuple), db = q_weight(b.q) + boxes(b.tuple);
    if (da != db)
      return da < db;
  }
  int qa = q_weight(a.q), qb = q_weight(b.q);
  if (qa != qb)
    return qa < qb;
  if (a.q != b.q)
    return a.q > b.q;
  for (std::size_t i = 0; i < a.tuple.size() && i < b.tuple.size(); ++i) {
    const Partition &x = a.tuple[i], &y = b.tuple[i];
    if (x.size() != y.size())
      return x.size() < y.size();
    if (x != y)
      return x > y;
  }
  return false;
}

} // namespace detail

inline QuantumClass parse_class(std::string_view text, const Quiver &q) {
  return detail::ClassParser(text, q).parse();
}

/// The q-free part of a parsed class; throws if a q appears.
inline CohClass parse_classical(std::string_view text, const Quiver &q) {
  QuantumClass c = parse_class(text, q);
  for (const auto &[k, v] : c.terms())
    if (!q_is_one(k.q))
      throw ValidationError("quantum parameters are not allowed in a classical expression");
  return classical_limit(c);
}

inline std::string format_term_body(const QTerm &t) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < t.q.size(); ++i)
    if (t.q[i] != 0)
      parts.push_back("q" + std::to_string(i + 1) + (t.q[i] == 1 ? "" : "^" + std::to_string(t.q[i])));
  for (std::size_t i = 0; i < t.tuple.size(); ++i)
    if (!t.tuple[i].empty())
      parts.push_back("s" + std::to_string(i + 1) + format_partition(t.tuple[i]));
  std::string s;
  for (const auto &p : parts)
    s += (s.empty() ? "" : " ") + p;
  return s;
}

inline std::string format_class(const QuantumClass &c, PrintOrder order = PrintOrder::lex) {
  if (c.is_zero())
    return "0";
  std::vector<std::pair<QTerm, Rational>> terms(c.terms().begin(), c.terms().end());
  std::stable_sort(terms.begin(), terms.end(),
                   [&](const auto &a, const auto &b) { return detail::print_before(a.first, b.first, order); });
  std::string out;
  for (const auto &[k, v] : terms) {
    const bool negative = v < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    Rational a = abs(v);
    std::string body = format_term_body(k);
    if (body.empty())
      out += a.get_str();
    else if (a == 1)
      out += body;
    else
      out += a.get_str() + " " + body;
  }
  return out;
}

inline std::string format_class(const CohClass &c, PrintOrder order = PrintOrder::lex) {
  QuantumClass q;
  for (const auto &[t, v] : c.terms())
    q.add(QTerm{std::vector<int>{}, t}, v);
  return format_class(q, order);
}

} // namespace qflag
