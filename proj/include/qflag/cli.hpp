#pragma once

// Command-line front end. Kept in a header so tests can drive run()
// in-process; tools/qflag.cpp only forwards argv.

#include "qflag/abelian_oracle.hpp"
#include "qflag/expression.hpp"
#include "qflag/mirror.hpp"
#include "qflag/quiver.hpp"
#include "qflag/ring_classical.hpp"
#include "qflag/ring_quantum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace qflag {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int invalid = 2;
inline constexpr int verify_failed = 3;
} // namespace exit_code

/// Reads a quiver document:
///   {"vertices": 2, "dims": [2, 1], "arrows": [[0, 1, 4], [1, 2, 1]]}
/// Comments are allowed. Unknown keys and malformed entries are parse
/// errors; the resulting spec is validated by constructing a Quiver.
inline QuiverSpec parse_quiver_text(const std::string &text, const std::string &origin = "<input>") {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text, nullptr, true, true);
  } catch (const json::parse_error &e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!doc.is_object())
    throw ParseError(origin + ": expected an object with keys vertices, dims, arrows");
  for (const auto &[key, value] : doc.items())
    if (key != "vertices" && key != "dims" && key != "arrows")
      throw ParseError(origin + ": unknown field '" + key + "'");
  for (const char *key : {"vertices", "dims", "arrows"})
    if (!doc.contains(key))
      throw ParseError(origin + ": missing field '" + std::string(key) + "'");

  auto as_int = [&](const json &v, const std::string &where) {
    if (!v.is_number_integer())
      throw ParseError(origin + ": " + where + " must be an integer");
    return v.get<int>();
  };
  QuiverSpec spec;
  spec.vertices = as_int(doc["vertices"], "vertices");
  if (!doc["dims"].is_array())
    throw ParseError(origin + ": dims must be a list");
  for (std::size_t i = 0; i < doc["dims"].size(); ++i)
    spec.dims.push_back(as_int(doc["dims"][i], "dims[" + std::to_string(i) + "]"));
  if (!doc["arrows"].is_array())
    throw ParseError(origin + ": arrows must be a list");
  for (std::size_t k = 0; k < doc["arrows"].size(); ++k) {
    const auto &a = doc["arrows"][k];
    const std::string where = "arrows[" + std::to_string(k) + "]";
    if (!a.is_array() || a.size() != 3)
      throw ParseError(origin + ": " + where + " must be [source, target, multiplicity]");
    spec.arrows.push_back({as_int(a[0], where), as_int(a[1], where), as_int(a[2], where)});
  }
  try {
    Quiver check(spec);
  } catch (const ValidationError &e) {
    throw ValidationError(origin + ": " + e.what());
  }
  return spec;
}

inline QuiverSpec parse_quiver_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read quiver file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_quiver_text(buf.str(), path);
}

namespace detail {

struct CliOptions {
  std::string file;
  std::string order = "lex";
  bool quantum = false;
  bool all = false;
  unsigned jobs = 1;
  std::vector<std::string> exprs;
  std::vector<int> sources;
};

inline PrintOrder print_order(const CliOptions &o) { return o.order == "deg" ? PrintOrder::deg : PrintOrder::lex; }

inline void cmd_info(const Quiver &q, std::ostream &out) {
  out << "vertices: " << q.rho() << "\n";
  out << "dims:";
  for (int i = 1; i <= q.rho(); ++i)
    out << " " << q.rank(i);
  out << "\narrows:";
  for (int i = 0; i <= q.rho(); ++i)
    for (int j = i + 1; j <= q.rho(); ++j)
      if (q.arrows(i, j) > 0)
        out << " " << i << "->" << j << "(" << q.arrows(i, j) << ")";
  out << "\n";
  for (int i = 1; i <= q.rho(); ++i)
    out << "vertex " << i << ": r=" << q.rank(i) << " s=" << q.s(i) << " s'=" << q.s_out(i) << " box="
        << q.box_rows(i) << "x" << q.box_cols(i) << " deg(q" << i << ")=" << q.q_degree(i) << "\n";
  out << "fano: " << (q.is_fano() ? "yes" : "no") << "\n";
  out << "dimension: " << dimension(q) << "\n";
  out << "basis count: " << basis_count(q).get_str() << "\n";
}

inline std::string basis_text(const BasisElement &b) { return format_class(CohClass(b)); }

/// Runs verify_product over the given pairs on `jobs` threads; results are
/// stored by index so the report does not depend on scheduling.
template <typename Check>
std::vector<char> run_checks(std::size_t count, unsigned jobs, const Check &check) {
  std::vector<char> ok(count, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++)
      ok[k] = check(k) ? 1 : 0;
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, jobs); ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &th : pool)
    th.join();
  return ok;
}

inline int cmd_verify(const Quiver &q, const CliOptions &o, std::ostream &out) {
  const Mode mode = o.quantum ? Mode::quantum : Mode::classical;
  if (o.quantum && !q.is_fano())
    throw ValidationError("quantum verification requires a Fano quiver");
  AbelianOracle oracle(q);
  std::vector<std::pair<QuantumClass, QuantumClass>> pairs;
  std::vector<std::string> labels;
  std::optional<QuantumClass> given; // a claimed product supplied by the user
  if (o.all) {
    if (!o.exprs.empty())
      throw ParseError("verify --all takes no class arguments");
    auto basis = basis_enumerate(q);
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = a; b < basis.size(); ++b) {
        pairs.emplace_back(to_quantum(q, CohClass(basis[a])), to_quantum(q, CohClass(basis[b])));
        labels.push_back(basis_text(basis[a]) + " * " + basis_text(basis[b]));
      }
  } else {
    if (o.exprs.size() != 2 && o.exprs.size() != 3)
      throw ParseError("verify needs two classes and an optional claimed product, or --all");
    auto read = [&](const std::string &text) {
      return o.quantum ? parse_class(text, q) : to_quantum(q, parse_classical(text, q));
    };
    auto a = read(o.exprs[0]), b = read(o.exprs[1]);
    if (o.exprs.size() == 3)
      given = read(o.exprs[2]);
    pairs.emplace_back(a, b);
    labels.push_back(o.exprs[0] + " * " + o.exprs[1]);
  }

  std::unique_ptr<ClassicalRing> cring;
  std::unique_ptr<QuantumRing> qring;
  if (o.quantum)
    qring = std::make_unique<QuantumRing>(q);
  else
    cring = std::make_unique<ClassicalRing>(q);
  auto ok = run_checks(pairs.size(), o.jobs, [&](std::size_t k) {
    const auto &[a, b] = pairs[k];
    QuantumClass claimed = given ? *given
                           : o.quantum
                               ? qring->multiply(a, b)
                               : to_quantum(q, cring->multiply(classical_limit(a), classical_limit(b)));
    return oracle.verify_product(a, b, claimed, mode);
  });
  std::size_t passed = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
  for (std::size_t k = 0; k < ok.size(); ++k)
    if (!ok[k])
      out << "failed: " << labels[k] << "\n";
  out << (passed == ok.size() ? "PASS " : "FAIL ") << passed << "/" << ok.size() << "\n";
  return passed == ok.size() ? exit_code::ok : exit_code::verify_failed;
}

inline int dispatch(const std::string &command, const CliOptions &o, std::ostream &out) {
  const Quiver q(parse_quiver_file(o.file));
  const PrintOrder order = print_order(o);
  auto need = [&](std::size_t n) {
    if (o.exprs.size() != n)
      throw ParseError(command + " expects " + std::to_string(n) + " class argument(s)");
  };
  if (command == "info") {
    cmd_info(q, out);
  } else if (command == "basis") {
    for (const auto &b : basis_enumerate(q))
      out << basis_text(b) << "\n";
  } else if (command == "mult") {
    need(2);
    ClassicalRing ring(q);
    out << format_class(ring.multiply(parse_classical(o.exprs[0], q), parse_classical(o.exprs[1], q)), order)
        << "\n";
  } else if (command == "qmult") {
    need(2);
    QuantumRing ring(q);
    out << format_class(ring.multiply(parse_class(o.exprs[0], q), parse_class(o.exprs[1], q)), order) << "\n";
  } else if (command == "reduce") {
    need(1);
    if (o.quantum)
      out << format_class(QuantumRing(q).reduce(parse_class(o.exprs[0], q)), order) << "\n";
    else
      out << format_class(ClassicalRing(q).reduce(parse_classical(o.exprs[0], q)), order) << "\n";
  } else if (command == "pair") {
    ClassicalRing ring(q);
    AbelianOracle oracle(q);
    auto m = pairing_matrix(ring, oracle);
    for (const auto &row : m) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out << (c ? " " : "") << row[c].get_str();
      out << "\n";
    }
  } else if (command == "integrate") {
    need(1);
    ClassicalRing ring(q);
    AbelianOracle oracle(q);
    out << oracle.martin_integrate(ring.reduce(parse_classical(o.exprs[0], q))).get_str() << "\n";
  } else if (command == "verify") {
    return cmd_verify(q, o, out);
  } else if (command == "mirror") {
    out << emit_mirror(Superpotential(q, o.sources));
  }
  return exit_code::ok;
}

} // namespace detail

/// Entry point; `args` excludes the program name. Returns the exit status.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Schur-basis cohomology and quantum cohomology of quiver flag varieties"};
  app.name("qflag");
  app.require_subcommand(1, 1);
  detail::CliOptions o;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("-f,--file", o.file, "quiver file")->required();
    sub->add_option("--order", o.order, "print order of terms")->check(CLI::IsMember({"lex", "deg"}));
  };
  struct Spec {
    const char *name;
    const char *help;
    int exprs; // -1: optional list
  };
  const Spec specs[] = {
      {"info", "ranks, Fano test, dimension and basis count", 0},
      {"basis", "list the Schur basis", 0},
      {"mult", "classical product of two classes", 2},
      {"qmult", "quantum product of two classes", 2},
      {"reduce", "normal form of a class", 1},
      {"pair", "Poincare pairing matrix on the basis", 0},
      {"integrate", "integral of a class", 1},
      {"verify", "check products against the toric oracle", -1},
      {"mirror", "mirror superpotential and critical relations", 0},
  };
  for (const auto &s : specs) {
    CLI::App *sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    if (s.exprs != 0) {
      auto *opt = sub->add_option("classes", o.exprs,
                                  s.exprs > 0 ? "class expressions" : "two classes and an optional claimed product");
      if (s.exprs > 0)
        opt->expected(s.exprs)->required();
    }
    if (std::string(s.name) == "reduce" || std::string(s.name) == "verify")
      sub->add_flag("--quantum", o.quantum, "use the quantum product");
    if (std::string(s.name) == "verify") {
      sub->add_flag("--all", o.all, "check every unordered pair of basis elements");
      sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    }
    if (std::string(s.name) == "mirror")
      sub->add_option("--sources", o.sources, "source vertex of the basis arrow into each vertex")
          ->delimiter(',');
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? exit_code::ok : exit_code::usage;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return detail::dispatch(command, o, out);
  } catch (const ParseError &e) {
    err << "qflag: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const ValidationError &e) {
    err << "qflag: " << e.what() << "\n";
    return exit_code::invalid;
  } catch (const std::exception &e) {
    err << "qflag: " << e.what() << "\n";
    return exit_code::invalid;
  }
}

} // namespace qflag
