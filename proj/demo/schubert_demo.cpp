// Quantum Schubert calculus on the flag variety Fl(4; 2, 1), built as the
// quiver 0 =4=> 1 -> 2 with dimension vector (2, 1).

#include "qflag/abelian_oracle.hpp"
#include "qflag/expression.hpp"
#include "qflag/mirror.hpp"
#include "qflag/ring_classical.hpp"
#include "qflag/ring_quantum.hpp"

#include <iostream>

int main() {
  using namespace qflag;
  Quiver q(QuiverSpec{2, {2, 1}, {{0, 1, 4}, {1, 2, 1}}});
  ClassicalRing classical(q);
  QuantumRing quantum(q);
  AbelianOracle oracle(q);

  std::cout << "dimension " << dimension(q) << ", basis:";
  for (const auto &b : classical.basis())
    std::cout << "  " << format_class(CohClass(b));
  std::cout << "\n\n";

  for (const char *text : {"s1[3]", "s1[3,1]", "s1[3,2]", "s2[2]"}) {
    QuantumClass reduced = quantum.reduce(parse_class(text, q));
    std::cout << text << " = " << format_class(reduced) << "\n";
  }

  QuantumClass a = parse_class("s1[1]", q), b = parse_class("s1[2,1] s2[1]", q);
  QuantumClass ab = quantum.multiply(a, b);
  std::cout << "\ns1[1] * s1[2,1] s2[1] = " << format_class(ab) << "\n";
  std::cout << "checked against the torus quotient: "
            << (oracle.verify_product(a, b, ab, Mode::quantum) ? "agrees" : "DISAGREES") << "\n";

  CohClass point = parse_classical("s1[2,2] s2[1]", q);
  std::cout << "integral of s1[2,2] s2[1]: " << oracle.martin_integrate(point).get_str() << "\n\n";

  Superpotential sp(q);
  std::cout << emit_mirror(sp);
}
