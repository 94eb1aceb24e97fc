// Walk-through of the main objects for the unit monopole a = e_123 on R^3.

#include <iostream>

#include "magtrans/magtrans.hpp"

using namespace magtrans;

int main() {
  const MagneticSystem sys(AntisymTensor3::epsilon(3));
  const RationalVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};

  std::cout << "c3(e1, e2, e3)              = " << c3(sys, e1, e2, e3) << " turns\n";
  std::cout << "  by integrating the 3-form = " << c3_by_integration(sys, e1, e2, e3) << '\n';
  std::cout << "face phase d(e1, e2)        = " << face_phase(sys, e1, e2) << '\n';

  const auto b = potential(sys.tensor());
  const RationalVector g1{1, 2, 0}, g2{Rational(1, 2), 0, 3};
  std::cout << "holonomy over the triangle family (g1, g2) = "
            << holonomy(b, standard_triangle_family(g1, g2)) << '\n';
  std::cout << "surface integral of B over the same triangle = "
            << integrate2(b, s_chain(g1, g2)) << '\n';

  // Fock side: three colors, window [-6, 6], twisting form omega_12 = 1.
  AntisymForm2 omega(3);
  omega.set(0, 1, 1);
  const ModeWindow w(3, 6, 2);
  const TranslationOp gp({1, 0, 0}, omega), gq({0, 1, 0}, omega);
  std::cout << "g(p)g(q) = exp(2 pi i C) g(p+q) with C = " << product_cocycle(gp, gq, w)
            << " (x-dependent)\n";

  const auto rep = equivalence_report(omega);
  std::cout << "equivalent to the lattice cocycle with alpha = " << rep.alpha << ": "
            << (rep.ok() ? "yes" : "no") << '\n';

  const auto t = torus_sweep(MagneticSystem(AntisymTensor3::epsilon(3), GroupKind::torus), 2);
  std::cout << "torus: c3 trivial on " << t.triples << " integer triples: "
            << (t.trivial ? "yes" : "no") << '\n';
}
