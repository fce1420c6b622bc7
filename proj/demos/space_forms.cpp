// Prints the middle-degree operator of a few space forms and products, and
// which of them commute with the Hodge star.

#include "curvlab/curvlab.hpp"

#include <iostream>

using namespace curvlab;

int main() {
  auto sf = space_form(4, Rational(1));
  std::cout << "C_2 of the round S^4 (eigenvalue 1):\n" << operator_table(thorpe_operator(sf.tensor, 2)) << "\n";

  std::cout << "products of space forms, curvatures c1 and c2:\n";
  std::cout << "  n  c1  c2  *C = C*  parity rule\n";
  for (unsigned n : {1u, 2u})
    for (int c2 : {1, -1, 2}) {
      Rational c1 = 1;
      auto e = product_space_forms(2 * n, c1, 2 * n, Rational(c2));
      bool commutes = commutes_with_star(thorpe_operator(e.tensor, 2 * n)).commutes;
      bool rule = product_space_form_rule(c1, Rational(c2), n);
      std::cout << "  " << n << "   1  " << std::setw(2) << c2 << "  " << std::setw(7) << (commutes ? "yes" : "no")
                << "  " << (rule ? "yes" : "no") << "\n";
    }

  auto cp4 = complex_space_form(4, Rational(1));
  std::cout << "\nCP^4 model: *C_4 = C_4* " << (commutes_with_star(thorpe_operator(cp4.tensor, 4)).commutes ? "yes" : "no")
            << ", *W_4 = W_4* " << (commutes_with_star(weyl_operator(cp4.tensor, 4)).commutes ? "yes" : "no") << "\n";
  return 0;
}
