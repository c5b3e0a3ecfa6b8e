// Prints the admissible fusion rules at kappa = 3/p for a small p, then
// reconstructs them from the eigenvector matrix.

#include <cstdlib>
#include <iostream>

#include "sl3ext/sl3ext.hpp"

int main(int argc, char** argv) {
  using namespace sl3ext;
  const int p = argc > 1 ? std::atoi(argv[1]) : 2;
  try {
    const FusionTable t = fusion_table(p);
    std::cout << "alcove C_" << p << " (" << t.size() << " elements)\n";
    for (const auto& y : t.labels)
      std::cout << "  " << to_string(y) << "  iota " << to_string(iota(y)) << "  dim " << dimension(y) << '\n';

    std::cout << "\nnonzero products\n";
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t y = x; y < t.size(); ++y) {
        std::cout << "  " << t.labels[x] << " x " << t.labels[y] << " =";
        const char* sep = " ";
        for (std::size_t z = 0; z < t.size(); ++z)
          if (const long long n = t.at(x, y, z); n != 0) {
            std::cout << sep << n << '[' << t.labels[z] << ']';
            sep = " + ";
          }
        std::cout << '\n';
      }

    const PasquierVerlinde pv = pasquier_verlinde_with_defect(eigen_data(p));
    std::cout << "\nreconstruction from psi: " << (pv.table == t ? "identical" : "DIFFERENT")
              << ", max distance to an integer " << pv.max_defect << '\n';
    return pv.table == t ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
