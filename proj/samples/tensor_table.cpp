// Prints V_alpha (x) V_beta for GL_n and checks dimensions add up.
// Usage: tensor_table [alpha] [beta] [n]

#include <lrpos/lrpos.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using namespace lrpos;
  try {
    const auto alpha = parse_partition(argc > 1 ? argv[1] : "2,1");
    const auto beta = parse_partition(argc > 2 ? argv[2] : "2,1");
    const Rank n = argc > 3 ? std::stoul(argv[3]) : 3;

    const auto d = decompose_tensor(alpha, beta, n);
    BigInt total = 0;
    for (const auto& [gamma, mult] : d.terms) {
      const auto dim = weyl_dimension(gamma, n);
      std::cout << mult << " x V(" << render(gamma) << ")  dim " << dim << '\n';
      total += mult * dim;
    }
    std::cout << "sum " << total << " = " << weyl_dimension(alpha, n) << " * " << weyl_dimension(beta, n) << '\n';
    return dimension_identity_holds(d, alpha, beta) ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
