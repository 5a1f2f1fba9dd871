// Decides a few LR positivity questions, including one with 60-digit parts.

#include <lrpos/lrpos.hpp>

#include <iostream>

int main() {
  using namespace lrpos;

  const Partition alpha{2, 1}, beta{2, 1}, gamma{3, 2, 1};
  const auto d = decide_positive(alpha, beta, gamma);
  std::cout << render(alpha) << " x " << render(beta) << " -> " << render(gamma) << ": "
            << (d.positive ? "positive" : "zero") << " (" << route_name(d.route) << ", " << d.pivot_count
            << " pivots)\n";
  if (d.rational_witness)
    for (const auto& [v, x] : *d.rational_witness) std::cout << "  r^" << v.row << "_" << v.letter << " = " << x << '\n';
  std::cout << "  exact coefficient: " << count_lr_tableaux(alpha, beta, gamma, d.rank) << '\n';

  const BigInt q("1000000000000000000000000000000000000000000000000000000000000");
  const auto big = decide_positive(scale(alpha, q), scale(beta, q), scale(gamma, q));
  std::cout << "scaled by 10^60: " << (big.positive ? "positive" : "zero") << " in " << big.elapsed.count()
            << " us\n";

  const auto zero = decide_positive(Partition{1, 1}, Partition{2}, Partition{2, 2});
  std::cout << "1,1 x 2 -> 2,2: " << (zero.positive ? "positive" : "zero") << " (" << route_name(zero.route) << ")\n";
}
