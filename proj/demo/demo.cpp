#include "ncpart.hpp"

#include <iostream>

int main() {
  using namespace ncpart;

  std::cout << "3-noncrossing partitions of [n]:";
  for (int n = 1; n <= 10; ++n) std::cout << ' ' << count_noncrossing_partitions(n);
  std::cout << "\n2-regular ones:";
  for (int n = 1; n <= 10; ++n) std::cout << ' ' << count_two_regular_partitions(n);
  std::cout << "\n\n";

  PartitionSampler sampler(Variant::plain, 12);
  RandomStream rng(2024);
  for (int k = 0; k < 3; ++k) {
    SetPartition p = sampler(rng);
    std::cout << format_partition(p) << '\n' << render_ascii(p) << '\n';
  }

  PartitionSampler regular(Variant::two_regular, 12);
  SetPartition q = regular(rng);
  std::cout << format_partition(q) << "  arcs " << format_arcs(canonical_arcs(q)) << '\n';
}
