// Builds the full holomorph of Z_n, prints its table, and runs the theorem
// suite on the instance. Usage: demo_holomorph_tour [n]

#include <iostream>

#include "loopkit.hpp"

using namespace loopkit;

int main(int argc, char** argv) {
  int n = argc > 1 ? std::stoi(argv[1]) : 3;
  LoopTable q = cyclic_group(n);
  AutGroup a = automorphism_group(q);
  HolomorphLoop h = build_holomorph(q, a);
  std::cout << "Hol(Z_" << n << ") has order " << h.table.order() << ":\n";
  write_loop(std::cout, h.table);

  Instance inst = Instance::make(q, SelfMap::identity(n), a);
  for (const TheoremReport& r : verify_all(inst))
    std::cout << r.theorem_id << ": " << (r.vacuous ? "vacuous" : r.overall ? "pass" : "FAIL")
              << "\n";
  return 0;
}
