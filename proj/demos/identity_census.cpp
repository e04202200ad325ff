// Enumerates all loops of a small order and counts how many satisfy each
// identity. Usage: demo_identity_census [order]

#include <iostream>
#include <map>

#include "loopkit.hpp"

using namespace loopkit;

int main(int argc, char** argv) {
  int order = argc > 1 ? std::stoi(argv[1]) : 5;
  std::map<std::string, uint64_t> counts;
  uint64_t total = enumerate_loops(order, 0, [&](const LoopTable& q) {
    for (IdentityKind k : {IdentityKind::right_bol, IdentityKind::left_bol,
                           IdentityKind::moufang, IdentityKind::rip, IdentityKind::lip}) {
      if (check_identity(q, k).holds) ++counts[to_string(k)];
    }
    if (check_associativity(q).holds) ++counts["associative"];
    return true;
  });
  std::cout << total << " loops of order " << order << "\n";
  for (auto& [name, c] : counts) std::cout << "  " << name << ": " << c << "\n";
  return 0;
}
