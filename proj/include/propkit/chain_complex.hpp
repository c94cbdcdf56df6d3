#pragma once

#include "propkit/linalg.hpp"

#include <string>
#include <vector>

namespace propkit {

// C_0 <- C_1 <- ... <- C_top. maps[k] is d_k : C_k -> C_{k-1}, stored as
// a dims[k-1] x dims[k] matrix; maps[0] is empty.
struct ChainComplex {
  std::vector<int> dims;
  std::vector<Matrix> maps;
  std::vector<std::vector<std::string>> labels;  // optional basis names

  int top() const { return static_cast<int>(dims.size()) - 1; }
  // Throws InvariantError naming a nonzero entry of some d_{k-1} d_k.
  void check_d_squared() const;
};

ChainComplex zero_complex(int top);
std::vector<int> homology_ranks(const ChainComplex& c);
long euler_characteristic(const ChainComplex& c);

}  // namespace propkit
