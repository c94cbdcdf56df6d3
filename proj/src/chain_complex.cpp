#include "propkit/chain_complex.hpp"

#include "propkit/errors.hpp"

namespace propkit {

void ChainComplex::check_d_squared() const {
  auto basis_name = [this](int k, int idx) {
    if (static_cast<std::size_t>(k) < labels.size() &&
        static_cast<std::size_t>(idx) < labels[k].size())
      return labels[k][idx];
    return "#" + std::to_string(idx);
  };
  if (maps.size() != dims.size()) throw InvariantError("chain complex: maps and spaces disagree");
  for (int k = 1; k <= top(); ++k) {
    const Matrix& d = maps[k];
    if (d.rows != dims[k - 1] || d.cols != dims[k])
      throw InvariantError("chain complex: d_" + std::to_string(k) + " has the wrong shape");
  }
  for (int k = 2; k <= top(); ++k) {
    Matrix dd = maps[k - 1] * maps[k];
    for (int i = 0; i < dd.rows; ++i)
      for (int j = 0; j < dd.cols; ++j)
        if (dd.at(i, j) != 0) {
          std::string from = basis_name(k, j), to = basis_name(k - 2, i);
          throw InvariantError("d^2 != 0: d_" + std::to_string(k - 1) + " d_" + std::to_string(k) +
                               " sends basis element " + from + " of C_" + std::to_string(k) +
                               " to coefficient " + to_string(dd.at(i, j)) + " on " + to +
                               " of C_" + std::to_string(k - 2));
        }
  }
}

ChainComplex zero_complex(int top) {
  ChainComplex c;
  c.dims.assign(top + 1, 0);
  c.maps.assign(top + 1, Matrix());
  return c;
}

std::vector<int> homology_ranks(const ChainComplex& c) {
  c.check_d_squared();
  int T = c.top();
  std::vector<int> rank(T + 2, 0);
  for (int k = 1; k <= T; ++k) rank[k] = rank_bareiss(c.maps[k]);
  std::vector<int> h(T + 1);
  for (int k = 0; k <= T; ++k) h[k] = c.dims[k] - rank[k] - rank[k + 1];
  return h;
}

long euler_characteristic(const ChainComplex& c) {
  long e = 0;
  for (int k = 0; k <= c.top(); ++k) e += (k % 2 ? -1 : 1) * static_cast<long>(c.dims[k]);
  return e;
}

}  // namespace propkit
