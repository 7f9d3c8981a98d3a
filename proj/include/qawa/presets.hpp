#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qawa/algebra.hpp"

namespace qawa::presets {

namespace detail {

inline AlgebraData group_algebra_cyclic(int d) {
  // kC_d with basis e, g, ..., g^{d-1}; trace = coefficient of the identity.
  AlgebraData a;
  for (int i = 0; i < d; ++i)
    a.names.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  a.parity.assign(d, 0);
  a.mul.assign(d, std::vector<AVec>(d, AVec(d, Scalar(0))));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a.mul[i][j][(i + j) % d] = Scalar(1);
  a.unit.assign(d, Scalar(0));
  a.unit[0] = Scalar(1);
  a.trace.assign(d, Scalar(0));
  a.trace[0] = Scalar(1);
  return a;
}

}  // namespace detail

inline AlgebraData trivial_data() {
  AlgebraData a;
  a.names = {"1"};
  a.parity = {0};
  a.mul = {{AVec{Scalar(1)}}};
  a.unit = {Scalar(1)};
  a.trace = {Scalar(1)};
  return a;
}

inline AlgebraData kc2_data() { return detail::group_algebra_cyclic(2); }
inline AlgebraData kc3_data() { return detail::group_algebra_cyclic(3); }

// k[c]/(c^2) with tr(1) = 0, tr(c) = 1.
inline AlgebraData dual_numbers_data() {
  AlgebraData a;
  a.names = {"1", "c"};
  a.parity = {0, 0};
  a.mul.assign(2, std::vector<AVec>(2, AVec(2, Scalar(0))));
  a.mul[0][0][0] = Scalar(1);
  a.mul[0][1][1] = Scalar(1);
  a.mul[1][0][1] = Scalar(1);
  // c * c = 0
  a.unit = {Scalar(1), Scalar(0)};
  a.trace = {Scalar(0), Scalar(1)};
  return a;
}

// Exterior superalgebra on two odd generators, tr nonzero only on th1*th2.
inline AlgebraData ext2_data() {
  AlgebraData a;
  a.names = {"1", "th1", "th2", "th12"};
  a.parity = {0, 1, 1, 0};
  a.mul.assign(4, std::vector<AVec>(4, AVec(4, Scalar(0))));
  auto set = [&](int i, int j, int k, long long c) { a.mul[i][j][k] = Scalar(c); };
  for (int j = 0; j < 4; ++j) {
    set(0, j, j, 1);
    if (j != 0) set(j, 0, j, 1);
  }
  set(1, 2, 3, 1);   // th1 th2 = th12
  set(2, 1, 3, -1);  // th2 th1 = -th12
  // all other products of odd generators and anything involving th12 vanish
  a.unit = {Scalar(1), Scalar(0), Scalar(0), Scalar(0)};
  a.trace = {Scalar(0), Scalar(0), Scalar(0), Scalar(1)};
  return a;
}

inline std::vector<std::string> names() { return {"trivial", "kc2", "kc3", "dual", "ext2"}; }

inline AlgebraPtr by_name(const std::string& name) {
  if (name == "trivial") return Algebra::load(trivial_data(), name);
  if (name == "kc2") return Algebra::load(kc2_data(), name);
  if (name == "kc3") return Algebra::load(kc3_data(), name);
  if (name == "dual") return Algebra::load(dual_numbers_data(), name);
  if (name == "ext2") return Algebra::load(ext2_data(), name);
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace qawa::presets
