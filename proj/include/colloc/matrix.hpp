#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace colloc {

// execution policy for the fill/assembly kernels; Parallel uses OpenMP over
// independent output entries and is bitwise-identical to Serial
enum class Exec { Serial, Parallel };

// minimal dense row-major matrix
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// dense symmetric matrix with full storage; both triangles are kept equal
struct SymMatrix {
  int dim = 0;
  std::vector<double> a;

  SymMatrix() = default;
  explicit SymMatrix(int d) : dim(d), a(static_cast<std::size_t>(d) * d, 0.0) {}

  double& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  double at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }

  // copy the upper triangle into the lower one
  void mirror_upper() {
    for (int i = 1; i < dim; ++i)
      for (int j = 0; j < i; ++j) at(i, j) = at(j, i);
  }
};

}  // namespace colloc
