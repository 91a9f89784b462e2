#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the code paths it is used to check.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Set partitions of {1..n}, unpruned, straight from the definition.

inline void all_partitions(int n, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> go = [&](int x) {
    if (x > n) {
      visit(blocks);
      return;
    }
    // Index loop: the recursion appends to `blocks`.
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      blocks[i].push_back(x);
      go(x + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({x});
    go(x + 1);
    blocks.pop_back();
  };
  go(1);
}

inline bool has_adjacent_pair(const std::vector<std::vector<int>>& blocks) {
  for (const auto& b : blocks) {
    for (int x : b) {
      if (std::find(b.begin(), b.end(), x + 1) != b.end()) return true;
    }
  }
  return false;
}

inline bool interleaves(const std::vector<int>& A, const std::vector<int>& B) {
  for (int a : A)
    for (int c : A)
      for (int b : B)
        for (int d : B)
          if (a < b && b < c && c < d) return true;
  return false;
}

inline bool is_valid_relation(const std::vector<std::vector<int>>& blocks) {
  if (has_adjacent_pair(blocks)) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if (i != j && interleaves(blocks[i], blocks[j])) return false;
  return true;
}

inline std::vector<std::vector<int>> canonical(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

// ---------------------------------------------------------------------------
// Roots of f^k(z) - z for f(z) = z^d + c: expand the polynomial, take the
// eigenvalues of its companion matrix, then polish each by Newton on the
// iterated map evaluated directly.

inline std::vector<cplx> poly_mul(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Coefficients, lowest degree first.
inline std::vector<cplx> iterate_minus_identity(int d, cplx c, unsigned k) {
  std::vector<cplx> p = {0.0, 1.0};
  for (unsigned step = 0; step < k; ++step) {
    std::vector<cplx> q = {1.0};
    for (int i = 0; i < d; ++i) q = poly_mul(q, p);
    q[0] += c;
    p = q;
  }
  p[1] -= 1.0;
  return p;
}

inline std::vector<cplx> periodic_points(int d, cplx c, unsigned k) {
  const std::vector<cplx> p = iterate_minus_identity(d, c, k);
  const int n = static_cast<int>(p.size()) - 1;
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / p[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<cplx> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (cplx& z : roots) {
    for (int it = 0; it < 50; ++it) {
      cplx w = z;
      cplx dw = 1.0;
      for (unsigned s = 0; s < k; ++s) {
        cplx pw = 1.0;
        for (int i = 1; i < d; ++i) pw *= w;
        dw *= static_cast<double>(d) * pw;
        w = pw * w + c;
      }
      const cplx step = (w - z) / (dw - 1.0);
      z -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
  }
  return roots;
}

}  // namespace oracle
