#include "bhdimer/tridiagonal_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "bhdimer/error.hpp"

namespace bhdimer {

namespace {

// In-place QL on (d, e), e[i] coupling i and i+1, e[n-1] unused. On return d
// holds the eigenvalues (unsorted) and column j of z the matching vector.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, RealMatrix& z, int max_iter) {
  const int n = static_cast<int>(d.size());
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const auto nrows = z.rows();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      // Find the first negligible off-diagonal element at or below l.
      int m = l;
      for (; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (iter++ == max_iter) {
        throw ConvergenceFailure(static_cast<std::size_t>(l), max_iter);
      }

      // Shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));

      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;

        for (std::size_t k = 0; k < nrows; ++k) {
          auto row = z.row(k);
          f = row[i + 1];
          row[i + 1] = s * row[i] + c * f;
          row[i] = c * row[i] - s * f;
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

}  // namespace

Spectrum eigendecompose(const TridiagonalHamiltonian& h, const EigenSolverOptions& options) {
  const std::size_t n = h.size();
  if (n == 0 || h.offdiag.size() + 1 != n) {
    throw DimensionMismatch("eigendecompose: offdiag must have size() - 1 entries");
  }

  std::vector<double> d = h.diag;
  std::vector<double> e(n, 0.0);
  std::copy(h.offdiag.begin(), h.offdiag.end(), e.begin());
  RealMatrix z = RealMatrix::identity(n);

  ql_implicit(d, e, z, options.max_iterations_per_eigenvalue);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&d](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors = RealMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = d[order[j]];
    for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, j) = z(k, order[j]);
  }
  return out;
}

}  // namespace bhdimer
