#include "radialdec/kernels.hpp"

#include <omp.h>

#include "radialdec/error.hpp"

namespace radialdec::kernels {

std::string_view to_string(Backend b) { return b == Backend::Serial ? "serial" : "openmp"; }

int thread_count() { return omp_get_max_threads(); }

void gemv(Backend backend, const RowMatrix& a, std::span<const double> x,
          std::span<double> y) {
  if (x.size() != static_cast<std::size_t>(a.cols()) ||
      y.size() != static_cast<std::size_t>(a.rows())) {
    throw LengthMismatchError("gemv dimension mismatch");
  }
  const Eigen::Index cols = a.cols();
  for_each(backend, y.size(), [&](std::size_t i) {
    const double* row = a.row(static_cast<Eigen::Index>(i)).data();
    double s = 0.0;
    for (Eigen::Index j = 0; j < cols; ++j) s += row[j] * x[static_cast<std::size_t>(j)];
    y[i] = s;
  });
}

void gemv_transposed(Backend backend, const Eigen::MatrixXd& a, std::span<const double> x,
                     std::span<double> y) {
  if (x.size() != static_cast<std::size_t>(a.rows()) ||
      y.size() != static_cast<std::size_t>(a.cols())) {
    throw LengthMismatchError("gemv_transposed dimension mismatch");
  }
  const Eigen::Index rows = a.rows();
  for_each(backend, y.size(), [&](std::size_t j) {
    const auto c = static_cast<Eigen::Index>(j);
    const double* col = a.col(c).data();
    double s = 0.0;
    for (Eigen::Index i = 0; i < rows; ++i) s += col[i] * x[static_cast<std::size_t>(i)];
    y[j] = s;
  });
}

}  // namespace radialdec::kernels
