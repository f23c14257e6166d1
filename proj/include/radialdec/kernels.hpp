#pragma once

#include <cstddef>
#include <exception>
#include <span>
#include <string_view>

#include <Eigen/Dense>

namespace radialdec::kernels {

// Every per-node and per-column kernel runs either as a plain serial loop (the
// reference used in tests) or as an OpenMP parallel loop. Each iteration
// writes only its own output slots, so both produce identical results.
enum class Backend { Serial, OpenMP };

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::string_view to_string(Backend b);
int thread_count();

template <class Fn>
void for_each(Backend backend, std::size_t count, Fn&& fn) {
  if (backend == Backend::Serial) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(radialdec_kernel_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// y = A x with rows distributed over threads. Each row is a fixed-order dot
// product so the result does not depend on the thread count.
void gemv(Backend backend, const RowMatrix& a, std::span<const double> x,
          std::span<double> y);

// y = A^T x, the column-oriented counterpart used by projections.
void gemv_transposed(Backend backend, const Eigen::MatrixXd& a, std::span<const double> x,
                     std::span<double> y);

}  // namespace radialdec::kernels
