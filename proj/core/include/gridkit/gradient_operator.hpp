#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gridkit/psf_config.hpp"
#include "gridkit/sample_set.hpp"

namespace gridkit {

/// One entry of the symmetric PSD gradient matrix A, where grad f0(w) = A w
/// for the exponential-weighted squared-PSF objective
/// f0(w) = Int_{[-N,N]^D} exp(-sum |x_d|/gamma_d) |s_w(x)|^2 dx.
/// Per axis, with nu = 2 pi |k_j,d - k_l,d|:
///   t_d = 2 gamma (1 - e^{-N/gamma})                       at equal coordinates,
///   t_d = 2/(1+gamma^2 nu^2) [e^{-N/gamma}(gamma^2 nu sin(nu N)
///         - gamma cos(nu N)) + gamma]                      otherwise,
/// and the entry is 2 * prod_d t_d.  Swapping j and l gives the identical
/// floating-point value.
double gradient_matrix_entry(std::span<const double> k_j, std::span<const double> k_l,
                             const PsfConfig& cfg);

enum class GradientMode { dense, matrix_free, automatic };

/// The gradient matrix as an operator: dense when M^2 doubles fit in the
/// memory budget, otherwise generated row-block-wise on the fly.  Both modes
/// produce bitwise-identical matvec results.
class GradientOperator {
 public:
  static constexpr std::size_t kDefaultBudgetBytes = std::size_t{2} << 30;  // 2 GiB

  GradientOperator(const SampleSet& s, const PsfConfig& cfg,
                   GradientMode mode = GradientMode::automatic,
                   std::size_t budget_bytes = kDefaultBudgetBytes);

  std::size_t size() const { return m_; }
  bool is_dense() const { return !dense_.empty(); }

  /// out = A w.  Row-parallel; per-row sums use fixed-block pairwise
  /// summation, so results do not depend on the worker count.
  void apply(std::span<const double> w, std::span<double> out) const;

  double entry(std::size_t l, std::size_t j) const;

 private:
  void fill_row(std::size_t l, std::span<double> row) const;

  std::size_t m_ = 0;
  int dim_ = 0;
  std::vector<double> coords_;   // row-major copy of the sample coordinates
  std::vector<double> t_equal_;  // per-axis equal-coordinate factor
  PsfConfig cfg_;
  std::vector<double> dense_;  // M x M when dense, empty when matrix-free
};

/// f0(w) = 0.5 * w^T A w.
double objective_f0(std::span<const double> w, const GradientOperator& op);

}  // namespace gridkit
