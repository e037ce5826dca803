#include "gridkit/gradient_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gridkit/errors.hpp"
#include "gridkit/numeric.hpp"
#include "gridkit/parallel.hpp"

namespace gridkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kRowBlock = 256;

// Per-axis factor for distinct coordinates.  nu must be the nonnegative
// frequency difference 2 pi |dk|; the factor is even in the sign of dk, and
// using |dk| makes the (j, l) <-> (l, j) symmetry exact in floating point.
inline double t_unequal(double nu, double gamma, double half_fov) {
  const double g2n = gamma * gamma * nu;
  const double e = std::exp(-half_fov / gamma);
  const double s = std::sin(nu * half_fov);
  const double c = std::cos(nu * half_fov);
  return 2.0 / (1.0 + gamma * gamma * nu * nu) * (e * (g2n * s - gamma * c) + gamma);
}

inline double t_equal(double gamma, double half_fov) {
  // 2 gamma (1 - e^{-N/gamma}); expm1 keeps precision when N/gamma is tiny.
  return 2.0 * gamma * (-std::expm1(-half_fov / gamma));
}

}  // namespace

double gradient_matrix_entry(std::span<const double> k_j, std::span<const double> k_l,
                             const PsfConfig& cfg) {
  const int dim = static_cast<int>(k_j.size());
  if (k_l.size() != k_j.size())
    throw std::invalid_argument("gradient_matrix_entry: dimension mismatch");
  cfg.validate(dim);

  double prod = 2.0;
  for (int d = 0; d < dim; ++d) {
    const auto i = static_cast<std::size_t>(d);
    if (k_j[i] == k_l[i]) {
      prod *= t_equal(cfg.gamma[i], cfg.half_fov[i]);
    } else {
      const double nu = 2.0 * kPi * std::abs(k_l[i] - k_j[i]);
      prod *= t_unequal(nu, cfg.gamma[i], cfg.half_fov[i]);
    }
  }
  return prod;
}

GradientOperator::GradientOperator(const SampleSet& s, const PsfConfig& cfg, GradientMode mode,
                                   std::size_t budget_bytes)
    : m_(s.size()), dim_(s.dim()), coords_(s.flat().begin(), s.flat().end()), cfg_(cfg) {
  cfg_.validate(dim_);
  for (int d = 0; d < dim_; ++d) {
    const auto i = static_cast<std::size_t>(d);
    t_equal_.push_back(t_equal(cfg_.gamma[i], cfg_.half_fov[i]));
  }

  // m <= budget/(8m) avoids overflow in the m^2 byte count.
  const bool fits = m_ <= budget_bytes / sizeof(double) / m_;
  bool use_dense = false;
  switch (mode) {
    case GradientMode::dense:
      if (!fits)
        throw MemoryBudgetError(
            "build_gradient_operator: dense matrix exceeds the memory budget; "
            "use the matrix-free mode");
      use_dense = true;
      break;
    case GradientMode::matrix_free:
      use_dense = false;
      break;
    case GradientMode::automatic:
      use_dense = fits;
      break;
  }

  if (use_dense) {
    dense_.resize(m_ * m_);
    parallel_for(0, static_cast<std::int64_t>(m_), [&](std::int64_t lo, std::int64_t hi) {
      for (std::int64_t l = lo; l < hi; ++l)
        fill_row(static_cast<std::size_t>(l),
                 {dense_.data() + static_cast<std::size_t>(l) * m_, m_});
    });
  }
}

double GradientOperator::entry(std::size_t l, std::size_t j) const {
  if (!dense_.empty()) return dense_[l * m_ + j];
  const double* kl = coords_.data() + l * static_cast<std::size_t>(dim_);
  const double* kj = coords_.data() + j * static_cast<std::size_t>(dim_);
  double prod = 2.0;
  for (int d = 0; d < dim_; ++d) {
    const auto i = static_cast<std::size_t>(d);
    if (kj[d] == kl[d]) {
      prod *= t_equal_[i];
    } else {
      const double nu = 2.0 * kPi * std::abs(kl[d] - kj[d]);
      prod *= t_unequal(nu, cfg_.gamma[i], cfg_.half_fov[i]);
    }
  }
  return prod;
}

void GradientOperator::fill_row(std::size_t l, std::span<double> row) const {
  const double* kl = coords_.data() + l * static_cast<std::size_t>(dim_);
  for (std::size_t j = 0; j < m_; ++j) {
    const double* kj = coords_.data() + j * static_cast<std::size_t>(dim_);
    double prod = 2.0;
    for (int d = 0; d < dim_; ++d) {
      const auto i = static_cast<std::size_t>(d);
      if (kj[d] == kl[d]) {
        prod *= t_equal_[i];
      } else {
        const double nu = 2.0 * kPi * std::abs(kl[d] - kj[d]);
        prod *= t_unequal(nu, cfg_.gamma[i], cfg_.half_fov[i]);
      }
    }
    row[j] = prod;
  }
}

void GradientOperator::apply(std::span<const double> w, std::span<double> out) const {
  if (w.size() != m_ || out.size() != m_)
    throw std::invalid_argument("GradientOperator::apply: length mismatch");

  if (!dense_.empty()) {
    parallel_for(0, static_cast<std::int64_t>(m_), [&](std::int64_t lo, std::int64_t hi) {
      for (std::int64_t l = lo; l < hi; ++l)
        out[static_cast<std::size_t>(l)] =
            fixed_block_dot({dense_.data() + static_cast<std::size_t>(l) * m_, m_}, w);
    });
    return;
  }

  const std::size_t nblocks = (m_ + kRowBlock - 1) / kRowBlock;
  parallel_for(0, static_cast<std::int64_t>(nblocks), [&](std::int64_t b0, std::int64_t b1) {
    std::vector<double> row(m_);
    for (std::int64_t b = b0; b < b1; ++b) {
      const std::size_t lo = static_cast<std::size_t>(b) * kRowBlock;
      const std::size_t hi = std::min(m_, lo + kRowBlock);
      for (std::size_t l = lo; l < hi; ++l) {
        fill_row(l, row);
        out[l] = fixed_block_dot(row, w);
      }
    }
  });
}

double objective_f0(std::span<const double> w, const GradientOperator& op) {
  std::vector<double> aw(w.size());
  op.apply(w, aw);
  return 0.5 * fixed_block_dot(w, aw);
}

}  // namespace gridkit
