#pragma once

// Haar-random unitaries and Monte Carlo estimates of word-measure moments.

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "wml/weingarten.hpp"
#include "wml/words.hpp"

namespace wml {

using ComplexMatrix = Eigen::MatrixXcd;

struct UnitarySample {
  int n = 0;
  ComplexMatrix matrix;
};

inline constexpr double kUnitarityTolerance = 1e-10;

/// max |(U*U - I)_{ij}|
inline double unitarity_defect(const ComplexMatrix& u) {
  const auto n = u.rows();
  return (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

/// Ginibre matrix, QR, then Q diag(R_ii / |R_ii|) so that R has positive
/// real diagonal. The result is Haar distributed on U(n).
template <typename Rng>
UnitarySample sample_haar(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_haar: n must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      double re = gauss(rng);
      double im = gauss(rng);
      z(i, j) = {re, im};
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    std::complex<double> d = r(j, j);
    double a = std::abs(d);
    q.col(j) *= a > 0 ? d / a : std::complex<double>(1.0, 0.0);
  }
  UnitarySample s{n, std::move(q)};
  if (unitarity_defect(s.matrix) > kUnitarityTolerance)
    throw std::runtime_error("sample_haar: unitarity check failed");
  return s;
}

struct Estimate {
  std::complex<double> mean;
  double standard_error = 0.0;  // hypot of the real and imaginary standard errors
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int n = 0;
  double max_unitarity_defect = 0.0;
  std::string rng = "mt19937_64, stream per chunk of 1000 samples seeded by splitmix64(seed ^ chunk)";
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline ComplexMatrix evaluate_word(const Word& w, const std::vector<ComplexMatrix>& us,
                                   const std::vector<ComplexMatrix>& inverses, int n) {
  ComplexMatrix m = ComplexMatrix::Identity(n, n);
  for (Letter l : w) {
    const auto g = static_cast<std::size_t>(l.generator() - 1);
    m = m * (l.sign() > 0 ? us[g] : inverses[g]);
  }
  return m;
}

}  // namespace detail

inline constexpr std::uint64_t kChunkSize = 1000;

/// Estimates E_w[prod tr(w^{m_i})] on U(n) from `samples` independent draws.
inline Estimate estimate_moment(const Word& w, const TraceMonomial& t, int n, std::uint64_t samples,
                                std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("estimate_moment: n must be positive");
  if (samples < 2) throw std::invalid_argument("estimate_moment: need at least two samples");
  const int r = std::max(1, std::max(w.rank(), w.support_rank()));
  Estimate est;
  est.samples = samples;
  est.seed = seed;
  est.n = n;
  // Per-chunk sums, reduced in chunk order.
  double sum_re = 0, sum_im = 0, sq_re = 0, sq_im = 0;
  const std::uint64_t chunks = (samples + kChunkSize - 1) / kChunkSize;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    std::mt19937_64 rng(detail::splitmix64(seed ^ c));
    const std::uint64_t count = std::min(kChunkSize, samples - c * kChunkSize);
    double cr = 0, ci = 0, cr2 = 0, ci2 = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
      std::vector<ComplexMatrix> us, inv;
      for (int g = 0; g < r; ++g) {
        UnitarySample u = sample_haar(n, rng);
        est.max_unitarity_defect = std::max(est.max_unitarity_defect, unitarity_defect(u.matrix));
        inv.push_back(u.matrix.adjoint());
        us.push_back(std::move(u.matrix));
      }
      const ComplexMatrix wm = detail::evaluate_word(w, us, inv, n);
      const ComplexMatrix wi = wm.adjoint();
      std::map<int, ComplexMatrix> powers;  // cached w^m per sample
      auto power = [&](int m) -> const ComplexMatrix& {
        auto it = powers.find(m);
        if (it != powers.end()) return it->second;
        ComplexMatrix acc = ComplexMatrix::Identity(n, n);
        for (int i = 0; i < std::abs(m); ++i) acc = acc * (m > 0 ? wm : wi);
        return powers.emplace(m, std::move(acc)).first->second;
      };
      std::complex<double> value(1.0, 0.0);
      for (int m : t.exponents) value *= power(m).trace();
      cr += value.real();
      ci += value.imag();
      cr2 += value.real() * value.real();
      ci2 += value.imag() * value.imag();
    }
    sum_re += cr;
    sum_im += ci;
    sq_re += cr2;
    sq_im += ci2;
  }
  const auto N = static_cast<double>(samples);
  const double mr = sum_re / N, mi = sum_im / N;
  const double var_re = std::max(0.0, (sq_re - N * mr * mr) / (N - 1));
  const double var_im = std::max(0.0, (sq_im - N * mi * mi) / (N - 1));
  est.mean = {mr, mi};
  est.standard_error = std::hypot(std::sqrt(var_re / N), std::sqrt(var_im / N));
  return est;
}

}  // namespace wml
