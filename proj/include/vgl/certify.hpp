#pragma once

/**
 * @file certify.hpp
 * @brief Bounded searches for catalytic and asymptotic certificates of p <= q.
 *
 * Both searches are semi-decision procedures: success yields a certificate
 * that verify_certificate() re-checks from scratch, while exhausting the
 * budget only yields "inconclusive".
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vgl/dominance.hpp"
#include "vgl/spectral.hpp"

namespace vgl {

class SpectralPreconditionError : public std::runtime_error {
 public:
  explicit SpectralPreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// a * p <= a * q, witnessed by `plan`.
struct CatalyticCertificate {
  SparsePoly a;
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  /// True when a = u^k * sum_{j=0}^n p^j q^(n-j); false for a user-supplied catalyst.
  bool standard_family = true;
  TransportPlan plan;
};

/// u^k p^m <= u^(k + floor(eps m)) q^m for m = first .. first + window.
struct AsymptoticCertificate {
  Rational eps = 0;
  std::uint32_t k = 0;
  std::uint32_t first = 1;
  std::uint32_t window = 3;
  std::vector<TransportPlan> plans;
};

enum class SearchStatus { Found, Inconclusive, SupportGuard };
std::string to_string(SearchStatus status);

struct CatalyticOptions {
  std::uint32_t max_n = 12;
  std::uint32_t max_k = 6;
  bool require_spectral = true;
  /// Accept sampled evaluation verdicts as the strict spectral precondition.
  bool allow_sampled_spectral = false;
  SamplingConfig sampling;
};

struct CatalyticSearch {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<CatalyticCertificate> certificate;
  std::optional<SpectralReport> spectral;
};

/**
 * Scans (n, k) lexicographically over [0, max_n] x [0, max_k] with the
 * catalyst a = u^k sum_j p^j q^(n-j) and returns the first a with a p <= a q.
 *
 * Throws std::invalid_argument on zero or mass-mismatched inputs and
 * SpectralPreconditionError when require_spectral is set and the strict
 * spectral report fails (or rests on sampling without the override).
 */
CatalyticSearch find_catalytic(const SparsePoly& p, const SparsePoly& q, const CatalyticOptions& options = {});

/// Tests a user-provided catalyst.
CatalyticSearch find_catalytic_with(const SparsePoly& p, const SparsePoly& q, const SparsePoly& catalyst);

/// The standard catalyst u^k * sum_{j=0}^n p^j q^(n-j).
SparsePoly standard_catalyst(const SparsePoly& p, const SparsePoly& q, std::uint32_t n, std::uint32_t k);

struct AsymptoticOptions {
  Rational eps = 0;
  std::uint32_t n_max = 20;
  std::uint32_t window = 3;
  std::size_t support_guard = 200000;
};

struct AsymptoticSearch {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<AsymptoticCertificate> certificate;
  /// Largest exponent examined.
  std::uint32_t scanned_to = 0;
};

/// Least N <= n_max such that p^m <= u^floor(eps m) q^m for all m in [N, N + window].
AsymptoticSearch find_asymptotic(const SparsePoly& p, const SparsePoly& q, const AsymptoticOptions& options = {});

struct AsymptoticUkOptions {
  std::uint32_t k_max = 6;
  std::uint32_t n_max = 20;
  std::uint32_t window = 3;
  std::size_t support_guard = 200000;
};

/// Least (k, N) in lexicographic order with u^k p^m <= u^k q^m for m in [N, N + window].
AsymptoticSearch find_asymptotic_uk(const SparsePoly& p, const SparsePoly& q, const AsymptoticUkOptions& options = {});

/// Recomputes every product and power and validates each plan exactly.
bool verify_certificate(const SparsePoly& p, const SparsePoly& q, const CatalyticCertificate& cert);
bool verify_certificate(const SparsePoly& p, const SparsePoly& q, const AsymptoticCertificate& cert);

}  // namespace vgl
