#include "vgl/certify.hpp"

namespace vgl {

namespace {

void require_pair(const SparsePoly& p, const SparsePoly& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("certify: dimensions differ");
  if (p.is_zero() || q.is_zero()) throw ZeroPolynomialError("certify: zero polynomial");
  if (mass(p) != mass(q)) throw std::invalid_argument("certify: masses differ");
}

ExponentVector u_power(std::size_t dim, std::uint64_t k) {
  return ExponentVector(std::vector<ExponentVector::value_type>(dim, static_cast<ExponentVector::value_type>(k)));
}

SparsePoly times_u(const SparsePoly& p, std::uint64_t k) {
  if (k == 0) return p;
  return mul(p, SparsePoly::monomial(u_power(p.dim(), k)));
}

std::uint64_t floor_times(const Rational& eps, std::uint64_t m) {
  Integer value = eps.get_num() * m;
  mpz_fdiv_q(value.get_mpz_t(), value.get_mpz_t(), eps.get_den_mpz_t());
  return value.get_ui();
}

}  // namespace

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::Inconclusive:
      return "inconclusive";
    case SearchStatus::SupportGuard:
      return "support-guard";
  }
  return "unknown";
}

SparsePoly standard_catalyst(const SparsePoly& p, const SparsePoly& q, std::uint32_t n, std::uint32_t k) {
  if (p.dim() != q.dim()) throw DimensionMismatch("standard_catalyst: dimensions differ");
  // S_n = p^n + q S_{n-1}, S_0 = 1
  SparsePoly sum = SparsePoly::one(p.dim());
  SparsePoly p_power = SparsePoly::one(p.dim());
  for (std::uint32_t j = 1; j <= n; ++j) {
    p_power = mul(p_power, p);
    sum = add(mul(q, sum), p_power);
  }
  return times_u(sum, k);
}

CatalyticSearch find_catalytic(const SparsePoly& p, const SparsePoly& q, const CatalyticOptions& options) {
  require_pair(p, q);
  CatalyticSearch search;
  if (options.require_spectral) {
    search.spectral = spectral_report(p, q, true, EvaluationMode::Exact, options.sampling);
    if (!search.spectral->all_hold())
      throw SpectralPreconditionError("strict spectral conditions fail; the catalytic theorem does not apply");
    if (!search.spectral->all_exact() && !options.allow_sampled_spectral)
      throw SpectralPreconditionError("strict spectral conditions only verified by sampling (pass --allow-sampled-spectral)");
  }

  SparsePoly sum = SparsePoly::one(p.dim());
  SparsePoly p_power = SparsePoly::one(p.dim());
  for (std::uint32_t n = 0; n <= options.max_n; ++n) {
    if (n > 0) {
      p_power = mul(p_power, p);
      sum = add(mul(q, sum), p_power);
    }
    const SparsePoly ap = mul(sum, p), aq = mul(sum, q);
    for (std::uint32_t k = 0; k <= options.max_k; ++k) {
      auto verdict = decide(times_u(ap, k), times_u(aq, k));
      if (verdict.comparable) {
        search.status = SearchStatus::Found;
        search.certificate = CatalyticCertificate{times_u(sum, k), k, n, true, std::move(*verdict.plan)};
        return search;
      }
    }
  }
  return search;
}

CatalyticSearch find_catalytic_with(const SparsePoly& p, const SparsePoly& q, const SparsePoly& catalyst) {
  require_pair(p, q);
  if (catalyst.is_zero()) throw ZeroPolynomialError("catalyst must be nonzero");
  if (catalyst.dim() != p.dim()) throw DimensionMismatch("catalyst dimension differs");
  CatalyticSearch search;
  auto verdict = decide(mul(catalyst, p), mul(catalyst, q));
  if (verdict.comparable) {
    search.status = SearchStatus::Found;
    search.certificate = CatalyticCertificate{catalyst, 0, 0, false, std::move(*verdict.plan)};
  }
  return search;
}

namespace {

// Shared scan for both asymptotic families: lhs(m) = u^k p^m, rhs(m) = u^(k + floor(eps m)) q^m.
AsymptoticSearch scan_powers(const SparsePoly& p, const SparsePoly& q, const Rational& eps, std::uint32_t k,
                             std::uint32_t n_max, std::uint32_t window, std::size_t guard) {
  AsymptoticSearch search;
  SparsePoly p_power = SparsePoly::one(p.dim());
  SparsePoly q_power = SparsePoly::one(q.dim());
  std::vector<TransportPlan> run;
  std::uint32_t run_start = 1;
  for (std::uint32_t m = 1; m <= n_max + window; ++m) {
    p_power = mul(p_power, p);
    q_power = mul(q_power, q);
    search.scanned_to = m;
    if (p_power.size() > guard || q_power.size() > guard) {
      search.status = SearchStatus::SupportGuard;
      return search;
    }
    auto verdict = decide(times_u(p_power, k), times_u(q_power, k + floor_times(eps, m)));
    if (!verdict.comparable) {
      run.clear();
      run_start = m + 1;
      if (run_start > n_max) break;
      continue;
    }
    run.push_back(std::move(*verdict.plan));
    if (run.size() == static_cast<std::size_t>(window) + 1) {
      search.status = SearchStatus::Found;
      search.certificate = AsymptoticCertificate{eps, k, run_start, window, std::move(run)};
      return search;
    }
  }
  return search;
}

}  // namespace

AsymptoticSearch find_asymptotic(const SparsePoly& p, const SparsePoly& q, const AsymptoticOptions& options) {
  require_pair(p, q);
  if (options.eps < 0) throw std::invalid_argument("eps must be nonnegative");
  return scan_powers(p, q, options.eps, 0, options.n_max, options.window, options.support_guard);
}

AsymptoticSearch find_asymptotic_uk(const SparsePoly& p, const SparsePoly& q, const AsymptoticUkOptions& options) {
  require_pair(p, q);
  AsymptoticSearch last;
  for (std::uint32_t k = 0; k <= options.k_max; ++k) {
    last = scan_powers(p, q, Rational(0), k, options.n_max, options.window, options.support_guard);
    if (last.status != SearchStatus::Inconclusive) return last;
  }
  return last;
}

bool verify_certificate(const SparsePoly& p, const SparsePoly& q, const CatalyticCertificate& cert) {
  try {
    if (p.dim() != q.dim() || p.is_zero() || q.is_zero() || cert.a.is_zero() || cert.a.dim() != p.dim()) return false;
    if (cert.standard_family && !(standard_catalyst(p, q, cert.n, cert.k) == cert.a)) return false;
    return validate_plan(mul(cert.a, p), mul(cert.a, q), cert.plan);
  } catch (const std::exception&) {
    return false;
  }
}

bool verify_certificate(const SparsePoly& p, const SparsePoly& q, const AsymptoticCertificate& cert) {
  try {
    if (p.dim() != q.dim() || p.is_zero() || q.is_zero() || cert.eps < 0 || cert.first == 0) return false;
    if (cert.plans.size() != static_cast<std::size_t>(cert.window) + 1) return false;
    for (std::uint32_t i = 0; i <= cert.window; ++i) {
      std::uint32_t m = cert.first + i;
      SparsePoly lhs = times_u(pow(p, m), cert.k);
      SparsePoly rhs = times_u(pow(q, m), cert.k + floor_times(cert.eps, m));
      if (!validate_plan(lhs, rhs, cert.plans[i])) return false;
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace vgl
