#include "monoclosure/certificate.hpp"

#include <atomic>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace monoclosure {

std::vector<int> coefficient_pool(int lo, int hi) {
  if (lo > hi) throw InputError("empty coefficient pool");
  std::vector<int> pool;
  if (lo <= 0 && 0 <= hi) pool.push_back(0);
  for (int k = 1; k <= std::max(hi, -lo); ++k) {
    if (k <= hi) pool.push_back(k);
    if (-k >= lo) pool.push_back(-k);
  }
  return pool;
}

namespace {

std::uint64_t structured_count(std::size_t pool_size, std::size_t digits) {
  std::uint64_t count = 1;
  for (std::size_t d = 0; d < digits; ++d) {
    if (count > std::numeric_limits<std::uint64_t>::max() / pool_size) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= pool_size;
  }
  return count;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool excludes(const MonomialIdeal& I, const ExponentVector& f,
              const std::vector<AxesRingElement>& images) {
  std::vector<AxesRingElement> gens;
  gens.reserve(I.size());
  for (const auto& g : I.generators()) gens.push_back(substitute(images, g));
  return !ideal_member(substitute(images, f), gens);
}

}  // namespace

std::vector<AxesRingElement> candidate_map(std::size_t num_vars, GluedRingSpec spec,
                                           const CertifyConfig& config, std::uint64_t index) {
  const auto pool = coefficient_pool(config.pool_min, config.pool_max);
  const std::size_t digits = num_vars * spec.branches;
  const std::uint64_t structured = structured_count(pool.size(), digits);
  std::vector<AxesRingElement> images(num_vars, AxesRingElement(spec));
  if (index < structured) {
    std::uint64_t rest = index;
    for (std::size_t d = digits; d-- > 0;) {
      int c = pool[rest % pool.size()];
      rest /= pool.size();
      std::size_t var = d / spec.branches, branch = d % spec.branches;
      if (spec.truncation > 1) images[var].set_coefficient(branch, 1, Rational(c));
    }
    return images;
  }
  // Random maps: linear part from the pool plus small rational perturbations
  // in degrees 2 and 3.
  std::mt19937_64 rng(mix(config.seed, index));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  for (std::size_t v = 0; v < num_vars; ++v) {
    for (std::size_t b = 0; b < spec.branches; ++b) {
      for (std::size_t k = 1; k < spec.truncation && k <= 3; ++k) {
        Rational c = k == 1 ? Rational(pool[pick(rng)]) : Rational(num(rng), den(rng));
        c.canonicalize();
        images[v].set_coefficient(b, k, c);
      }
    }
  }
  return images;
}

std::optional<ExclusionCertificate> certify_exclusion(const MonomialIdeal& I,
                                                      const ExponentVector& f,
                                                      const CertifyConfig& config) {
  require_length(I, f);
  if (I.num_vars() == 0) return std::nullopt;
  std::vector<std::size_t> branch_counts = config.branch_counts;
  if (branch_counts.empty()) branch_counts.push_back(I.num_vars());
  for (std::size_t m : branch_counts) {
    for (std::size_t N : config.truncations) {
      GluedRingSpec spec{m, N};
      if (N < 2) throw InputError("truncation order must be at least 2");
      const std::size_t workers = std::max<std::size_t>(1, config.workers);
      std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
      auto work = [&](std::size_t w) {
        for (std::uint64_t idx = w; idx < config.budget; idx += workers) {
          if (idx >= best.load()) return;
          auto images = candidate_map(I.num_vars(), spec, config, idx);
          if (excludes(I, f, images)) {
            std::uint64_t cur = best.load();
            while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
            }
            return;
          }
        }
      };
      if (workers == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
      }
      if (best.load() != std::numeric_limits<std::uint64_t>::max()) {
        ExclusionCertificate cert{I, f, spec, candidate_map(I.num_vars(), spec, config, best.load())};
        auto check = verify_certificate(cert);
        if (!check.verified) {
          throw std::logic_error("certificate search produced an unverifiable map: " +
                                 check.diagnostic);
        }
        return cert;
      }
    }
  }
  return std::nullopt;
}

VerificationResult verify_certificate(const ExclusionCertificate& cert) {
  const auto& I = cert.ideal;
  if (cert.element.size() != I.num_vars()) {
    return {false, "element length differs from the ideal's variable count"};
  }
  if (cert.images.size() != I.num_vars()) {
    return {false, "certificate must give exactly one image per variable"};
  }
  if (cert.ring.truncation < 2 || cert.ring.branches == 0) {
    return {false, "ring needs at least one branch and truncation N >= 2"};
  }
  for (const auto& img : cert.images) {
    if (!(img.spec() == cert.ring)) return {false, "an image lives in a different glued ring"};
  }
  std::vector<AxesRingElement> gens;
  for (const auto& g : I.generators()) gens.push_back(substitute(cert.images, g));
  AxesRingElement image = substitute(cert.images, cert.element);
  if (ideal_member(image, gens)) {
    return {false, "image of the element lies in the extended ideal at truncation " +
                       std::to_string(cert.ring.truncation)};
  }
  return {true, "image " + image.to_string() + " is outside the extended ideal + m^" +
                    std::to_string(cert.ring.truncation)};
}

}  // namespace monoclosure
