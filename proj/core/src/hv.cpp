#include "psphdc/hv.hpp"

#include <algorithm>
#include <cmath>

#include "psphdc/hash.hpp"
#include "psphdc/rng.hpp"

namespace psphdc {

void tanh_scaled(double scale, std::span<const double> s, double s_absmax,
                 std::span<double> out) {
  const std::size_t n = s.size();
  if (std::abs(scale) * s_absmax <= 0.5) {
    // Whole span inside the polynomial window: branch-free FMA loop.
    for (std::size_t t = 0; t < n; ++t) {
      const double a = scale * s[t];
      const double u = a * a;
      double q = -0.00014673527238646172117;
      q = q * u + 0.00054547386429829137883;
      q = q * u - 0.001443344234791062265;
      q = q * u + 0.0035899690540195886224;
      q = q * u - 0.0088630021848190349401;
      q = q * u + 0.021869473090633031631;
      q = q * u - 0.053968253378740798591;
      q = q * u + 0.13333333332187501411;
      q = q * u - 0.33333333333324674988;
      q = q * u + 0.99999999999999989183;
      out[t] = a * q;
    }
  } else {
    for (std::size_t t = 0; t < n; ++t) out[t] = hv_tanh(scale * s[t]);
  }
}

double l2_norm(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Hypervector normalize(const Hypervector& v) {
  Hypervector out = v;
  normalize_inplace(out);
  return out;
}

double normalize_inplace(std::span<double> v) {
  const double n = l2_norm(v);
  if (n > 0.0) {
    const double inv = 1.0 / n;
    for (double& x : v) x *= inv;
  }
  return n;
}

Hypervector bind(const Hypervector& a, const Hypervector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("bind: length mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
  Hypervector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

Hypervector bundle(std::span<const Hypervector> vs) {
  if (vs.empty()) throw EmptyBundleError("bundle: empty set");
  const std::size_t n = vs.front().size();
  for (const auto& v : vs) {
    if (v.size() != n) {
      throw DimensionError("bundle: length mismatch (" + std::to_string(v.size()) +
                           " vs " + std::to_string(n) + ")");
    }
  }
  Hypervector out(n, 0.0);
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < n; ++i) out[i] += v[i];
  }
  return out;
}

Hypervector nbundle(std::span<const Hypervector> vs) {
  Hypervector out = bundle(vs);
  normalize_inplace(out);
  return out;
}

double cosine_sim(std::span<const double> a, std::span<const double> b) {
  bool degenerate = false;
  return cosine_sim(a, b, degenerate);
}

double cosine_sim(std::span<const double> a, std::span<const double> b,
                  bool& degenerate) {
  if (a.size() != b.size()) {
    throw DimensionError("cosine_sim: length mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
  const double na = l2_norm(a);
  const double nb = l2_norm(b);
  if (na == 0.0 || nb == 0.0) {
    degenerate = true;
    return 0.0;
  }
  degenerate = false;
  const double s = dot(a, b) / (na * nb);
  return std::clamp(s, -1.0, 1.0);
}

RandomBasis RandomBasis::generate(std::uint64_t seed, std::size_t d, std::size_t D) {
  RandomBasis basis;
  basis.seed = seed;
  basis.d = d;
  basis.D = D;
  basis.rows.resize(d * D);
  SplitMix64 rng(seed);
  for (double& x : basis.rows) x = rng.gaussian();
  for (std::size_t q = 0; q < d; ++q) {
    normalize_inplace({basis.rows.data() + q * D, D});
  }
  return basis;
}

std::uint64_t RandomBasis::fingerprint() const {
  Fnv1a64 h;
  h.update_u64(seed);
  h.update_u64(static_cast<std::uint64_t>(d));
  h.update_u64(static_cast<std::uint64_t>(D));
  for (double x : rows) h.update_double(x);
  return h.digest();
}

Hypervector random_projection_encode(std::span<const double> z,
                                     const RandomBasis& basis) {
  if (z.size() != basis.d) {
    throw DimensionError("random_projection_encode: input length " +
                         std::to_string(z.size()) + " != basis row count " +
                         std::to_string(basis.d));
  }
  Hypervector pre(basis.D, 0.0);
  for (std::size_t q = 0; q < basis.d; ++q) {
    const double zq = z[q];
    if (zq == 0.0) continue;
    const auto row = basis.row(q);
    for (std::size_t t = 0; t < basis.D; ++t) pre[t] += zq * row[t];
  }
  Hypervector out(basis.D);
  for (std::size_t t = 0; t < basis.D; ++t) out[t] = hv_tanh(pre[t]);
  return out;
}

}  // namespace psphdc
