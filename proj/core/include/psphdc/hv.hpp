#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "psphdc/errors.hpp"

namespace psphdc {

// A hypervector is a dense real vector of the model dimension D.
// All arithmetic is fp64; operations are pure and values immutable after
// construction, so they are safe to share across threads.
using Hypervector = std::vector<double>;

// Elementwise nonlinearity of the projection encoder. Mathematically tanh;
// for |x| <= 0.5 it is evaluated by a degree-19 odd polynomial
// (Chebyshev-interpolated, max relative error < 4e-16 versus IEEE tanh)
// so that encoding loops vectorize, and by std::tanh outside that window.
inline double hv_tanh(double x) {
  const double u = x * x;
  if (u > 0.25) return std::tanh(x);
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
  return x * q;
}

// out[t] = tanh(scale * s[t]). Takes the polynomial fast path for the whole
// span when |scale| * max|s| stays inside the window, so callers that know
// max|s| amortize the range check across D elements.
void tanh_scaled(double scale, std::span<const double> s, double s_absmax,
                 std::span<double> out);

double l2_norm(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);

// v / ||v||_2, or the zero vector when ||v||_2 = 0.
Hypervector normalize(const Hypervector& v);
// In-place variant; returns the original norm (0 means the zero branch).
double normalize_inplace(std::span<double> v);

// Hadamard product. Throws DimensionError on length mismatch.
Hypervector bind(const Hypervector& a, const Hypervector& b);

// Elementwise sum over a nonempty set. Throws EmptyBundleError when empty.
Hypervector bundle(std::span<const Hypervector> vs);
// bundle followed by normalization.
Hypervector nbundle(std::span<const Hypervector> vs);

// Cosine similarity, clamped to [-1, 1]. A zero operand yields 0; the
// two-argument form hides the degeneracy flag, the three-argument form
// reports it (zero hypervectors arise legitimately from midpoint encoding
// and must not poison retrieval with NaN).
double cosine_sim(std::span<const double> a, std::span<const double> b);
double cosine_sim(std::span<const double> a, std::span<const double> b,
                  bool& degenerate);

// Fixed random basis: d base hypervectors of length D, rows unit-norm.
// Regeneration from (seed, d, D) is bit-identical; the rows are drawn
// i.i.d. standard normal from the pinned SplitMix64 stream, then each row
// is l2-normalized.
struct RandomBasis {
  std::uint64_t seed = 0;
  std::size_t d = 0;
  std::size_t D = 0;
  std::vector<double> rows;  // d x D row-major

  static RandomBasis generate(std::uint64_t seed, std::size_t d, std::size_t D);

  std::span<const double> row(std::size_t q) const { return {rows.data() + q * D, D}; }

  // FNV-1a over (seed, d, D, row bytes). Checkpoints store this so a
  // reloaded model can prove it regenerated the same basis.
  std::uint64_t fingerprint() const;
};

// Non-adaptive projection encoder: tanh(z^T B) elementwise, entries in (-1, 1).
// z must have length basis.d.
Hypervector random_projection_encode(std::span<const double> z,
                                     const RandomBasis& basis);

}  // namespace psphdc
