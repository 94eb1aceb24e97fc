#pragma once

#include <cstdint>
#include <random>

#include "rational.hpp"
#include "looptrans.hpp"
#include "simplicial.hpp"

namespace magtrans {

/// Single seeded source for every randomized check. Draws use plain modular
/// reduction of the 64-bit engine output so reports are identical across
/// standard library implementations.
class RandomSource {
 public:
  static constexpr long kBound = 100;

  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(engine_() % span);
  }

  /// p/q with |p| <= bound, 1 <= q <= bound.
  Rational rational(long bound = kBound) {
    Rational r(integer(-bound, bound), integer(1, bound));
    r.canonicalize();
    return r;
  }

  RationalVector vector(int n, long bound = kBound) {
    RationalVector v(n);
    for (int i = 0; i < n; ++i) v[i] = rational(bound);
    return v;
  }

  RationalVector integer_vector(int n, long lo, long hi) {
    RationalVector v(n);
    for (int i = 0; i < n; ++i) v[i] = integer(lo, hi);
    return v;
  }

  /// Integer tensor with entries in [lo, hi] on every increasing triple.
  AntisymTensor3 integer_tensor(int n, long lo = -5, long hi = 5) {
    AntisymTensor3 t(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) t.set(i, j, k, integer(lo, hi));
    return t;
  }

  AntisymTensor3 rational_tensor(int n, long bound = 10) {
    AntisymTensor3 t(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) t.set(i, j, k, rational(bound));
    return t;
  }

  AffineForm2 affine_form(int n, long bound = 10) {
    AffineForm2 b(n);
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        b.add(j, k, AffineFunction{rational(bound), vector(n, bound)});
    return b;
  }

  /// Trig loop with rational Fourier data up to frequency M.
  TrigLoop trig_loop(int n, int max_freq, long bound = 10) {
    TrigLoop f(n, max_freq);
    for (int i = 0; i < n; ++i) f.set(0, i, {rational(bound), 0});
    for (int m = 1; m <= max_freq; ++m)
      for (int i = 0; i < n; ++i) f.set(m, i, {rational(bound), rational(bound)});
    return f;
  }

  /// Uniform double in [0, 1), from the top 53 bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace magtrans
