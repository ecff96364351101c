#include "machin/elementary.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "machin/gauss.hpp"

namespace machin {

namespace {

unsigned bitlen(const Int& v) {
  if (v == 0) return 1;
  return static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

Int pow2(unsigned k) {
  Int r = 1;
  r <<= k;
  return r;
}

// floor(v / scale); scale > 0, possibly a power of two.
void div_floor(Int& v, const Int& scale, long shift) {
  if (shift >= 0)
    mpz_fdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  else
    mpz_fdiv_q(v.get_mpz_t(), v.get_mpz_t(), scale.get_mpz_t());
}

long shift_of(const Int& scale) {
  if (mpz_popcount(scale.get_mpz_t()) == 1) return static_cast<long>(mpz_scan1(scale.get_mpz_t(), 0));
  return -1;
}

Enclosure from_fixed(const Int& sum, const Int& err, const Int& scale) {
  return {Rat(sum - err, scale), Rat(sum + err, scale)};
}

// Dyadic lower and upper neighbours of x on the grid 2^-g.
std::pair<Rat, Rat> dyadic_bracket(const Rat& x, unsigned g) {
  const Int s = pow2(g);
  return {Rat(floor(x * Rat(s)), s), Rat(ceil(x * Rat(s)), s)};
}

bool needs_bracket(const Rat& x, unsigned bits) { return bitlen(x.den()) > bits + 16; }

// Runs `eval(guard)` with growing guard bits until the width fits.
template <typename F>
Enclosure with_guard(unsigned bits, F eval) {
  const Rat target(Int(1), pow2(bits));
  for (unsigned g = bitlen(bits) + 5;; g += 8) {
    Enclosure e = eval(bits + g);
    if (e.width() <= target) return e;
  }
}

// Alternating Taylor series of sin (k0 = 1) or cos (k0 = 0) at 0 <= t <= 1.
Enclosure trig_series(const Rat& t, int k0, unsigned bits) {
  return with_guard(bits, [&](unsigned q) {
    const Int S = pow2(q);
    const Int X2 = floor(t * t * Rat(S));
    Int p = k0 == 0 ? S : floor(t * Rat(S));
    Int sum = 0;
    unsigned long k = static_cast<unsigned long>(k0);
    std::size_t m = 0;
    for (; p != 0; ++m) {
      if (m % 2 == 0)
        sum += p;
      else
        sum -= p;
      p *= X2;
      mpz_fdiv_q_2exp(p.get_mpz_t(), p.get_mpz_t(), q);
      mpz_fdiv_q_ui(p.get_mpz_t(), p.get_mpz_t(), (k + 1) * (k + 2));
      k += 2;
    }
    const Int err = Int(static_cast<unsigned long>(m + 2)) * Int(static_cast<unsigned long>(m + 2));
    return from_fixed(sum, err, S);
  });
}

Enclosure atan_direct(const Rat& x, unsigned bits) {
  // 0 < x <= 1/2 (or marginally above after bracketing)
  return with_guard(bits, [&](unsigned q) {
    const Int S = pow2(q);
    const SeriesSum r = odd_power_series(x.num(), x.den(), S, true);
    return from_fixed(r.sum, r.error_ulps, S);
  });
}

Enclosure machin_seed(unsigned bits) {
  return Rat(16) * atan_at_bits(Rat(1, 5), bits + 5) - Rat(4) * atan_at_bits(Rat(1, 239), bits + 5);
}

void check_seed() {
  // (5+i)^4 (239-i) must be a positive multiple of 1+i, so the seed is
  // pi + 8k pi for some integer k. A coarse enclosure inside (3, 4) forces k = 0.
  const GaussInt z = pow(GaussInt{5, 1}, 4) * GaussInt{239, -1};
  const GaussInt w = z * GaussInt{1, -1};
  if (w.im != 0 || w.re <= 0) throw std::logic_error("pi seed failed the Gaussian check");
  const Enclosure seed = machin_seed(8);
  if (!seed.inside_open(Rat(3), Rat(4))) throw std::logic_error("pi seed failed the branch check");
}

unsigned level_bits(std::size_t level) { return 64U << level; }

std::size_t level_for(unsigned bits) {
  std::size_t j = 0;
  while (level_bits(j) < bits) ++j;
  return j;
}

std::mutex pi_mutex;
std::vector<Enclosure> pi_levels;

std::mutex atan_mutex;
std::map<std::string, std::vector<Enclosure>> atan_levels;

}  // namespace

SeriesSum odd_power_series(const Int& a, const Int& b, const Int& scale, bool alternating) {
  if (a < 0 || b <= a) throw std::invalid_argument("odd_power_series needs 0 <= a < b");
  SeriesSum r;
  r.sum = 0;
  if (a == 0) {
    r.error_ulps = 0;
    return r;
  }
  const long shift = shift_of(scale);
  const Int a2 = a * a;
  const Int b2 = b * b;
  // Huge arguments switch to a truncated x^2 so the per-step cost tracks the scale.
  const bool truncated = 2 * bitlen(b) > bitlen(scale) / 2;
  Int X2;
  if (truncated) X2 = scale * a2 / b2;
  Int p = scale * a / b;
  Int t;
  std::size_t m = 0;
  for (; p != 0; ++m) {
    mpz_fdiv_q_ui(t.get_mpz_t(), p.get_mpz_t(), 2 * m + 1);
    if (alternating && (m % 2 == 1))
      r.sum -= t;
    else
      r.sum += t;
    if (truncated) {
      p *= X2;
      div_floor(p, scale, shift);
    } else {
      p *= a2;
      mpz_fdiv_q(p.get_mpz_t(), p.get_mpz_t(), b2.get_mpz_t());
    }
  }
  r.terms = m;
  // Each kept term is low by less than 2 ulps; the tail is at most one more
  // (alternating) or 1/(1 - x^2) (atanh).
  Int tail = 1;
  if (!alternating) {
    tail = b2 - a2;
    tail = (b2 + tail - 1) / tail;
  }
  r.error_ulps = Int(static_cast<unsigned long>(2 * m)) + tail;
  return r;
}

Enclosure atan_at_bits(const Rat& x, unsigned bits) {
  if (x.is_zero()) return Rat();
  if (x.sign() < 0) return -atan_at_bits(-x, bits);
  if (x == Rat(1)) return Rat(1, 4) * pi_at_bits(bits + 2);
  if (x > Rat(1)) return Rat(1, 2) * pi_at_bits(bits + 2) - atan_at_bits(x.reciprocal(), bits + 1);
  if (x > Rat(1, 2))
    return atan_at_bits(Rat(1, 2), bits + 1) +
           atan_at_bits((Rat(2) * x - Rat(1)) / (Rat(2) + x), bits + 1);
  if (needs_bracket(x, bits)) {
    const auto [lo, hi] = dyadic_bracket(x, bits + 2);
    const Rat l = lo.is_zero() ? Rat() : atan_direct(lo, bits + 2).lo();
    return {l, atan_direct(hi, bits + 2).hi()};
  }
  return atan_direct(x, bits);
}

Enclosure atanh_at_bits(const Rat& x, unsigned bits) {
  if (x.abs() > Rat(1, 2)) throw std::invalid_argument("atanh_at_bits needs |x| <= 1/2");
  if (x.is_zero()) return Rat();
  if (x.sign() < 0) return -atanh_at_bits(-x, bits);
  auto direct = [](const Rat& y, unsigned b) {
    return with_guard(b, [&](unsigned q) {
      const Int S = pow2(q);
      const SeriesSum r = odd_power_series(y.num(), y.den(), S, false);
      return from_fixed(r.sum, r.error_ulps, S);
    });
  };
  if (needs_bracket(x, bits)) {
    const auto [lo, hi] = dyadic_bracket(x, bits + 3);
    const Rat l = lo.is_zero() ? Rat() : direct(lo, bits + 2).lo();
    return {l, direct(hi, bits + 2).hi()};
  }
  return direct(x, bits);
}

Enclosure ln_at_bits(const Rat& y, unsigned bits) {
  if (y.sign() <= 0) throw std::domain_error("logarithm of a non-positive number");
  if (y == Rat(1)) return Rat();
  long k = static_cast<long>(bitlen(y.num())) - static_cast<long>(bitlen(y.den()));
  Rat t = y / (k >= 0 ? Rat(pow2(static_cast<unsigned>(k))) : Rat(Int(1), pow2(static_cast<unsigned>(-k))));
  while (t > Rat(4, 3)) {
    t /= Rat(2);
    ++k;
  }
  while (t < Rat(2, 3)) {
    t *= Rat(2);
    --k;
  }
  Enclosure acc = Rat();
  if (k != 0) {
    const unsigned kb = bitlen(Int(k < 0 ? -k : k));
    acc = Rat(k) * (Rat(2) * atanh_at_bits(Rat(1, 3), bits + kb + 3));
  }
  if (t == Rat(1)) return acc;
  if (needs_bracket(t, bits)) {
    const auto [lo, hi] = dyadic_bracket(t, bits + 4);
    const Rat l = (Rat(2) * atanh_at_bits((lo - Rat(1)) / (lo + Rat(1)), bits + 3)).lo();
    const Rat h = (Rat(2) * atanh_at_bits((hi - Rat(1)) / (hi + Rat(1)), bits + 3)).hi();
    return acc + Enclosure(l, h);
  }
  return acc + Rat(2) * atanh_at_bits((t - Rat(1)) / (t + Rat(1)), bits + 3);
}

Enclosure sin_at_bits(const Rat& t, unsigned bits) {
  if (t.abs() > Rat(1)) throw std::invalid_argument("sin_at_bits needs |t| <= 1");
  if (t.is_zero()) return Rat();
  if (t.sign() < 0) return -sin_at_bits(-t, bits);
  if (needs_bracket(t, bits)) {
    const auto [lo, hi] = dyadic_bracket(t, bits + 2);
    const Rat l = lo.is_zero() ? Rat() : trig_series(lo, 1, bits + 2).lo();
    return {l, trig_series(hi, 1, bits + 2).hi()};
  }
  return trig_series(t, 1, bits);
}

Enclosure cos_at_bits(const Rat& t, unsigned bits) {
  const Rat a = t.abs();
  if (a > Rat(1)) throw std::invalid_argument("cos_at_bits needs |t| <= 1");
  if (a.is_zero()) return Rat(1);
  if (needs_bracket(a, bits)) {
    const auto [lo, hi] = dyadic_bracket(a, bits + 2);
    const Rat h = lo.is_zero() ? Rat(1) : trig_series(lo, 0, bits + 2).hi();
    return {trig_series(hi, 0, bits + 2).lo(), h};
  }
  return trig_series(a, 0, bits);
}

Enclosure atan_of(const Enclosure& x, unsigned bits) {
  return {atan_at_bits(x.lo(), bits).lo(), atan_at_bits(x.hi(), bits).hi()};
}

Enclosure ln_of(const Enclosure& y, unsigned bits) {
  if (!y.is_positive()) throw std::domain_error("logarithm of an enclosure reaching zero");
  return {ln_at_bits(y.lo(), bits).lo(), ln_at_bits(y.hi(), bits).hi()};
}

Enclosure log10_of(const Enclosure& y, unsigned bits) {
  return ln_of(y, bits + 4) / ln_at_bits(Rat(10), bits + 4);
}

Enclosure sin_of(const Enclosure& t, unsigned bits) {
  return {sin_at_bits(t.lo(), bits).lo(), sin_at_bits(t.hi(), bits).hi()};
}

Enclosure cos_of(const Enclosure& t, unsigned bits) {
  const Rat far = std::max(t.lo().abs(), t.hi().abs());
  const Rat lo = cos_at_bits(far, bits).lo();
  if (t.contains(Rat())) return {lo, Rat(1)};
  const Rat near = std::min(t.lo().abs(), t.hi().abs());
  return {lo, cos_at_bits(near, bits).hi()};
}

Enclosure tan_of(const Enclosure& t, unsigned bits) {
  auto at = [&](const Rat& v) { return sin_at_bits(v, bits + 2) / cos_at_bits(v, bits + 2); };
  return {at(t.lo()).lo(), at(t.hi()).hi()};
}

unsigned bits_for(const Rat& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("precision target must be positive");
  const Int r = ceil(eps.reciprocal());
  unsigned b = bitlen(r);
  while (b > 0 && pow2(b - 1) >= r) --b;
  return b;
}

Enclosure pi_at_bits(unsigned bits) {
  static std::once_flag seeded;
  std::call_once(seeded, check_seed);
  const std::size_t level = level_for(bits);
  std::lock_guard<std::mutex> lock(pi_mutex);
  while (pi_levels.size() <= level) {
    Enclosure e = machin_seed(level_bits(pi_levels.size()));
    if (!pi_levels.empty()) e = e.intersect(pi_levels.back());
    pi_levels.push_back(std::move(e));
  }
  return pi_levels[level];
}

Enclosure atan_enclosure(const Rat& x, const Rat& eps) {
  const std::size_t level = level_for(bits_for(eps));
  auto build = [&](std::vector<Enclosure>& levels) {
    while (levels.size() <= level) {
      Enclosure e = atan_at_bits(x, level_bits(levels.size()));
      if (!levels.empty()) e = e.intersect(levels.back());
      levels.push_back(std::move(e));
    }
    return levels[level];
  };
  if (bitlen(x.den()) + bitlen(x.num()) > 4096) {
    std::vector<Enclosure> scratch;
    return build(scratch);
  }
  const std::string key = x.str();
  {
    std::lock_guard<std::mutex> lock(atan_mutex);
    auto it = atan_levels.find(key);
    if (it != atan_levels.end() && it->second.size() > level) return it->second[level];
  }
  // Computed outside the lock: atan(x) for |x| >= 1 re-enters through pi.
  std::vector<Enclosure> levels;
  {
    std::lock_guard<std::mutex> lock(atan_mutex);
    auto it = atan_levels.find(key);
    if (it != atan_levels.end()) levels = it->second;
  }
  build(levels);
  std::lock_guard<std::mutex> lock(atan_mutex);
  auto& slot = atan_levels[key];
  if (slot.size() < levels.size()) slot = std::move(levels);
  return slot[level];
}

Enclosure sqrt_enclosure(const Rat& y, const Rat& width) {
  if (y.sign() < 0) throw std::domain_error("square root of a negative number");
  if (width.sign() <= 0) throw std::invalid_argument("sqrt width must be positive");
  Rat lo, hi = y > Rat(1) ? y : Rat(1);
  while (hi - lo > width) {
    const Rat mid = (lo + hi) / Rat(2);
    if (mid * mid <= y)
      lo = mid;
    else
      hi = mid;
  }
  return {lo, hi};
}

}  // namespace machin
