#pragma once

// Reference implementations used only by the tests. Nothing here touches
// the library's arithmetic: fractions are plain __int128 pairs, sums are
// loops, searches are exhaustive.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using i128 = __int128;

inline i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Frac {
  i128 n = 0;
  i128 q = 1;

  Frac() = default;
  Frac(std::int64_t v) : n(v) {}  // NOLINT
  Frac(i128 num, i128 den) : n(num), q(den) {
    if (q == 0) throw std::domain_error("oracle: zero denominator");
    if (q < 0) {
      n = -n;
      q = -q;
    }
    const i128 g = gcd128(n, q);
    if (g > 1) {
      n /= g;
      q /= g;
    }
  }

  friend Frac operator+(Frac a, Frac b) { return {a.n * b.q + b.n * a.q, a.q * b.q}; }
  friend Frac operator-(Frac a, Frac b) { return {a.n * b.q - b.n * a.q, a.q * b.q}; }
  friend Frac operator*(Frac a, Frac b) { return {a.n * b.n, a.q * b.q}; }
  friend Frac operator/(Frac a, Frac b) { return {a.n * b.q, a.q * b.n}; }
  friend bool operator==(Frac a, Frac b) { return a.n == b.n && a.q == b.q; }
  friend bool operator<(Frac a, Frac b) { return a.n * b.q < b.n * a.q; }
  friend bool operator<=(Frac a, Frac b) { return !(b < a); }

  [[nodiscard]] std::int64_t floor() const {
    i128 f = n / q;
    if (n % q != 0 && n < 0) --f;
    return static_cast<std::int64_t>(f);
  }
  [[nodiscard]] std::int64_t ceil() const {
    i128 c = n / q;
    if (n % q != 0 && n > 0) ++c;
    return static_cast<std::int64_t>(c);
  }

  /// "p/q" exactly like the serializer.
  [[nodiscard]] std::string str() const {
    auto one = [](i128 v) {
      if (v == 0) return std::string("0");
      bool neg = v < 0;
      if (neg) v = -v;
      std::string s;
      while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
      }
      if (neg) s.push_back('-');
      std::reverse(s.begin(), s.end());
      return s;
    };
    return one(n) + "/" + one(q);
  }
};

inline Frac c2(Frac x) { return x * (x - 1) / Frac(2); }
inline Frac c3(Frac x) { return x * (x - 1) * (x - 2) / Frac(6); }

inline std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Term-by-term sum of 12t - 22 over integers t = a..b.
inline std::int64_t weight_loop(std::int64_t a, std::int64_t b) {
  std::int64_t sum = 0;
  for (std::int64_t t = a; t <= b; ++t) sum += 12 * t - 22;
  return sum;
}

inline Frac G(std::int64_t d, int s) {
  const std::int64_t r = d % s;
  return Frac(d * d, 2 * s) + Frac((s - 4) * d, 2) + 1 - Frac(r * (s - r) * (s - 1), 2 * s);
}

inline Frac chi_closed(std::int64_t d, int s) {
  return Frac(s) * c3(Frac(d, s) + Frac(s - 3, 2)) + 1 - choose(s - 1, 4);
}

inline Frac gamma_ep(std::int64_t d, int s) { return Frac(d * (s - 1) * (s - 1), 2 * s); }

inline Frac gamma_dp(std::int64_t d, int s) {
  return Frac(d * d, 2 * s) + Frac((s - 4) * d, 2) + 1 - Frac(d * d - 5 * d + 10, 10);
}

inline Frac gamma_min(std::int64_t d, int s) {
  const Frac a = gamma_ep(d, s), b = gamma_dp(d, s);
  return a < b ? a : b;
}

using Seq = std::vector<std::int64_t>;

/// Every strictly decreasing s-tuple of positive integers summing to d, by
/// walking all s-subsets of {1..d}.
inline std::vector<Seq> distinct_partitions(std::int64_t d, int s) {
  std::vector<Seq> out;
  if (s <= 0 || s > d) return out;
  std::vector<bool> pick(static_cast<std::size_t>(d), false);
  std::fill(pick.begin(), pick.begin() + s, true);
  do {
    Seq seq;
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < d; ++i) {
      if (pick[static_cast<std::size_t>(i)]) {
        seq.push_back(i + 1);
        sum += i + 1;
      }
    }
    if (sum == d) {
      std::reverse(seq.begin(), seq.end());
      out.push_back(seq);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline bool capped(const Seq& l) {
  const std::int64_t d = std::accumulate(l.begin(), l.end(), std::int64_t{0});
  const int s = static_cast<int>(l.size());
  if (Frac(d, s) + Frac(s - 1) < Frac(l[0])) return false;
  if (s >= 2 && Frac(d, s) + Frac(s - 2) < Frac(l[1])) return false;
  return true;
}

inline bool gap_free(const Seq& l) {
  for (std::size_t i = 0; i + 1 < l.size(); ++i) {
    if (l[i] - l[i + 1] > 2) return false;
  }
  return true;
}

inline std::int64_t genus(const Seq& l) {
  std::int64_t g = 1;
  for (std::size_t i = 0; i < l.size(); ++i) {
    g += l[i] * (l[i] - 1) / 2 + (static_cast<std::int64_t>(i) - 1) * l[i];
  }
  return g;
}

inline Frac chi(const Seq& l) {
  Frac x(0);
  for (std::size_t t = 0; t < l.size(); ++t) {
    const auto tt = static_cast<std::int64_t>(t);
    x = x + c3(Frac(l[t] + tt - 1)) - c3(Frac(tt - 1));
  }
  return x;
}

/// Max of sum alpha_t (12t - 22) over all profiles with lo <= t <= d - 2,
/// alpha_t <= per_degree (negative: unbounded), sum alpha_t <= budget.
inline std::int64_t brute_max_weight(std::int64_t budget, std::int64_t d, std::int64_t per_degree, std::int64_t lo) {
  const std::int64_t hi = d - 2;
  std::int64_t best = 0;
  std::function<void(std::int64_t, std::int64_t, std::int64_t)> go = [&](std::int64_t t, std::int64_t left,
                                                                         std::int64_t acc) {
    if (t > hi) {
      best = std::max(best, acc);
      return;
    }
    const std::int64_t most = per_degree < 0 ? left : std::min(per_degree, left);
    for (std::int64_t k = 0; k <= most; ++k) go(t + 1, left - k, acc + k * (12 * t - 22));
  };
  go(std::max<std::int64_t>(lo, 0), budget, 0);
  return best;
}

}  // namespace oracle
