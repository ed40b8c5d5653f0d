#include "primewit/bounds.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace primewit {
namespace {

// Largest top a level can carry before the next height is needed.
const long double kTopLimit = std::log2l(LDBL_MAX) - 1;

// Sums of the non-dominant multinomial parts above this are approximated.
constexpr unsigned long kSmallSum = 1UL << 20;

Magnitude::Level canonical(Magnitude::Level l) {
  while (l.height > 0 && l.top < kTopLimit) {
    l.top = std::exp2l(l.top);
    --l.height;
  }
  return l;
}

Magnitude::Level raise(Magnitude::Level l) {
  if (l.height == 0 && l.top < kTopLimit) return {0, std::exp2l(l.top)};
  return {l.height + 1, l.top};
}

Magnitude::Level lower(Magnitude::Level l) {
  if (l.height == 0) return {0, l.top > 0 ? std::log2l(l.top) : 0};
  return canonical({l.height - 1, l.top});
}

long double log2_mpz(const mpz_class& x) {
  if (x <= 0) return 0;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2l(mant) + static_cast<long double>(exp);
}

long double log2_factorial(long double x) { return std::lgammal(x + 1) / std::log(2.0L); }

std::string format_long_double(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lg", v);
  return buf;
}

}  // namespace

Magnitude::Magnitude(mpz_class v) : exact_(std::move(v)) {
  if (exact_ < 0) throw std::invalid_argument("Magnitude must be non-negative");
  if (mpz_sizeinbase(exact_.get_mpz_t(), 2) > kExactBits) {
    approx_ = level();
    exact_flag_ = false;
    exact_ = 0;
  }
}

Magnitude Magnitude::from_level(Level l) {
  Magnitude m;
  m.exact_flag_ = false;
  m.approx_ = canonical(l);
  return m;
}

Magnitude::Level Magnitude::level() const {
  if (!exact_flag_) return approx_;
  if (exact_ == 0) return {0, 0};
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, exact_.get_mpz_t());
  if (static_cast<long double>(exp) < kTopLimit)
    return {0, std::ldexp(static_cast<long double>(mant), static_cast<int>(exp))};
  return canonical({1, std::log2l(mant) + static_cast<long double>(exp)});
}

std::optional<std::uint64_t> Magnitude::to_u64() const {
  if (!exact_flag_ || !exact_.fits_ulong_p()) return std::nullopt;
  return exact_.get_ui();
}

std::size_t Magnitude::saturated_size() const {
  const auto v = to_u64();
  if (!v || *v > std::numeric_limits<std::size_t>::max())
    return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(*v);
}

std::string Magnitude::to_string() const {
  if (exact_flag_ && mpz_sizeinbase(exact_.get_mpz_t(), 10) <= 20000)
    return exact_.get_str();
  const Level l = level();
  std::string s = "~";
  for (int i = 0; i < l.height; ++i) s += "2^(";
  s += format_long_double(l.top);
  s.append(static_cast<std::size_t>(l.height), ')');
  return s;
}

std::partial_ordering operator<=>(const Magnitude& a, const Magnitude& b) {
  if (a.exact_flag_ && b.exact_flag_) {
    const int c = cmp(a.exact_, b.exact_);
    return c < 0 ? std::partial_ordering::less
                 : c > 0 ? std::partial_ordering::greater
                         : std::partial_ordering::equivalent;
  }
  const auto la = a.level();
  const auto lb = b.level();
  if (la.height != lb.height) return la.height <=> lb.height;
  return la.top <=> lb.top;
}

Magnitude operator+(const Magnitude& a, const Magnitude& b) {
  if (a.exact_flag_ && b.exact_flag_) return Magnitude(mpz_class(a.exact_ + b.exact_));
  const auto la = a.level();
  const auto lb = b.level();
  if (la.height == 0 && lb.height == 0) return Magnitude::from_level({0, la.top + lb.top});
  const auto hi = (a <=> b) >= 0 ? la : lb;
  const auto lo = (a <=> b) >= 0 ? lb : la;
  if (hi.height == 1 && lo.height == 1)
    return Magnitude::from_level({1, hi.top + std::log2l(1 + std::exp2l(lo.top - hi.top))});
  return Magnitude::from_level(hi);
}

Magnitude operator*(const Magnitude& a, unsigned long c) {
  if (a.exact_flag_) return Magnitude(mpz_class(a.exact_ * c));
  if (c == 0) return Magnitude(0UL);
  Magnitude::Level l = a.approx_;
  if (l.height == 0)
    l.top *= static_cast<long double>(c);
  else if (l.height == 1)
    l.top += std::log2l(static_cast<long double>(c));
  return Magnitude::from_level(l);
}

Magnitude Magnitude::pow2(const Magnitude& a) {
  if (a.exact_flag_ && a.exact_ <= static_cast<unsigned long>(kExactBits)) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, a.exact_.get_ui());
    return Magnitude(std::move(r));
  }
  return from_level(raise(a.level()));
}

Magnitude Magnitude::log2() const { return from_level(lower(level())); }

Magnitude ramsey_upper_bound(std::span<const Magnitude> sizes) {
  if (sizes.empty()) throw std::invalid_argument("ramsey_upper_bound: no colours");
  std::vector<Magnitude> parts;  // k_i - 1
  for (const auto& k : sizes) {
    if (k.is_exact()) {
      if (k.exact() < 1) throw std::invalid_argument("ramsey_upper_bound: size < 1");
      parts.emplace_back(mpz_class(k.exact() - 1));
    } else {
      parts.push_back(k);
    }
  }
  const auto dominant = static_cast<std::size_t>(
      std::max_element(parts.begin(), parts.end(),
                       [](const Magnitude& x, const Magnitude& y) { return x < y; }) -
      parts.begin());

  bool rest_exact = true;
  mpz_class rest_sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == dominant) continue;
    if (!parts[i].is_exact()) rest_exact = false;
    else rest_sum += parts[i].exact();
  }

  if (!rest_exact || !rest_sum.fits_ulong_p()) {
    // Crude: a multinomial over r parts is at most r^(sum of parts).
    Magnitude total = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) total = total + parts[i];
    const long double lr = std::log2l(static_cast<long double>(parts.size()));
    Magnitude::Level l = total.level();
    if (l.height == 0) l.top *= lr;
    else if (l.height == 1) l.top += std::log2l(lr);
    return Magnitude::pow2(Magnitude::approx(l)) + Magnitude(1UL);
  }

  const unsigned long s = rest_sum.get_ui();
  const bool small_rest = s <= kSmallSum;
  // Multinomial of the non-dominant parts, exact when their sum is small.
  mpz_class rest_multi = 1;
  long double rest_log2 = log2_factorial(static_cast<long double>(s));
  {
    unsigned long run = 0;
    mpz_class b;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i == dominant) continue;
      const unsigned long d = parts[i].exact().get_ui();
      rest_log2 -= log2_factorial(static_cast<long double>(d));
      if (!small_rest) continue;
      run += d;
      mpz_bin_uiui(b.get_mpz_t(), run, d);
      rest_multi *= b;
    }
  }
  if (small_rest) rest_log2 = log2_mpz(rest_multi);
  // Remaining factor binom(D + s, s) with D the dominant part.
  const Magnitude& dom = parts[dominant];
  const long double log2_dom = dom.log2().level().height == 0
                                   ? dom.log2().level().top
                                   : std::numeric_limits<long double>::infinity();
  const long double est_bits = static_cast<long double>(s) * (log2_dom + 1) + rest_log2;
  if (small_rest && dom.is_exact() &&
      est_bits < static_cast<long double>(Magnitude::kExactBits)) {
    mpz_class b;
    mpz_class top = dom.exact() + s;
    mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), s);
    return Magnitude(mpz_class(b * rest_multi + 1));
  }

  // log2 binom(D + s, s).
  Magnitude log2_binom;
  const auto dl = dom.level();
  const long double sl = static_cast<long double>(s);
  if (dl.height == 0 && dl.top < 1e6L * (sl + 1)) {
    log2_binom = Magnitude::approx(
        {0, log2_factorial(dl.top + sl) - log2_factorial(dl.top) - log2_factorial(sl)});
  } else {
    // D >> s: binom(D + s, s) ~ (D + s/2)^s / s!.
    Magnitude::Level l = dom.log2().level();
    if (l.height == 0) {
      if (dl.height == 0) l.top = std::log2l(dl.top + sl / 2);
      l.top = l.top * sl - log2_factorial(sl);
    } else if (l.height == 1) {
      l.top += std::log2l(sl);
    }
    log2_binom = Magnitude::approx(l);
  }
  Magnitude::Level total = log2_binom.level();
  if (total.height == 0) total.top += rest_log2;
  return Magnitude::pow2(Magnitude::approx(total)) + Magnitude(1UL);
}

Magnitude half_split_bound(int n) {
  if (n < 2) throw std::invalid_argument("half_split_bound: n must be >= 2");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 4, static_cast<unsigned long>(n - 2));
  return Magnitude(mpz_class(p * (n + 1) + 2 * (n - 2) + 1));
}

namespace {

std::vector<Magnitude> matching_tower(int n, const Magnitude& n_prime, int t) {
  if (n < 1 || t < 2) throw std::invalid_argument("matching_bound: need n >= 1, t >= 2");
  std::vector<Magnitude> tower = {Magnitude(static_cast<unsigned long>(n))};
  for (int i = 3; i <= t; ++i) {
    std::vector<Magnitude> sizes(7, Magnitude(static_cast<unsigned long>(n)));
    sizes.push_back(n_prime);
    sizes.push_back(n_prime);
    sizes.push_back(tower.back());
    tower.push_back(ramsey_upper_bound(sizes) * static_cast<unsigned long>(n - 1) +
                    Magnitude(1UL));
  }
  return tower;
}

}  // namespace

Magnitude matching_bound(int n, const Magnitude& n_prime, int t) {
  return matching_tower(n, n_prime, t).back();
}

StableSetBound stable_set_bound(int n, const Magnitude& n1, const Magnitude& n2) {
  if (n < 1) throw std::invalid_argument("stable_set_bound: n must be >= 1");
  const Magnitude nn(static_cast<unsigned long>(n));
  const std::vector<Magnitude> sizes = {
      n1 + nn,
      Magnitude(static_cast<unsigned long>(2 * n - 1)),
      nn + n2,
      Magnitude(static_cast<unsigned long>(n - 1)) + n2,
  };
  StableSetBound out;
  out.ramsey = ramsey_upper_bound(sizes);
  out.size = Magnitude::pow2(out.ramsey + Magnitude(1UL));
  return out;
}

BoundSpec bounds(int n) {
  if (n < 3) throw std::invalid_argument("bounds: n must be >= 3");
  BoundSpec b;
  b.n = n;
  b.half_split = half_split_bound(n);
  b.matching = matching_tower(n, b.half_split, n);
  const auto stable = stable_set_bound(n, b.matching.back(), b.half_split);
  b.stable_ramsey = stable.ramsey;
  b.stable_size = stable.size;
  const Magnitude sizes[] = {b.stable_size, b.stable_size};
  b.order = ramsey_upper_bound(sizes);
  return b;
}

}  // namespace primewit
