#include "modjl/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "modjl/modular.hpp"

namespace modjl {

namespace {

bool small_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t ipow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  while (e--) r *= b;
  return r;
}

// dense polynomial arithmetic over F_p for tiny degrees
using Poly = std::vector<std::int64_t>;  // constant term first, no trailing zeros

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(std::move(c));
}

Poly poly_mod(Poly a, const Poly& m, std::int64_t p) {
  // m monic
  a = trim(std::move(a));
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::int64_t c = a.back();
    std::size_t sh = a.size() - 1 - dm;
    if (c != 0)
      for (std::size_t j = 0; j < m.size(); ++j)
        a[sh + j] = ((a[sh + j] - c * m[j]) % p + p) % p;
    a.pop_back();
    a = trim(std::move(a));
  }
  return a;
}

Poly poly_powmod_x(std::int64_t e_base, std::int64_t e_exp, const Poly& m,
                   std::int64_t p) {
  // computes x^(e_base^e_exp) mod m by repeated p-th powering when
  // e_base == p; general square-and-multiply on the exponent otherwise.
  // Here we only need x^(p^k): iterate the p-power map k times.
  Poly r = {0, 1};  // x
  for (std::int64_t i = 0; i < e_exp; ++i) {
    // r <- r^p mod m, square-and-multiply on exponent p
    Poly acc = {1};
    Poly base = r;
    std::int64_t e = e_base;
    while (e) {
      if (e & 1) acc = poly_mod(poly_mul(acc, base, p), m, p);
      base = poly_mod(poly_mul(base, base, p), m, p);
      e >>= 1;
    }
    r = acc;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  while (!b.empty()) {
    // make b monic
    std::int64_t lead = b.back();
    if (lead != 1) {
      std::int64_t inv = 1;
      for (std::int64_t c = 1; c < p; ++c)
        if (c * lead % p == 1) inv = c;
      for (auto& v : b) v = v * inv % p;
    }
    Poly r = poly_mod(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin irreducibility test for a monic polynomial of degree d over F_p.
bool is_irreducible(const Poly& m, std::int64_t p) {
  const auto d = static_cast<std::int64_t>(m.size()) - 1;
  Poly xpd = poly_powmod_x(p, d, m, p);
  // x^(p^d) == x mod m
  Poly diff = xpd;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  if (!trim(std::move(diff)).empty()) return false;
  for (std::int64_t r : modular::prime_factors(d)) {
    Poly xe = poly_powmod_x(p, d / r, m, p);
    Poly g = xe;
    if (g.size() < 2) g.resize(2, 0);
    g[1] = ((g[1] - 1) % p + p) % p;
    g = trim(std::move(g));
    Poly gc = poly_gcd(m, g, p);
    if (gc.size() != 1) return false;  // nontrivial common factor
  }
  return true;
}

}  // namespace

FlElem FlElem::from_dlog(std::int64_t t, std::int64_t n) {
  FlElem e;
  t %= n;
  if (t < 0) t += n;
  e.d_ = t;
  return e;
}

std::int64_t FlElem::dlog() const {
  if (d_ < 0) throw std::logic_error("FlElem::dlog of zero");
  return d_;
}

FieldCtx::FieldCtx(std::int64_t p, std::int64_t f, std::int64_t max_q)
    : p_(p), f_(f), q_(0), n_(0), ring_(2) {
  if (!small_prime(p)) throw std::invalid_argument("FieldCtx: p is not prime");
  if (f < 1) throw std::invalid_argument("FieldCtx: f must be >= 1");
  // overflow-safe bound check before computing q
  std::int64_t q = 1;
  for (std::int64_t i = 0; i < f; ++i) {
    q *= p;
    if (q > max_q)
      throw std::invalid_argument("FieldCtx: q exceeds the configured bound");
  }
  q_ = q;
  n_ = q_ * q_ - 1;

  const std::int64_t d = 2 * f_;
  const std::int64_t q2 = q_ * q_;

  // first irreducible monic polynomial of degree 2f, lexicographic on
  // (c_0, ..., c_{d-1})
  {
    std::vector<std::int64_t> digits(static_cast<std::size_t>(d), 0);
    bool found = false;
    // lexicographic on (c_0,...,c_{d-1}): c_0 is the most significant digit
    for (std::int64_t v = 0; v < q2 && !found; ++v) {
      std::int64_t x = v;
      for (std::int64_t i = d - 1; i >= 0; --i) {
        digits[static_cast<std::size_t>(i)] = x % p_;
        x /= p_;
      }
      Poly cand(digits.begin(), digits.end());
      cand.push_back(1);  // monic
      if (is_irreducible(cand, p_)) {
        modulus_ = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("FieldCtx: no irreducible polynomial");
  }

  // index arithmetic: multiplication in F_p[x]/(modulus)
  auto idx_digits = [&](std::int64_t idx) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i) {
      a[static_cast<std::size_t>(i)] = idx % p_;
      idx /= p_;
    }
    return a;
  };
  auto digits_idx = [&](const std::vector<std::int64_t>& a) {
    std::int64_t idx = 0;
    for (std::int64_t i = d - 1; i >= 0; --i)
      idx = idx * p_ + a[static_cast<std::size_t>(i)];
    return idx;
  };
  auto idx_mul = [&](std::int64_t i, std::int64_t j) {
    Poly a = trim(idx_digits(i));
    Poly b = trim(idx_digits(j));
    Poly c = poly_mod(poly_mul(a, b, p_), modulus_, p_);
    c.resize(static_cast<std::size_t>(d), 0);
    return digits_idx(c);
  };

  // gamma: first generator in lexicographic order on (a_0, ..., a_{d-1})
  auto idx_pow = [&](std::int64_t idx, std::int64_t e) {
    std::int64_t acc = 1;  // index 1 encodes the element 1
    std::int64_t base = idx;
    while (e) {
      if (e & 1) acc = idx_mul(acc, base);
      base = idx_mul(base, base);
      e >>= 1;
    }
    return acc;
  };
  auto order_is_n = [&](std::int64_t idx) {
    if (idx == 0) return false;
    for (std::int64_t r : modular::prime_factors(n_))
      if (idx_pow(idx, n_ / r) == 1) return false;
    return true;
  };
  std::int64_t gamma_idx = -1;
  {
    // lexicographic on (a_0,...,a_{d-1}) with a_0 most significant
    std::vector<std::int64_t> a(static_cast<std::size_t>(d), 0);
    for (std::int64_t v = 1; v < q2 && gamma_idx < 0; ++v) {
      std::int64_t x = v;
      for (std::int64_t i = d - 1; i >= 0; --i) {
        a[static_cast<std::size_t>(i)] = x % p_;
        x /= p_;
      }
      // reinterpret lexicographic counter as element index
      std::int64_t idx = digits_idx(a);
      if (order_is_n(idx)) gamma_idx = idx;
    }
    if (gamma_idx < 0) throw std::logic_error("FieldCtx: no generator found");
  }

  // power and dlog tables
  pow_idx_.assign(static_cast<std::size_t>(n_), 0);
  dlog_idx_.assign(static_cast<std::size_t>(q2), -1);
  std::int64_t cur = 1;
  for (std::int64_t t = 0; t < n_; ++t) {
    pow_idx_[static_cast<std::size_t>(t)] = cur;
    dlog_idx_[static_cast<std::size_t>(cur)] = t;
    cur = idx_mul(cur, gamma_idx);
  }
  if (cur != 1) throw std::logic_error("FieldCtx: gamma order mismatch");

  // Zech logarithms: zech[t] = dlog(1 + gamma^t)
  zech_.assign(static_cast<std::size_t>(n_), -1);
  for (std::int64_t t = 0; t < n_; ++t) {
    std::int64_t s = index_add_impl(pow_idx_[static_cast<std::size_t>(t)], 1);
    zech_[static_cast<std::size_t>(t)] = dlog_idx_[static_cast<std::size_t>(s)];
  }

  // k-coordinates: z = a + b*gamma with a, b in k
  kcoord_.assign(static_cast<std::size_t>(q2), {0, 0});
  {
    std::vector<std::int64_t> k_indices;  // indices of elements of k
    k_indices.push_back(0);
    for (std::int64_t s = 0; s < q_ - 1; ++s)
      k_indices.push_back(
          pow_idx_[static_cast<std::size_t>((q_ + 1) * s % n_)]);
    for (std::int64_t bi : k_indices) {
      std::int64_t bg = idx_mul(bi, gamma_idx);
      for (std::int64_t ai : k_indices) {
        std::int64_t z = index_add_impl(ai, bg);
        kcoord_[static_cast<std::size_t>(z)] = {ai, bi};
      }
    }
  }

  ring_ = CyclotomicRing(n_);
}

std::int64_t FieldCtx::index_add_impl(std::int64_t i, std::int64_t j) const {
  std::int64_t out = 0;
  std::int64_t mult = 1;
  for (std::int64_t k = 0; k < 2 * f_; ++k) {
    std::int64_t di = i % p_, dj = j % p_;
    out += ((di + dj) % p_) * mult;
    i /= p_;
    j /= p_;
    mult *= p_;
  }
  return out;
}

FlElem FieldCtx::add(FlElem a, FlElem b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t s = a.dlog(), t = b.dlog();
  // gamma^s + gamma^t = gamma^s (1 + gamma^{t-s})
  std::int64_t u = (t - s) % n_;
  if (u < 0) u += n_;
  std::int64_t z = zech_[static_cast<std::size_t>(u)];
  if (z < 0) return FlElem::zero();
  return FlElem::from_dlog(s + z, n_);
}

FlElem FieldCtx::neg(FlElem a) const {
  if (a.is_zero()) return a;
  if (p_ == 2) return a;
  return FlElem::from_dlog(a.dlog() + n_ / 2, n_);
}

FlElem FieldCtx::mul(FlElem a, FlElem b) const {
  if (a.is_zero() || b.is_zero()) return FlElem::zero();
  return FlElem::from_dlog(a.dlog() + b.dlog(), n_);
}

FlElem FieldCtx::inv(FlElem a) const {
  if (a.is_zero()) throw std::domain_error("FieldCtx::inv: zero");
  return FlElem::from_dlog(-a.dlog(), n_);
}

FlElem FieldCtx::pow(FlElem a, std::int64_t e) const {
  if (a.is_zero()) {
    if (e <= 0) throw std::domain_error("FieldCtx::pow: 0^e with e <= 0");
    return a;
  }
  std::int64_t t = a.dlog() % n_;
  std::int64_t en = e % n_;
  return FlElem::from_dlog(t * en, n_);
}

FlElem FieldCtx::frobenius(FlElem a) const {
  if (a.is_zero()) return a;
  return FlElem::from_dlog(a.dlog() * (q_ % n_), n_);
}

FlElem FieldCtx::norm(FlElem a) const {
  if (a.is_zero()) return a;
  return FlElem::from_dlog(a.dlog() * ((q_ + 1) % n_), n_);
}

bool FieldCtx::in_k(FlElem a) const {
  if (a.is_zero()) return true;
  return a.dlog() % (q_ + 1) == 0;
}

std::int64_t FieldCtx::k_dlog(FlElem a) const {
  if (a.is_zero() || !in_k(a))
    throw std::domain_error("FieldCtx::k_dlog: not in k^*");
  return a.dlog() / (q_ + 1);
}

FlElem FieldCtx::from_k_dlog(std::int64_t s) const {
  s %= (q_ - 1);
  if (s < 0) s += q_ - 1;
  return FlElem::from_dlog((q_ + 1) * s, n_);
}

CycInt FieldCtx::teich(FlElem z) const {
  if (z.is_zero())
    throw std::domain_error("FieldCtx::teich: zero has no Teichmueller lift");
  return ring_.zeta_pow(z.dlog());
}

std::int64_t FieldCtx::element_index(FlElem a) const {
  if (a.is_zero()) return 0;
  return pow_idx_[static_cast<std::size_t>(a.dlog())];
}

FlElem FieldCtx::element_from_index(std::int64_t idx) const {
  if (idx == 0) return FlElem::zero();
  std::int64_t t = dlog_idx_[static_cast<std::size_t>(idx)];
  return FlElem::from_dlog(t, n_);
}

std::int64_t FieldCtx::index_add(std::int64_t i, std::int64_t j) const {
  return index_add_impl(i, j);
}

std::pair<FlElem, FlElem> FieldCtx::k_coordinates(FlElem z) const {
  auto [ai, bi] = kcoord_[static_cast<std::size_t>(element_index(z))];
  return {element_from_index(ai), element_from_index(bi)};
}

}  // namespace modjl
