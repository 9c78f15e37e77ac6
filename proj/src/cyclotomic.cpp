#include "modjl/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "modjl/modular.hpp"

namespace modjl {

namespace {

std::int64_t checked_narrow(__int128 v, const char* where) {
  if (v > static_cast<__int128>(INT64_MAX) ||
      v < static_cast<__int128>(INT64_MIN))
    throw std::overflow_error(std::string(where) + ": coefficient overflow");
  return static_cast<std::int64_t>(v);
}

// Exact division of integer polynomials, divisor monic.  Both vectors are
// constant-term-first; remainder must come out zero.
std::vector<std::int64_t> exact_div(std::vector<std::int64_t> num,
                                    const std::vector<std::int64_t>& den) {
  const std::size_t dn = num.size() - 1;
  const std::size_t dd = den.size() - 1;
  std::vector<std::int64_t> q(dn - dd + 1, 0);
  for (std::size_t sh = dn - dd + 1; sh-- > 0;) {
    std::int64_t c = num[sh + dd];
    q[sh] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[sh + j] -= c * den[j];
  }
  for (std::size_t j = 0; j <= dd; ++j)
    if (num[j] != 0) throw std::logic_error("exact_div: nonzero remainder");
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n >= 1");
  // Phi_d for all divisors d of n, by dividing x^d - 1 by the earlier ones.
  std::map<std::int64_t, std::vector<std::int64_t>> phi;
  std::vector<std::int64_t> divisors;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  for (std::int64_t d : divisors) {
    std::vector<std::int64_t> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (std::int64_t e : divisors) {
      if (e >= d || d % e != 0) continue;
      poly = exact_div(std::move(poly), phi.at(e));
    }
    phi[d] = std::move(poly);
  }
  return phi.at(n);
}

CyclotomicRing::CyclotomicRing(std::int64_t n) : n_(n) {
  if (n < 2) throw std::invalid_argument("CyclotomicRing: n >= 2 required");
  phi_ = cyclotomic_polynomial(n);
  deg_ = static_cast<std::int64_t>(phi_.size()) - 1;
  rem_.reserve(static_cast<std::size_t>(n_));
  std::vector<std::int64_t> cur(static_cast<std::size_t>(deg_), 0);
  cur[0] = 1;
  rem_.push_back(cur);
  for (std::int64_t t = 1; t < n_; ++t) {
    std::int64_t top = cur[static_cast<std::size_t>(deg_ - 1)];
    for (std::size_t i = static_cast<std::size_t>(deg_ - 1); i > 0; --i)
      cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < static_cast<std::size_t>(deg_); ++i)
        cur[i] -= top * phi_[i];
    }
    rem_.push_back(cur);
  }
}

void CyclotomicRing::check(const CycInt& a) const {
  if (a.modulus_order() != n_)
    throw std::invalid_argument("CycInt from a different ring (n mismatch)");
}

bool CycInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](std::int64_t v) { return v == 0; });
}

bool CycInt::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::int64_t CycInt::integer_value() const {
  if (!is_integer())
    throw std::logic_error("CycInt::integer_value: not a rational integer");
  return c_.empty() ? 0 : c_[0];
}

CycInt CyclotomicRing::zero() const {
  return CycInt(n_, std::vector<std::int64_t>(static_cast<std::size_t>(deg_)));
}

CycInt CyclotomicRing::one() const { return from_int(1); }

CycInt CyclotomicRing::from_int(std::int64_t v) const {
  std::vector<std::int64_t> c(static_cast<std::size_t>(deg_), 0);
  c[0] = v;
  return CycInt(n_, std::move(c));
}

CycInt CyclotomicRing::zeta_pow(std::int64_t t) const {
  t %= n_;
  if (t < 0) t += n_;
  return CycInt(n_, rem_[static_cast<std::size_t>(t)]);
}

CycInt CyclotomicRing::from_coeffs(std::span<const std::int64_t> coeffs) const {
  std::vector<__int128> acc(static_cast<std::size_t>(deg_), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (i < static_cast<std::size_t>(deg_)) {
      acc[i] += coeffs[i];
    } else {
      // exponents are reduced mod n first (zeta^n = 1), then by table
      const auto& row = rem_[i % static_cast<std::size_t>(n_)];
      for (std::size_t j = 0; j < row.size(); ++j)
        acc[j] += static_cast<__int128>(coeffs[i]) * row[j];
    }
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(deg_));
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = checked_narrow(acc[j], "from_coeffs");
  return CycInt(n_, std::move(out));
}

CycInt CyclotomicRing::add(const CycInt& a, const CycInt& b) const {
  check(a);
  check(b);
  std::vector<std::int64_t> c(a.c_);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_narrow(static_cast<__int128>(c[i]) + b.c_[i], "add");
  return CycInt(n_, std::move(c));
}

CycInt CyclotomicRing::sub(const CycInt& a, const CycInt& b) const {
  check(a);
  check(b);
  std::vector<std::int64_t> c(a.c_);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_narrow(static_cast<__int128>(c[i]) - b.c_[i], "sub");
  return CycInt(n_, std::move(c));
}

CycInt CyclotomicRing::neg(const CycInt& a) const {
  check(a);
  std::vector<std::int64_t> c(a.c_);
  for (auto& v : c) v = -v;
  return CycInt(n_, std::move(c));
}

CycInt CyclotomicRing::scale(const CycInt& a, std::int64_t s) const {
  check(a);
  std::vector<std::int64_t> c(a.c_);
  for (auto& v : c)
    v = checked_narrow(static_cast<__int128>(v) * s, "scale");
  return CycInt(n_, std::move(c));
}

CycInt CyclotomicRing::mul(const CycInt& a, const CycInt& b) const {
  check(a);
  check(b);
  const auto d = static_cast<std::size_t>(deg_);
  std::vector<__int128> conv(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += static_cast<__int128>(a.c_[i]) * b.c_[j];
    }
  }
  std::vector<__int128> acc(d, 0);
  for (std::size_t i = 0; i < d; ++i) acc[i] = conv[i];
  for (std::size_t i = d; i < conv.size(); ++i) {
    if (conv[i] == 0) continue;
    // zeta^n = 1, so exponents reduce mod n before the table lookup
    const auto& row = rem_[i % static_cast<std::size_t>(n_)];
    for (std::size_t j = 0; j < d; ++j) acc[j] += conv[i] * row[j];
  }
  std::vector<std::int64_t> out(d);
  for (std::size_t j = 0; j < d; ++j) out[j] = checked_narrow(acc[j], "mul");
  return CycInt(n_, std::move(out));
}

CycInt CyclotomicRing::conj(const CycInt& a) const {
  check(a);
  std::vector<__int128> acc(static_cast<std::size_t>(deg_), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    const auto& row = rem_[static_cast<std::size_t>(
        (n_ - static_cast<std::int64_t>(i)) % n_)];
    for (std::size_t j = 0; j < row.size(); ++j)
      acc[j] += static_cast<__int128>(a.c_[i]) * row[j];
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(deg_));
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = checked_narrow(acc[j], "conj");
  return CycInt(n_, std::move(out));
}

CycInt CyclotomicRing::geometric(std::int64_t a, std::int64_t b,
                                 std::int64_t d, std::int64_t shift) const {
  if (d < 0) throw std::invalid_argument("geometric: d >= 0 required");
  std::vector<__int128> acc(static_cast<std::size_t>(deg_), 0);
  for (std::int64_t i = 0; i <= d; ++i) {
    std::int64_t e = ((a % n_) * (i % n_) + (b % n_) * ((d - i) % n_) + shift) % n_;
    e %= n_;
    if (e < 0) e += n_;
    const auto& row = rem_[static_cast<std::size_t>(e)];
    for (std::size_t j = 0; j < row.size(); ++j) acc[j] += row[j];
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(deg_));
  for (std::size_t j = 0; j < out.size(); ++j)
    out[j] = checked_narrow(acc[j], "geometric");
  return CycInt(n_, std::move(out));
}

std::int64_t CyclotomicRing::eval_mod(const CycInt& a, std::int64_t ell,
                                      std::int64_t root) const {
  check(a);
  if (ell <= 1 || (ell - 1) % n_ != 0 ||
      !modular::is_prime(static_cast<std::uint64_t>(ell)))
    throw std::invalid_argument("eval_mod: ell must be prime, ell = 1 mod n");
  if (!modular::has_exact_order(root, n_, ell))
    throw std::invalid_argument("eval_mod: root must have exact order n");
  const auto l = static_cast<std::uint64_t>(ell);
  std::uint64_t acc = 0;
  std::uint64_t zp = 1;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    std::int64_t c = a.c_[i] % ell;
    if (c < 0) c += ell;
    acc = (acc + modular::mulmod(static_cast<std::uint64_t>(c), zp, l)) % l;
    zp = modular::mulmod(zp, static_cast<std::uint64_t>(root), l);
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace modjl
