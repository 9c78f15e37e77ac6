#include "modjl/classes.hpp"

#include <stdexcept>

namespace modjl {

std::int64_t canonical_elliptic_rep(const FieldCtx& ctx, std::int64_t t) {
  const std::int64_t n = ctx.n();
  t %= n;
  if (t < 0) t += n;
  std::int64_t tq = t * (ctx.q() % n) % n;
  return std::min(t, tq);
}

std::vector<SsClass> enumerate_ss_classes(const FieldCtx& ctx) {
  const std::int64_t q = ctx.q();
  std::vector<SsClass> out;
  out.reserve(static_cast<std::size_t>(q * (q - 1)));
  for (std::int64_t s = 0; s < q - 1; ++s)
    out.push_back({SsClass::Kind::Central, s, 0});
  for (std::int64_t s1 = 0; s1 < q - 1; ++s1)
    for (std::int64_t s2 = s1 + 1; s2 < q - 1; ++s2)
      out.push_back({SsClass::Kind::Split, s1, s2});
  for (std::int64_t t = 0; t < ctx.n(); ++t) {
    if (t % (q + 1) == 0) continue;  // lies in k^*
    if (canonical_elliptic_rep(ctx, t) != t) continue;
    out.push_back({SsClass::Kind::Elliptic, t, 0});
  }
  return out;
}

std::vector<std::int64_t> enumerate_l_classes(const FieldCtx& ctx) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(ctx.n()));
  for (std::size_t t = 0; t < out.size(); ++t)
    out[t] = static_cast<std::int64_t>(t);
  return out;
}

std::int64_t ss_class_index(const FieldCtx& ctx, const SsClass& c) {
  const std::int64_t q = ctx.q();
  const std::int64_t n_central = q - 1;
  const std::int64_t n_split = (q - 1) * (q - 2) / 2;
  switch (c.kind) {
    case SsClass::Kind::Central:
      if (c.x < 0 || c.x >= q - 1)
        throw std::invalid_argument("ss_class_index: central dlog range");
      return c.x;
    case SsClass::Kind::Split: {
      if (c.x < 0 || c.y <= c.x || c.y >= q - 1)
        throw std::invalid_argument("ss_class_index: split pair invalid");
      // position of (x, y) among pairs x < y in lexicographic order
      std::int64_t before = 0;
      for (std::int64_t s = 0; s < c.x; ++s) before += (q - 2 - s);
      return n_central + before + (c.y - c.x - 1);
    }
    case SsClass::Kind::Elliptic: {
      if (c.x % (q + 1) == 0 || canonical_elliptic_rep(ctx, c.x) != c.x)
        throw std::invalid_argument(
            "ss_class_index: not a canonical elliptic representative");
      std::int64_t rank = 0;
      for (std::int64_t t = 0; t < c.x; ++t) {
        if (t % (q + 1) == 0) continue;
        if (canonical_elliptic_rep(ctx, t) == t) ++rank;
      }
      return n_central + n_split + rank;
    }
  }
  throw std::logic_error("ss_class_index: unreachable");
}

std::pair<std::int64_t, std::int64_t> eigen_dlogs(const FieldCtx& ctx,
                                                  const SsClass& c) {
  const std::int64_t q = ctx.q();
  const std::int64_t n = ctx.n();
  switch (c.kind) {
    case SsClass::Kind::Central:
      return {(q + 1) * c.x % n, (q + 1) * c.x % n};
    case SsClass::Kind::Split:
      return {(q + 1) * c.x % n, (q + 1) * c.y % n};
    case SsClass::Kind::Elliptic:
      return {c.x, c.x * (q % n) % n};
  }
  throw std::logic_error("eigen_dlogs: unreachable");
}

std::size_t class_count(const FieldCtx& ctx, Group g) {
  if (g == Group::GL2)
    return static_cast<std::size_t>(ctx.q() * (ctx.q() - 1));
  return static_cast<std::size_t>(ctx.n());
}

ClassFn cf_constant(const FieldCtx& ctx, Group g, std::int64_t value) {
  std::vector<CycInt> vals(class_count(ctx, g), ctx.ring().from_int(value));
  return ClassFn(g, ctx.q(), std::move(vals));
}

namespace {
void check_compatible(const FieldCtx& ctx, const ClassFn& a, const ClassFn& b) {
  if (a.group() != b.group())
    throw std::invalid_argument("class functions on different groups");
  if (a.q() != b.q() || a.q() != ctx.q())
    throw std::invalid_argument("class functions from different contexts");
}
}  // namespace

ClassFn cf_add(const FieldCtx& ctx, const ClassFn& a, const ClassFn& b) {
  check_compatible(ctx, a, b);
  std::vector<CycInt> vals;
  vals.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i)
    vals.push_back(ctx.ring().add(a.values()[i], b.values()[i]));
  return ClassFn(a.group(), a.q(), std::move(vals));
}

ClassFn cf_sub(const FieldCtx& ctx, const ClassFn& a, const ClassFn& b) {
  check_compatible(ctx, a, b);
  std::vector<CycInt> vals;
  vals.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i)
    vals.push_back(ctx.ring().sub(a.values()[i], b.values()[i]));
  return ClassFn(a.group(), a.q(), std::move(vals));
}

ClassFn cf_mul(const FieldCtx& ctx, const ClassFn& a, const ClassFn& b) {
  check_compatible(ctx, a, b);
  std::vector<CycInt> vals;
  vals.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i)
    vals.push_back(ctx.ring().mul(a.values()[i], b.values()[i]));
  return ClassFn(a.group(), a.q(), std::move(vals));
}

ClassFn cf_scale(const FieldCtx& ctx, const ClassFn& a, std::int64_t s) {
  if (a.q() != ctx.q())
    throw std::invalid_argument("class function from a different context");
  std::vector<CycInt> vals;
  vals.reserve(a.values().size());
  for (const auto& v : a.values()) vals.push_back(ctx.ring().scale(v, s));
  return ClassFn(a.group(), a.q(), std::move(vals));
}

std::int64_t gl2_order(const FieldCtx& ctx) {
  const std::int64_t q = ctx.q();
  return (q * q - 1) * (q * q - q);
}

std::vector<FullClass> enumerate_full_classes(const FieldCtx& ctx) {
  const std::int64_t q = ctx.q();
  std::vector<FullClass> out;
  out.reserve(static_cast<std::size_t>(q * q - 1));
  for (std::int64_t s = 0; s < q - 1; ++s)
    out.push_back({FullClass::Kind::Central, s, 0, 1});
  for (std::int64_t s = 0; s < q - 1; ++s)
    out.push_back({FullClass::Kind::NonSemisimple, s, 0, q * q - 1});
  for (std::int64_t s1 = 0; s1 < q - 1; ++s1)
    for (std::int64_t s2 = s1 + 1; s2 < q - 1; ++s2)
      out.push_back({FullClass::Kind::Split, s1, s2, q * (q + 1)});
  for (std::int64_t t = 0; t < ctx.n(); ++t) {
    if (t % (q + 1) == 0) continue;
    if (canonical_elliptic_rep(ctx, t) != t) continue;
    out.push_back({FullClass::Kind::Elliptic, t, 0, q * q - q});
  }
  return out;
}

Mat2 mat_mul(const FieldCtx& ctx, const Mat2& m1, const Mat2& m2) {
  auto dot = [&](FlElem u1, FlElem v1, FlElem u2, FlElem v2) {
    return ctx.add(ctx.mul(u1, u2), ctx.mul(v1, v2));
  };
  return Mat2{dot(m1.a, m1.b, m2.a, m2.c), dot(m1.a, m1.b, m2.b, m2.d),
              dot(m1.c, m1.d, m2.a, m2.c), dot(m1.c, m1.d, m2.b, m2.d)};
}

FlElem mat_det(const FieldCtx& ctx, const Mat2& m) {
  return ctx.add(ctx.mul(m.a, m.d), ctx.neg(ctx.mul(m.b, m.c)));
}

Mat2 mat_inv(const FieldCtx& ctx, const Mat2& m) {
  FlElem det = mat_det(ctx, m);
  if (det.is_zero()) throw std::domain_error("mat_inv: singular matrix");
  FlElem di = ctx.inv(det);
  return Mat2{ctx.mul(m.d, di), ctx.mul(ctx.neg(m.b), di),
              ctx.mul(ctx.neg(m.c), di), ctx.mul(m.a, di)};
}

FullClass class_of(const FieldCtx& ctx, const Mat2& m) {
  FlElem det = mat_det(ctx, m);
  if (det.is_zero()) throw std::domain_error("class_of: singular matrix");
  const std::int64_t q = ctx.q();
  FlElem tr = ctx.add(m.a, m.d);
  // roots of x^2 - tr x + det in k (by scanning; oracle-only path)
  std::vector<FlElem> roots;
  auto try_root = [&](FlElem x) {
    FlElem v = ctx.add(ctx.mul(x, x),
                       ctx.add(ctx.neg(ctx.mul(tr, x)), det));
    if (v.is_zero()) roots.push_back(x);
  };
  try_root(FlElem::zero());
  for (std::int64_t s = 0; s < q - 1; ++s) try_root(ctx.from_k_dlog(s));
  if (roots.size() == 2) {
    std::int64_t s1 = ctx.k_dlog(roots[0]);
    std::int64_t s2 = ctx.k_dlog(roots[1]);
    if (s1 > s2) std::swap(s1, s2);
    return {FullClass::Kind::Split, s1, s2, q * (q + 1)};
  }
  if (roots.size() == 1) {
    std::int64_t s = ctx.k_dlog(roots[0]);
    bool scalar = m.b.is_zero() && m.c.is_zero() && m.a == m.d;
    if (scalar) return {FullClass::Kind::Central, s, 0, 1};
    return {FullClass::Kind::NonSemisimple, s, 0, q * q - 1};
  }
  // irreducible characteristic polynomial: find the root in l
  for (std::int64_t t = 0; t < ctx.n(); ++t) {
    if (t % (q + 1) == 0) continue;
    FlElem z = FlElem::from_dlog(t, ctx.n());
    FlElem v = ctx.add(ctx.mul(z, z),
                       ctx.add(ctx.neg(ctx.mul(tr, z)), det));
    if (v.is_zero())
      return {FullClass::Kind::Elliptic, canonical_elliptic_rep(ctx, t), 0,
              q * q - q};
  }
  throw std::logic_error("class_of: characteristic polynomial has no root");
}

Mat2 embed_l_element(const FieldCtx& ctx, FlElem z) {
  // columns are the k-coordinates of z*1 and z*gamma in the basis {1, gamma}
  auto [a, c] = ctx.k_coordinates(z);
  auto [b, d] = ctx.k_coordinates(ctx.mul(z, ctx.gamma()));
  return Mat2{a, b, c, d};
}

Mat2 representative_matrix(const FieldCtx& ctx, const FullClass& c) {
  switch (c.kind) {
    case FullClass::Kind::Central: {
      FlElem x = ctx.from_k_dlog(c.x);
      return Mat2{x, FlElem::zero(), FlElem::zero(), x};
    }
    case FullClass::Kind::NonSemisimple: {
      FlElem x = ctx.from_k_dlog(c.x);
      return Mat2{x, ctx.one(), FlElem::zero(), x};
    }
    case FullClass::Kind::Split:
      return Mat2{ctx.from_k_dlog(c.x), FlElem::zero(), FlElem::zero(),
                  ctx.from_k_dlog(c.y)};
    case FullClass::Kind::Elliptic:
      return embed_l_element(ctx, FlElem::from_dlog(c.x, ctx.n()));
  }
  throw std::logic_error("representative_matrix: unreachable");
}

std::vector<Mat2> all_invertible_matrices(const FieldCtx& ctx) {
  if (ctx.q() > 9)
    throw std::invalid_argument(
        "all_invertible_matrices: group too large (q <= 9)");
  const std::int64_t q = ctx.q();
  std::vector<FlElem> elems;
  elems.push_back(FlElem::zero());
  for (std::int64_t s = 0; s < q - 1; ++s) elems.push_back(ctx.from_k_dlog(s));
  std::vector<Mat2> out;
  out.reserve(static_cast<std::size_t>(gl2_order(ctx)));
  for (FlElem a : elems)
    for (FlElem b : elems)
      for (FlElem c : elems)
        for (FlElem d : elems) {
          Mat2 m{a, b, c, d};
          if (!mat_det(ctx, m).is_zero()) out.push_back(m);
        }
  return out;
}

}  // namespace modjl
