#include <doctest.h>

#include "modjl/field.hpp"

using namespace modjl;

TEST_CASE("context construction: q = 3, 4, 9") {
  FieldCtx c3(3, 1);
  CHECK(c3.q() == 3);
  CHECK(c3.n() == 8);
  CHECK(c3.gamma_k() == c3.pow(c3.gamma(), 4));  // q + 1 = 4

  FieldCtx c4(2, 2);
  CHECK(c4.q() == 4);
  CHECK(c4.n() == 15);

  FieldCtx c9(3, 2);
  CHECK(c9.q() == 9);
  CHECK(c9.n() == 80);
  // gamma_k has order exactly q - 1 = 8
  FlElem gk = c9.gamma_k();
  FlElem acc = c9.one();
  int order = 0;
  do {
    acc = c9.mul(acc, gk);
    ++order;
  } while (!(acc == c9.one()));
  CHECK(order == 8);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(FieldCtx(4, 1), std::invalid_argument);   // not prime
  CHECK_THROWS_AS(FieldCtx(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx(37, 1), std::invalid_argument);  // q over bound
  CHECK_THROWS_AS(FieldCtx(2, 6), std::invalid_argument);   // 64 > 32
  CHECK_NOTHROW(FieldCtx(2, 6, 64));                        // raised bound
}

TEST_CASE("gamma generates and the Zech table is consistent") {
  for (auto [p, f] : {std::pair<std::int64_t, std::int64_t>{2, 1},
                      {3, 1},
                      {2, 2},
                      {5, 1},
                      {3, 2}}) {
    CAPTURE(p);
    CAPTURE(f);
    FieldCtx ctx(p, f);
    const std::int64_t n = ctx.n();
    // gamma has order exactly n
    for (std::int64_t t = 1; t < n; ++t)
      CHECK(!(ctx.pow(ctx.gamma(), t) == ctx.one()));
    CHECK(ctx.pow(ctx.gamma(), n) == ctx.one());
    // zech[t] encodes 1 + gamma^t
    const auto& zech = ctx.zech_table();
    for (std::int64_t t = 0; t < n; ++t) {
      FlElem sum = ctx.add(ctx.one(), FlElem::from_dlog(t, n));
      if (zech[static_cast<std::size_t>(t)] < 0) {
        CHECK(sum.is_zero());
      } else {
        CHECK(sum.dlog() == zech[static_cast<std::size_t>(t)]);
      }
    }
  }
}

TEST_CASE("arithmetic examples at q = 3") {
  FieldCtx ctx(3, 1);
  // norm(gamma) = gamma^4, which is the element 2 of k
  CHECK(ctx.norm(ctx.gamma()) == ctx.pow(ctx.gamma(), 4));
  CHECK(ctx.in_k(ctx.norm(ctx.gamma())));
  // frobenius(gamma) = gamma^3
  CHECK(ctx.frobenius(ctx.gamma()) == ctx.pow(ctx.gamma(), 3));
  // 1 + 2 = 0 in F_3 (2 = gamma^4)
  CHECK(ctx.add(ctx.one(), ctx.pow(ctx.gamma(), 4)).is_zero());
  CHECK_THROWS_AS(ctx.inv(FlElem::zero()), std::domain_error);
}

TEST_CASE("norm lands in k and matches gamma_k powers") {
  for (auto [p, f] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {3, 2}}) {
    FieldCtx ctx(p, f);
    CHECK(ctx.norm(ctx.gamma()) == ctx.gamma_k());
    for (std::int64_t t = 0; t < ctx.n(); ++t) {
      FlElem z = FlElem::from_dlog(t, ctx.n());
      CHECK(ctx.in_k(ctx.norm(z)));
      // norm is multiplicative: both sides have dlog t(q+1)
      CHECK(ctx.norm(z) == ctx.pow(z, ctx.q() + 1));
    }
  }
}

TEST_CASE("Teichmueller lift examples at q = 3") {
  FieldCtx ctx(3, 1);
  const auto& ring = ctx.ring();
  CHECK(ctx.teich(ctx.one()) == ring.one());
  CHECK(ctx.teich(ctx.gamma()) == ring.zeta_pow(1));
  // 2 = gamma^4 lifts to zeta^4 = -1
  CHECK(ctx.teich(ctx.pow(ctx.gamma(), 4)) == ring.from_int(-1));
  CHECK_THROWS_AS(ctx.teich(FlElem::zero()), std::domain_error);
}

TEST_CASE("teich is multiplicative (exhaustive for n <= 80)") {
  for (auto [p, f] : {std::pair<std::int64_t, std::int64_t>{2, 1},
                      {3, 1},
                      {2, 2},
                      {5, 1},
                      {7, 1},
                      {2, 3},
                      {3, 2}}) {
    CAPTURE(p);
    CAPTURE(f);
    FieldCtx ctx(p, f);
    const auto& ring = ctx.ring();
    const std::int64_t n = ctx.n();
    for (std::int64_t s = 0; s < n; ++s) {
      FlElem z = FlElem::from_dlog(s, n);
      // conj(teich(z)) = teich(z^{-1})
      CHECK(ring.conj(ctx.teich(z)) == ctx.teich(ctx.inv(z)));
      for (std::int64_t t = 0; t < n; ++t) {
        FlElem w = FlElem::from_dlog(t, n);
        if (ring.mul(ctx.teich(z), ctx.teich(w)) !=
            ctx.teich(ctx.mul(z, w))) {
          FAIL("teich not multiplicative at ", s, ",", t, " (q=", ctx.q(),
               ")");
        }
      }
    }
  }
}

TEST_CASE("k coordinates decompose every element of l") {
  for (auto [p, f] : {std::pair<std::int64_t, std::int64_t>{3, 1}, {2, 2}}) {
    FieldCtx ctx(p, f);
    for (std::int64_t idx = 0; idx < ctx.q() * ctx.q(); ++idx) {
      FlElem z = ctx.element_from_index(idx);
      auto [a, b] = ctx.k_coordinates(z);
      CHECK(ctx.in_k(a));
      CHECK(ctx.in_k(b));
      CHECK(ctx.add(a, ctx.mul(b, ctx.gamma())) == z);
    }
  }
}
