// Copyright 2026 The ellspread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <set>

#include "doctest.h"
#include "ellspread/errors.hpp"
#include "ellspread/linalg.hpp"
#include "ellspread/spreads.hpp"
#include "oracles.hpp"

using namespace ellspread;

namespace {

struct Fixture {
  FieldPtr ctx;
  FramePtr frame;
  explicit Fixture(unsigned e, unsigned m) : ctx(FieldCtx::make(e, m)), frame(CoordFrame::make(ctx)) {}

  [[nodiscard]] FieldElement random(std::mt19937_64& rng) const { return {rng() & (ctx->size() - 1)}; }

  [[nodiscard]] Subspace random_subspace(std::mt19937_64& rng, unsigned gens) const {
    std::vector<FieldElement> g;
    for (unsigned i = 0; i < gens; ++i) g.push_back(random(rng));
    return span(frame, g);
  }

  // Vector set of span(gens) by closure under + and GF(q)-scaling.
  [[nodiscard]] std::set<std::uint64_t> vectors(const std::vector<FieldElement>& gens) const {
    std::vector<std::uint64_t> g;
    for (auto x : gens) g.push_back(x.bits);
    std::vector<std::uint64_t> scalars;
    for (std::uint64_t v = 1; v < ctx->size(); ++v) {
      if (ctx->in_subfield({v}, ctx->e())) scalars.push_back(v);
    }
    return oracle::closure(g, scalars, [&](std::uint64_t a, std::uint64_t b) { return ctx->mul({a}, {b}).bits; });
  }
};

}  // namespace

TEST_CASE("coordinates") {
  Fixture fx(2, 3);
  const auto& frame = *fx.frame;
  CHECK(frame.dim() == 6);
  const auto zero = frame.coords(FieldCtx::zero());
  CHECK(std::all_of(zero.begin(), zero.end(), [](auto c) { return c == 0; }));
  FieldElement p = FieldCtx::one();
  for (unsigned j = 0; j < frame.dim(); ++j) {
    CoordVec unit(frame.dim(), 0);
    unit[j] = 1;
    CHECK(frame.coords(p) == unit);
    p = fx.ctx->mul(p, FieldCtx::generator());
  }
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto x = fx.random(rng);
    const auto y = fx.random(rng);
    CHECK(frame.uncoords(frame.coords(x)) == x);
    // Coordinates are additive.
    auto cx = frame.coords(x);
    const auto cy = frame.coords(y);
    for (unsigned j = 0; j < cx.size(); ++j) cx[j] ^= cy[j];
    CHECK(cx == frame.coords(x + y));
  }
}

TEST_CASE("scalar subfield arithmetic matches the ambient field") {
  Fixture fx(3, 3);
  const auto& s = fx.frame->scalars();
  for (unsigned a = 0; a < s.size(); ++a) {
    CHECK(fx.ctx->in_subfield(s.embed(static_cast<Scalars::Value>(a)), 3));
    for (unsigned b = 0; b < s.size(); ++b) {
      const auto av = static_cast<Scalars::Value>(a);
      const auto bv = static_cast<Scalars::Value>(b);
      CHECK(s.embed(s.mul(av, bv)) == fx.ctx->mul(s.embed(av), s.embed(bv)));
    }
    if (a != 0) CHECK(s.mul(static_cast<Scalars::Value>(a), s.inv(static_cast<Scalars::Value>(a))) == 1);
  }
  CHECK_THROWS_AS((void)s.compact(FieldCtx::generator()), DomainError);
}

TEST_CASE("span") {
  Fixture fx(1, 3);
  const auto g = FieldCtx::generator();
  const auto g2 = fx.ctx->mul(g, g);
  CHECK(span(fx.frame, std::vector<FieldElement>{}).dim() == 0);
  CHECK(span(fx.frame, std::vector<FieldElement>{g, g2}).dim() == 2);

  Fixture f2(2, 3);
  std::mt19937_64 rng(2);
  const auto& scal = f2.frame->scalars();
  for (int i = 0; i < 50; ++i) {
    const auto x = f2.random(rng);
    const auto y = f2.random(rng);
    const auto lambda = scal.embed(static_cast<Scalars::Value>(1 + rng() % 3));
    const auto a = span(f2.frame, std::vector<FieldElement>{x, f2.ctx->mul(lambda, x), x + y});
    const auto b = span(f2.frame, std::vector<FieldElement>{x, y});
    CHECK(a == b);
    // Idempotence on the canonical basis.
    CHECK(span(f2.frame, a.basis()) == a);
  }
}

TEST_CASE("canonical form does not depend on the spanning set") {
  Fixture fx(2, 3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto x = fx.random_subspace(rng, 3);
    auto gens = x.basis();
    // Replace the basis by random combinations with the same span.
    std::vector<FieldElement> mixed;
    const auto& scal = fx.frame->scalars();
    for (std::size_t r = 0; r < gens.size() + 2; ++r) {
      FieldElement v{};
      for (const auto& b : gens) v += fx.ctx->mul(scal.embed(static_cast<Scalars::Value>(rng() % 4)), b);
      mixed.push_back(v);
    }
    mixed.insert(mixed.end(), gens.begin(), gens.end());
    std::shuffle(mixed.begin(), mixed.end(), rng);
    CHECK(span(fx.frame, mixed) == x);
  }
}

TEST_CASE("membership") {
  Fixture fx(1, 3);
  std::mt19937_64 rng(4);
  const auto x = fx.random_subspace(rng, 2);
  CHECK(member(x, FieldCtx::zero()));
  for (const auto& b : x.basis()) CHECK(member(x, b));

  const auto g = span(fx.frame, std::vector<FieldElement>{FieldCtx::generator()});
  CHECK(member(g, FieldCtx::generator()));
  CHECK(member(g, FieldCtx::zero()));

  // W = ker T, found by scanning F directly.
  TowerSpec tower(fx.ctx, {3, 1});
  const auto w = kernel_space(fx.frame, tower, 0);
  std::set<std::uint64_t> expected;
  for (std::uint64_t v = 0; v < fx.ctx->size(); ++v) {
    const FieldElement y{v};
    if (fx.ctx->in_subfield(y, 3) && fx.ctx->rel_trace(y, 3, 1).is_zero()) expected.insert(v);
  }
  CHECK(expected.size() == 4);
  for (std::uint64_t v = 0; v < fx.ctx->size(); ++v) CHECK(member(w, {v}) == (expected.count(v) == 1));
}

TEST_CASE("subspace size is q^dim") {
  for (auto [e, m] : {std::pair{1U, 3U}, {2U, 3U}}) {
    Fixture fx(e, m);
    std::mt19937_64 rng(5);
    for (unsigned gens = 0; gens <= 4; ++gens) {
      const auto x = fx.random_subspace(rng, gens);
      std::uint64_t count = 0;
      for (std::uint64_t v = 0; v < fx.ctx->size(); ++v) count += member(x, {v}) ? 1 : 0;
      CHECK(count == (std::uint64_t{1} << (e * x.dim())));
      const auto all = enumerate(x);
      CHECK(all.size() == count);
      CHECK(std::set<FieldElement>(all.begin(), all.end()).size() == count);
      CHECK(fx.vectors(x.basis()).size() == count);
    }
  }
}

TEST_CASE("intersection and sum") {
  Fixture fx(1, 3);
  std::mt19937_64 rng(6);
  const Subspace zero(fx.frame);
  for (int i = 0; i < 200; ++i) {
    const auto x = fx.random_subspace(rng, 1 + rng() % 4);
    const auto y = fx.random_subspace(rng, 1 + rng() % 4);
    CHECK(intersect(x, x) == x);
    CHECK(intersect(x, zero) == zero);
    CHECK(subspace_sum(x, zero) == x);
    CHECK(subspace_sum(x, x) == x);
    const auto meet = intersect(x, y);
    const auto join = subspace_sum(x, y);
    CHECK(join.dim() + meet.dim() == x.dim() + y.dim());
    CHECK(meets_trivially(x, y) == (meet.dim() == 0));

    // Compare against explicit vector sets.
    auto vx = fx.vectors(x.basis());
    auto vy = fx.vectors(y.basis());
    std::set<std::uint64_t> both;
    std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(), std::inserter(both, both.end()));
    CHECK(fx.vectors(meet.basis()) == both);
  }
}

TEST_CASE("intersection over GF(4)") {
  Fixture fx(2, 3);
  std::mt19937_64 rng(16);
  for (int i = 0; i < 60; ++i) {
    const auto x = fx.random_subspace(rng, 1 + rng() % 3);
    const auto y = fx.random_subspace(rng, 1 + rng() % 4);
    auto vx = fx.vectors(x.basis());
    auto vy = fx.vectors(y.basis());
    std::set<std::uint64_t> both;
    std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(), std::inserter(both, both.end()));
    CHECK(fx.vectors(intersect(x, y).basis()) == both);
  }
}

TEST_CASE("sum of the two trace kernels at m = 9 is direct") {
  Fixture fx(1, 9);
  TowerSpec tower(fx.ctx, {9, 3, 1});
  const auto w0 = kernel_space(fx.frame, tower, 0);
  const auto theta = fx.ctx->circle_generator();
  const auto gamma1 = zeta_element(tower, 1, 1);
  const auto w1 = scale_subspace(kernel_space(fx.frame, tower, 1), gamma1);
  CHECK(w0.dim() == 6);
  CHECK(w1.dim() == 2);
  CHECK(intersect(w0, w1).dim() == 0);
  CHECK(subspace_sum(w0, w1).dim() == 8);
  (void)theta;
}

TEST_CASE("scaling") {
  Fixture fx(1, 3);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto x = fx.random_subspace(rng, 3);
    FieldElement theta = fx.random(rng);
    if (theta.is_zero()) theta = FieldCtx::one();
    CHECK(scale_subspace(x, FieldCtx::one()) == x);
    const auto y = scale_subspace(x, theta);
    CHECK(y.dim() == x.dim());
    CHECK(scale_subspace(y, fx.ctx->inv(theta)) == x);
    std::set<std::uint64_t> scaled;
    for (auto v : fx.vectors(x.basis())) scaled.insert(fx.ctx->mul({v}, theta).bits);
    CHECK(fx.vectors(y.basis()) == scaled);
  }
  CHECK_THROWS_AS((void)scale_subspace(Subspace(fx.frame), FieldCtx::zero()), ParameterError);

  TowerSpec tower(fx.ctx, {3, 1});
  const auto w = kernel_space(fx.frame, tower, 0);
  std::set<std::vector<std::uint64_t>> orbit;
  auto cur = w;
  for (int t = 0; t <= 8; ++t) {
    orbit.insert(cur.key());
    cur = scale_subspace(cur, fx.ctx->circle_generator());
  }
  CHECK(orbit.size() == 9);
  CHECK(cur == w);  // back after q^m + 1 steps
}

TEST_CASE("galois action on subspaces") {
  Fixture fx(2, 3);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    const auto x = fx.random_subspace(rng, 1 + rng() % 4);
    CHECK(apply_galois(x, 0) == x);
    CHECK(apply_galois(x, fx.ctx->degree()) == x);
    for (unsigned k = 1; k < fx.ctx->degree(); k += 4) {
      const auto y = apply_galois(x, k);
      CHECK(y.dim() == x.dim());
      std::set<std::uint64_t> image;
      for (auto v : fx.vectors(x.basis())) image.insert(fx.ctx->frobenius({v}, k).bits);
      CHECK(fx.vectors(y.basis()) == image);
      CHECK(apply_galois(y, fx.ctx->degree() - k) == x);
    }
    const auto v = fx.random(rng);
    CHECK(apply_galois(span(fx.frame, std::vector<FieldElement>{v}), 3) ==
          span(fx.frame, std::vector<FieldElement>{fx.ctx->frobenius(v, 3)}));
  }
}

TEST_CASE("mixed frames are rejected") {
  Fixture a(1, 3);
  Fixture b(1, 5);
  CHECK_THROWS_AS((void)intersect(Subspace(a.frame), Subspace(b.frame)), ParameterError);
  CHECK_THROWS_AS((void)subspace_sum(Subspace(a.frame), Subspace(b.frame)), ParameterError);
}

TEST_CASE("enumeration budget") {
  Fixture fx(1, 9);
  TowerSpec tower(fx.ctx, {9, 3, 1});
  const auto w0 = kernel_space(fx.frame, tower, 0);
  CHECK_THROWS_AS((void)enumerate(w0, 5), ResourceError);
  CHECK(enumerate(w0, 6).size() == 64);
}
