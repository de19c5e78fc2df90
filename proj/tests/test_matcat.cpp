#include <catch2/catch.hpp>
#include <random>

#include "daglim/matcat.hpp"

using namespace daglim;

namespace {

const Space C1{"C", 1};
const Space C2{"C2", 2};

Morphism<Cnum> random_cmor(std::mt19937_64& rng, const Space& dom, const Space& cod) {
  std::uniform_int_distribution<int> g(-8, 8);
  Morphism<Cnum> f(dom, cod);
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c) f.at(r, c) = Cnum{g(rng) / 4.0, g(rng) / 4.0};
  return f;
}

Space random_space(std::mt19937_64& rng, const char* name, int max_dim = 4) {
  return Space{name, std::uniform_int_distribution<int>(1, max_dim)(rng), false};
}

}  // namespace

TEST_CASE("dagger is the conjugate transpose", "[matcat]") {
  auto f = Morphism<Cnum>::from_rows(C2, C2, {{2, 0}, {0, 1}});
  CHECK(approx_eq(dagger(f), f, 0.0));  // self-adjoint

  auto i_mor = Morphism<Cnum>::from_rows(C1, C1, {{Cnum{0, 1}}});
  CHECK(approx_eq(dagger(i_mor), Morphism<Cnum>::from_rows(C1, C1, {{Cnum{0, -1}}}), 0.0));

  auto col = Morphism<Cnum>::from_rows(C1, C2, {{1}, {0}});
  auto row = dagger(col);
  CHECK(row.dom().dim == 2);
  CHECK(row.cod().dim == 1);
  CHECK(approx_eq(row, Morphism<Cnum>::from_rows(C2, C1, {{1, 0}}), 0.0));
}

TEST_CASE("dagger is an involution, bit-exactly", "[matcat][property]") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    Space a = random_space(rng, "A"), b = random_space(rng, "B");
    auto f = random_cmor(rng, a, b);
    CHECK(approx_eq(dagger(dagger(f)), f, 0.0));
  }
}

TEST_CASE("composition", "[matcat]") {
  auto u = Morphism<Cnum>::from_rows(C2, C2, {{2, 0}, {0, 1}});
  auto v = Morphism<Cnum>::from_rows(C2, C2, {{0.5, 0}, {0, 1}});
  CHECK(approx_eq(compose(u, v), Morphism<Cnum>::identity(C2), 1e-15));

  std::mt19937_64 rng(5);
  auto f = random_cmor(rng, Space{"A", 3}, C2);
  CHECK(approx_eq(compose(f, Morphism<Cnum>::identity(C2)), f, 0.0));

  // (1,0)^T followed by diag(2,1) lands on (2,0)^T, by hand multiplication.
  auto p = Morphism<Cnum>::from_rows(C1, C2, {{1}, {0}});
  CHECK(approx_eq(compose(p, u), Morphism<Cnum>::from_rows(C1, C2, {{2}, {0}}), 0.0));

  CHECK_THROWS_AS(compose(p, Morphism<Cnum>::identity(Space{"X", 3})), Error);
}

TEST_CASE("composition vs dagger: (f;g)† = g†;f†", "[matcat][property]") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    Space a = random_space(rng, "A"), b = random_space(rng, "B"), c = random_space(rng, "C");
    auto f = random_cmor(rng, a, b);
    auto g = random_cmor(rng, b, c);
    CHECK(inf_dist(dagger(compose(f, g)), compose(dagger(g), dagger(f))) <= kDefaultEpsilon);
  }
}

TEST_CASE("addition", "[matcat]") {
  auto f = Morphism<Cnum>::from_rows(C1, C1, {{1}});
  auto g = Morphism<Cnum>::from_rows(C1, C1, {{2}});
  CHECK(approx_eq(add(f, g), Morphism<Cnum>::from_rows(C1, C1, {{3}}), 0.0));
  CHECK(approx_eq(add(f, Morphism<Cnum>::zero_mor(C1, C1)), f, 0.0));

  Space one{"1", 1};
  auto id1 = Morphism<Bit>::identity(one);
  CHECK(approx_eq(add(id1, id1), id1, 0.0));  // Rel-style idempotent sum
}

TEST_CASE("biproduct structure", "[matcat]") {
  Space a{"A", 2}, b{"B", 3};
  auto bp = biproduct<Cnum>({a, b});
  CHECK(bp.object.dim == 5);
  CHECK(approx_eq(bp.injections[0],
                  Morphism<Cnum>::from_rows(a, bp.object,
                                            {{1, 0}, {0, 1}, {0, 0}, {0, 0}, {0, 0}}),
                  0.0));

  SECTION("single object: injection is the identity") {
    auto solo = biproduct<Cnum>({a});
    CHECK(solo.object.dim == 2);
    CHECK(approx_eq(solo.injections[0], Morphism<Cnum>::identity(a), 0.0));
  }

  SECTION("empty list gives the zero object") {
    auto none = biproduct<Cnum>({});
    CHECK(none.object.dim == 0);
  }

  SECTION("completeness on dims (1,1): sum of proj;inj is the 2x2 identity") {
    Space x{"X", 1}, y{"Y", 1};
    auto pq = biproduct<Cnum>({x, y});
    auto total = add(compose(pq.projections[0], pq.injections[0]),
                     compose(pq.projections[1], pq.injections[1]));
    CHECK(approx_eq(total, Morphism<Cnum>::identity(pq.object), 0.0));
  }
}

TEST_CASE("biproduct equations on random dimension lists", "[matcat][property]") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    std::vector<Space> parts;
    int total = 0;
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int i = 0; i < n; ++i) {
      int d = std::uniform_int_distribution<int>(0, 4)(rng);
      if (total + d > 12) break;
      total += d;
      parts.push_back(Space{"P" + std::to_string(i), d, false});
    }
    if (parts.empty()) continue;
    auto bp = biproduct<Cnum>(parts);

    auto completeness = Morphism<Cnum>::zero_mor(bp.object, bp.object);
    for (std::size_t k = 0; k < parts.size(); ++k)
      completeness = add(completeness, compose(bp.projections[k], bp.injections[k]));
    CHECK(inf_dist(completeness, Morphism<Cnum>::identity(bp.object)) <= kDefaultEpsilon);

    for (std::size_t k = 0; k < parts.size(); ++k) {
      CHECK(approx_eq(bp.projections[k], dagger(bp.injections[k]), 0.0));
      for (std::size_t j = 0; j < parts.size(); ++j) {
        auto through = compose(bp.injections[k], bp.projections[j]);
        auto expected = k == j ? Morphism<Cnum>::identity(parts[k])
                               : Morphism<Cnum>::zero_mor(parts[k], parts[j]);
        CHECK(inf_dist(through, expected) <= kDefaultEpsilon);
      }
    }
  }
}

TEST_CASE("diagonal dagger equals codiagonal, bit-exactly", "[matcat]") {
  for (int dim = 1; dim <= 4; ++dim)
    for (int n = 1; n <= 4; ++n) {
      Space a{"A", dim};
      CHECK(approx_eq(dagger(diagonal<Cnum>(a, n)), codiagonal<Cnum>(a, n), 0.0));
      CHECK(approx_eq(dagger(diagonal<Bit>(a, n)), codiagonal<Bit>(a, n), 0.0));
    }
}

TEST_CASE("enrichment route agrees with entrywise addition", "[matcat][property]") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    Space a = random_space(rng, "A"), b = random_space(rng, "B");
    auto f = random_cmor(rng, a, b);
    auto g = random_cmor(rng, a, b);
    CHECK(inf_dist(boxplus(f, g), add(f, g)) <= kDefaultEpsilon);
  }
}

TEST_CASE("tensor product", "[matcat]") {
  Space two{"A", 2}, three{"B", 3};
  CHECK(approx_eq(tensor(Morphism<Cnum>::identity(two), Morphism<Cnum>::identity(three)),
                  Morphism<Cnum>::identity(Space{"A*B", 6}), 0.0));

  auto sa = Morphism<Cnum>::from_rows(C1, C1, {{Cnum{0, 2}}});
  auto sb = Morphism<Cnum>::from_rows(C1, C1, {{3}});
  CHECK(approx_eq(tensor(sa, sb), Morphism<Cnum>::from_rows(C1, C1, {{Cnum{0, 6}}}), 0.0));

  // diag(1,2) (x) [[3]] = diag(3,6), by hand Kronecker product.
  auto d12 = Morphism<Cnum>::from_rows(two, two, {{1, 0}, {0, 2}});
  CHECK(approx_eq(tensor(d12, sb), Morphism<Cnum>::from_rows(two, two, {{3, 0}, {0, 6}}), 0.0));

  SECTION("the unit object is strict") {
    auto id_i = Morphism<Cnum>::identity(unit_space());
    auto t = tensor(id_i, d12);
    CHECK(t.dom().name == "A");
    CHECK(t.dom().dim == 2);
  }

  SECTION("interchange law on random shapes") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 40; ++t) {
      Space a = random_space(rng, "A", 3), b = random_space(rng, "B", 3),
            c = random_space(rng, "C", 3), d = random_space(rng, "D", 3),
            e = random_space(rng, "E", 3), x = random_space(rng, "X", 3);
      auto f = random_cmor(rng, a, b), h = random_cmor(rng, b, c);
      auto g = random_cmor(rng, d, e), j = random_cmor(rng, e, x);
      CHECK(inf_dist(compose(tensor(f, g), tensor(h, j)), tensor(compose(f, h), compose(g, j))) <=
            kDefaultEpsilon);
    }
  }
}

TEST_CASE("trace", "[matcat]") {
  CHECK(approx_eq(trace(Morphism<Cnum>::identity(C1)), Cnum{1.0}, 0.0));
  CHECK(approx_eq(trace(Morphism<Cnum>::zero_mor(C2, C2)), Cnum{0.0}, 0.0));
  auto sixth = Morphism<Cnum>::from_rows(C2, C2, {{Cnum::from_ratio(1, 6), 0}, {0, 0}});
  CHECK(abs_val(trace(sixth) - Cnum::from_ratio(1, 6)) <= 1e-15);
  CHECK_THROWS_AS(trace(Morphism<Cnum>::zero_mor(C1, C2)), Error);

  SECTION("cyclicity and additivity") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 50; ++t) {
      Space a = random_space(rng, "A"), b = random_space(rng, "B");
      auto f = random_cmor(rng, a, b);
      auto g = random_cmor(rng, b, a);
      CHECK(abs_val(trace(compose(f, g)) - trace(compose(g, f))) <= kDefaultEpsilon);
      auto h = random_cmor(rng, a, a), j = random_cmor(rng, a, a);
      CHECK(abs_val(trace(add(h, j)) - (trace(h) + trace(j))) <= kDefaultEpsilon);
    }
  }
}

TEST_CASE("scalar action", "[matcat]") {
  std::mt19937_64 rng(37);
  auto f = random_cmor(rng, C2, C2);
  CHECK(approx_eq(scale(Cnum::one(), f), f, 0.0));
  CHECK(approx_eq(scale(Cnum::zero(), f), Morphism<Cnum>::zero_mor(C2, C2), 0.0));

  // 3 . ((1/3) . id) recovers the identity entrywise.
  auto third = scale(Cnum::from_ratio(1, 3), Morphism<Cnum>::identity(C2));
  CHECK(inf_dist(scale(Cnum{3.0}, third), Morphism<Cnum>::identity(C2)) <= 1e-15);

  SECTION("bilinearity with composition") {
    for (int t = 0; t < 50; ++t) {
      Space a = random_space(rng, "A"), b = random_space(rng, "B"), c = random_space(rng, "C");
      auto g = random_cmor(rng, a, b);
      auto h = random_cmor(rng, b, c);
      Cnum s{std::uniform_int_distribution<int>(-8, 8)(rng) / 4.0};
      CHECK(inf_dist(compose(scale(s, g), h), scale(s, compose(g, h))) <= kDefaultEpsilon);
    }
  }

  SECTION("semimodule laws over the scalars") {
    for (int t = 0; t < 50; ++t) {
      Space a = random_space(rng, "A"), b = random_space(rng, "B");
      auto g = random_cmor(rng, a, b);
      auto h = random_cmor(rng, a, b);
      Cnum s{std::uniform_int_distribution<int>(-8, 8)(rng) / 4.0};
      Cnum u{std::uniform_int_distribution<int>(-8, 8)(rng) / 4.0};
      CHECK(inf_dist(scale(s + u, g), add(scale(s, g), scale(u, g))) <= kDefaultEpsilon);
      CHECK(inf_dist(scale(s, add(g, h)), add(scale(s, g), scale(s, h))) <= kDefaultEpsilon);
      CHECK(inf_dist(scale(s, scale(u, g)), scale(s * u, g)) <= kDefaultEpsilon);
    }
  }
}
