#include "doctest.h"

#include "alcove/cartan.hpp"
#include "alcove/roots.hpp"

using namespace alcove;

namespace {

FiniteRoot root(std::vector<long long> c) { return FiniteRoot{std::move(c)}; }

}  // namespace

TEST_CASE("builtin rank-2 affine type tables") {
  CartanDatum a2 = datum_from_type("A2~");
  CHECK(a2.rank_affine() == 3);
  CHECK(a2.matrix() == std::vector<std::vector<long long>>{
                           {2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK(a2.highest_root() == root({1, 1}));
  CHECK(a2.braid_order(0, 1) == 3);
  CHECK(a2.braid_order(1, 2) == 3);
  CHECK(a2.braid_order(0, 2) == 3);

  CartanDatum a1 = datum_from_type("A1~");
  CHECK(a1.matrix() ==
        std::vector<std::vector<long long>>{{2, -2}, {-2, 2}});
  CHECK(a1.braid_order(0, 1) == kNoBraidRelation);

  CartanDatum c2 = datum_from_type("C2~");
  CHECK(c2.rank_affine() == 3);
  CHECK(c2.highest_root() == root({2, 1}));

  CartanDatum g2 = datum_from_type("G2~");
  CHECK(g2.highest_root() == root({3, 2}));
  CHECK(g2.braid_order(1, 2) == 6);

  CHECK_THROWS_AS(datum_from_type("E8~"), ValidationError);
}

TEST_CASE("matrix validation errors are distinct and specific") {
  CHECK_THROWS_WITH_AS(
      datum_from_matrix({{2, -1}, {-1, 2}}),
      "cartan matrix does not have corank exactly 1", ValidationError);
  CHECK_THROWS_AS(datum_from_matrix({{2, 1, -1}, {-1, 2, -1}, {-1, -1, 2}}),
                  ValidationError);
  CHECK_THROWS_AS(datum_from_matrix({{3, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}),
                  ValidationError);
  CHECK_THROWS_AS(datum_from_matrix({{2, 0, -1}, {-1, 2, -1}, {-1, -1, 2}}),
                  ValidationError);
  // Indefinite rank-2 matrix: rejected (nonzero determinant, wrong corank).
  CHECK_THROWS_AS(datum_from_matrix({{2, -3}, {-3, 2}}), ValidationError);
}

TEST_CASE("matrix round-trips to the type table") {
  CartanDatum a2 = datum_from_type("A2~");
  CartanDatum again = datum_from_matrix(a2.matrix());
  CHECK(a2 == again);
  CHECK(again.highest_root() == a2.highest_root());
}

TEST_CASE("finite root systems have the right cardinality and closure") {
  CartanDatum a2 = datum_from_type("A2~");
  const auto& ra2 = finite_roots(a2);
  CHECK(ra2.size() == 6);
  CHECK(a2.is_finite_root(root({1, 1})));
  CHECK(a2.is_finite_root(root({-1, -1})));
  CHECK_FALSE(a2.is_finite_root(root({2, 1})));

  CartanDatum c2 = datum_from_type("C2~");
  CHECK(finite_roots(c2).size() == 8);
  CHECK(c2.is_finite_root(root({2, 1})));
  CHECK(c2.is_finite_root(root({-2, -1})));

  CartanDatum a1 = datum_from_type("A1~");
  CHECK(finite_roots(a1) ==
        std::vector<FiniteRoot>{root({-1}), root({1})});

  CartanDatum g2 = datum_from_type("G2~");
  CHECK(finite_roots(g2).size() == 12);
}

TEST_CASE("datum invariants hold for every builtin type") {
  for (const auto& label : supported_type_labels()) {
    CAPTURE(label);
    CartanDatum d = datum_from_type(label);
    int r = d.rank_finite();

    // Closure under every finite simple reflection.
    for (const auto& beta : finite_roots(d)) {
      for (int i = 1; i <= r; ++i) {
        AffineRoot image = simple_action(d, i, {beta, 0});
        CHECK(d.is_finite_root(image.finite));
        CHECK(image.level == 0);
      }
    }

    // theta is maximal: theta + alpha_i is never a root.
    for (int i = 0; i < r; ++i) {
      FiniteRoot bumped = d.highest_root();
      bumped.coords[i] += 1;
      CHECK_FALSE(d.is_finite_root(bumped));
    }

    // Symmetrizability.
    int n = d.rank_affine();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(d.symmetrizer(i) * d.cartan(i, j) ==
              d.symmetrizer(j) * d.cartan(j, i));

    // theta-coroot pairs to 2 with theta.
    long long pair = pairing(d, d.highest_root(), d.highest_root());
    CHECK(pair == 2);
  }
}
