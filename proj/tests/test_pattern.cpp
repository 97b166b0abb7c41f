#include <catch_amalgamated.hpp>

#include <cmath>

#include "minrank/pattern.hpp"

#include "helpers.hpp"

using namespace minrank;
namespace mt = minrank::testing;

namespace {

// (1 + x_1 + y_1)(1 + x_2 + y_2) over GF(2), variables (x1,x2,y1,y2).
MultiPoly<GF> pairing_poly_gf2() {
  GF gf2(2);
  MultiPoly<GF> p = MultiPoly<GF>::constant(gf2, 4, 1);
  for (std::size_t i = 0; i < 2; ++i) {
    MultiPoly<GF> f = MultiPoly<GF>::constant(gf2, 4, 1);
    f += MultiPoly<GF>::variable(gf2, 4, i);      // x_i
    f += MultiPoly<GF>::variable(gf2, 4, 2 + i);  // y_i
    p = p * f;
  }
  return p;
}

}  // namespace

TEST_CASE("poly_eval basic values") {
  GF gf2(2);
  auto x1 = MultiPoly<GF>::variable(gf2, 1, 0);
  CHECK(poly_eval(x1, {0u}) == 0);

  // x^2 + x vanishes on all of GF(2)
  MultiPoly<GF> sq = x1 * x1 + x1;
  CHECK(poly_eval(sq, {0u}) == 0);
  CHECK(poly_eval(sq, {1u}) == 0);

  MultiPoly<GF> p = pairing_poly_gf2();
  CHECK(poly_eval(p, {0u, 0u, 0u, 1u}) == 0);
  for (std::uint32_t a : {0u, 1u})
    for (std::uint32_t b : {0u, 1u})
      CHECK(poly_eval(p, {a, b, a, b}) == 1);  // nonzero exactly on x == y
  CHECK_THROWS_AS(poly_eval(p, {0u}), std::invalid_argument);
}

TEST_CASE("zero_patterns_of_family basic values") {
  GF gf2(2);
  auto x1 = MultiPoly<GF>::variable(gf2, 1, 0);

  CHECK(zero_patterns_of_family<GF>({x1}, 2).size() == 2);

  auto x1p1 = x1 + MultiPoly<GF>::constant(gf2, 1, 1);
  auto pats = zero_patterns_of_family<GF>({x1, x1p1}, 2);
  REQUIRE(pats.size() == 2);
  for (const auto& zp : pats)
    CHECK(zp.nonzero[0] != zp.nonzero[1]);  // exactly one of x, x+1 vanishes

  auto a = MultiPoly<GF>::variable(gf2, 2, 0);
  auto b = MultiPoly<GF>::variable(gf2, 2, 1);
  CHECK(zero_patterns_of_family<GF>({a * b, a + b}, 2).size() == 3);
}

TEST_CASE("zero_patterns_of_family enforces the enumeration limit") {
  GF gf3(3);
  auto v = MultiPoly<GF>::variable(gf3, 20, 0);
  CHECK_THROWS_AS(zero_patterns_of_family<GF>({v}, 3), limit_exceeded);
}

TEST_CASE("rbg_bound basic values") {
  CHECK(rbg_bound(1, 1, 1) == 2);
  CHECK(rbg_bound(0, 5, 7) == 1);
  CHECK(rbg_bound(3, 2, 2) == 28);
}

TEST_CASE("pattern counts never exceed the rbg bound") {
  splitmix64 rng(314);
  for (int it = 0; it < 1000; ++it) {
    std::uint32_t q = it % 2 ? 2 : 3;
    GF dom(q);
    std::size_t nvars = 1 + rng.next() % 3;  // N <= 3
    std::size_t m = 1 + rng.next() % 4;      // m <= 4
    std::size_t d = 1 + rng.next() % 2;      // d <= 2
    std::vector<MultiPoly<GF>> fam;
    for (std::size_t t = 0; t < m; ++t) {
      MultiPoly<GF> p(dom, nvars);
      for (int terms = 0; terms < 4; ++terms) {
        MultiPoly<GF>::Exponents e(nvars, 0);
        std::size_t deg = rng.next() % (d + 1);
        for (std::size_t r = 0; r < deg; ++r) e[rng.next() % nvars] += 1;
        p.add_term(e, std::uint32_t(rng.next() % q));
      }
      fam.push_back(std::move(p));
    }
    auto pats = zero_patterns_of_family(fam, q);
    CHECK(mpz_class(static_cast<unsigned long>(pats.size())) <=
          rbg_bound(m, d, nvars));
  }
}

TEST_CASE("nks_witness basic values") {
  GF gf2(2);
  auto w = nks_witness(Matrix<GF>::identity(gf2, 4));
  REQUIRE(w.has_value());
  CHECK(w->n == 4);
  CHECK(w->k == 4);
  CHECK(w->s == 4);
  CHECK(w->basis_nonzeros == 8);

  auto wj = nks_witness(Matrix<GF>::constant(gf2, 4, 4, 1));
  REQUIRE(wj.has_value());
  CHECK(wj->k == 1);
  CHECK(wj->s == 16);
  CHECK(wj->basis_nonzeros == 8);

  // one all-ones row: the only row basis carries 4 nonzeros, any column
  // basis at least 1, total 5 > 4*1*4/4 = 4
  Matrix<GF> e1(gf2, 4, 4);
  for (std::size_t j = 0; j < 4; ++j) e1(0, j) = 1;
  CHECK_FALSE(nks_witness(e1).has_value());

  CHECK_THROWS_AS(nks_witness(Matrix<GF>(gf2, 12, 12)), limit_exceeded);
  CHECK_THROWS_AS(nks_witness(Matrix<GF>(gf2, 2, 3)), std::invalid_argument);
}

TEST_CASE("nks_witness k=0 convention and soundness on random matrices") {
  GF gf2(2);
  auto zw = nks_witness(Matrix<GF>(gf2, 3, 3));
  REQUIRE(zw.has_value());
  CHECK(zw->k == 0);
  CHECK(zw->basis_nonzeros == 0);

  splitmix64 rng(271);
  for (int it = 0; it < 200; ++it) {
    std::uint32_t q = it % 2 ? 2 : 3;
    std::size_t n = 2 + rng.next() % 4;  // n <= 5
    Matrix<GF> m = mt::random_gf_matrix(GF(q), n, rng);
    auto w = nks_witness(m);
    if (!w) continue;
    CHECK(w->n == n);
    CHECK(w->k == mat_rank(m));
    CHECK(w->s == m.nonzero_count());
    if (w->k == 0) continue;
    CHECK(detail::rows_rank(m, w->row_basis) == w->k);
    CHECK(detail::rows_rank(transpose(m), w->col_basis) == w->k);
    std::size_t recount = detail::rows_nonzeros(m, w->row_basis) +
                          detail::rows_nonzeros(transpose(m), w->col_basis);
    CHECK(recount == w->basis_nonzeros);
    CHECK(w->basis_nonzeros * n <= 4 * w->k * w->s);
  }
}

TEST_CASE("find_nks_principal_submatrix basic values") {
  GF gf2(2);
  for (std::size_t n : {2, 4, 6}) {
    auto [s, w] = find_nks_principal_submatrix(Matrix<GF>::identity(gf2, n));
    CHECK(s == std::vector<std::size_t>{0});
    CHECK(w.k == 1);
    CHECK(w.s == 1);
  }

  Matrix<GF> e1(gf2, 4, 4);
  for (std::size_t j = 0; j < 4; ++j) e1(0, j) = 1;
  auto [s, w] = find_nks_principal_submatrix(e1);
  CHECK(s == std::vector<std::size_t>{1});  // a zero 1x1 block; k' = 0
  CHECK(w.k == 0);
  CHECK(w.s == 0);

  CHECK_THROWS_AS(find_nks_principal_submatrix(Matrix<GF>(gf2, 9, 9)),
                  limit_exceeded);
}

TEST_CASE("principal submatrix witnesses exist on random bounded-rank matrices") {
  splitmix64 rng(555);
  for (int it = 0; it < 60; ++it) {
    std::size_t r = 1 + rng.next() % 3;  // rank <= 3
    Matrix<GF> m = mt::random_gf_matrix_of_rank(GF(2), 6, r, rng);
    auto [s, w] = find_nks_principal_submatrix(m);
    CHECK(!s.empty());
    // k'/n' <= k/n, cross-multiplied
    CHECK(w.k * 6 <= r * s.size());
  }
}

TEST_CASE("lemma24_bound reference values") {
  CHECK_THAT(lemma24_bound(2, 1, 1),
             Catch::Matchers::WithinRel(std::log(4.0) + 10.0 * std::log(2.0), 1e-9));
  CHECK_THAT(lemma24_bound(4, 1, 16),
             Catch::Matchers::WithinRel(std::log(16.0) + 80.0 * std::log(4.0), 1e-9));
  // k = n kills the binomial term
  CHECK_THAT(lemma24_bound(5, 5, 7),
             Catch::Matchers::WithinRel(20.0 * 7.0 * std::log(5.0), 1e-9));
  CHECK_THROWS_AS(lemma24_bound(4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lemma24_bound(4, 2, 17), std::invalid_argument);
}

TEST_CASE("census matches the exhaustive reference for n=2, q=2") {
  // Frozen from an independent scripted enumeration of all 16 matrices.
  auto census = nks_census_all(2, 2);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> want{
      {{0, 0}, 1}, {{1, 1}, 4}, {{1, 2}, 4}, {{1, 4}, 1}, {{2, 2}, 2}, {{2, 3}, 4}};
  CHECK(census == want);
}

TEST_CASE("count_nks_zero_patterns basic values") {
  CHECK(count_nks_zero_patterns(2, 1, 1, 2) == 4);
  CHECK(count_nks_zero_patterns(2, 2, 2, 2) == 2);
  CHECK(count_nks_zero_patterns(2, 1, 4, 2) == 1);
  CHECK_THROWS_AS(nks_census_all(5, 2), limit_exceeded);
}

TEST_CASE("census is independent of the thread count") {
  CHECK(nks_census_all(3, 2, 1) == nks_census_all(3, 2, 4));
}

TEST_CASE("turan_min_nonzeros basic values") {
  CHECK(turan_min_nonzeros(4, 4) == 1);
  CHECK(turan_min_nonzeros(4, 1) == 4);
  CHECK(turan_min_nonzeros(10, 2) == mpq_class(25, 2));
  CHECK_THROWS_AS(turan_min_nonzeros(4, 0), std::invalid_argument);
}

TEST_CASE("unit-diagonal matrices meet the sparsity floor exhaustively") {
  GF gf2(2);
  // all 2^12 GF(2) 4x4 matrices with all-ones diagonal
  for (std::uint32_t bits = 0; bits < (1u << 12); ++bits) {
    Matrix<GF> m = Matrix<GF>::identity(gf2, 4);
    std::size_t t = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (i == j) continue;
        m(i, j) = (bits >> t) & 1;
        ++t;
      }
    std::size_t k = mat_rank(m);
    mpq_class floor_bound = turan_min_nonzeros(4, k);
    CHECK(mpq_class(static_cast<unsigned long>(m.nonzero_count())) >= floor_bound);
  }
}
