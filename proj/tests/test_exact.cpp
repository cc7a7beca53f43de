#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "solvcohom/errors.hpp"
#include "solvcohom/exact/gaussian_rational.hpp"
#include "solvcohom/exact/linalg.hpp"
#include "solvcohom/exact/period_value.hpp"
#include "solvcohom/exact/polynomial.hpp"
#include "solvcohom/lie/ce.hpp"

using namespace solvcohom;
using fixtures::q;

TEST_CASE("gaussian rationals are canonical") {
  GaussianRational a(mpq_class(2, 4), mpq_class(-6, 3));
  CHECK(a.re() == mpq_class(1, 2));
  CHECK(a.im() == -2);
  CHECK(a == GaussianRational::parse("1/2-2*i"));
  CHECK(GaussianRational::parse("-2/4").re() == mpq_class(-1, 2));
  CHECK_THROWS_AS(GaussianRational::parse("2/-4"), ParseError);
  CHECK(a.to_string() == "1/2-2*i");
  CHECK(GaussianRational::i().to_string() == "i");
  CHECK((-GaussianRational::i()).to_string() == "-i");
  CHECK(GaussianRational(0).to_string() == "0");
}

TEST_CASE("gaussian rational field operations") {
  auto i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  auto z = GaussianRational::parse("3+4*i");
  CHECK(z * z.conj() == GaussianRational(25));
  CHECK(z / z == GaussianRational(1));
  CHECK((GaussianRational(1) / z) * z == GaussianRational(1));
  CHECK_THROWS_AS(z / GaussianRational(0), std::domain_error);
}

TEST_CASE("gaussian rational parse round trip and errors") {
  for (const char* text : {"0", "7", "-1/3", "i", "-i", "2/5*i", "1/2-3*i", "-4+i"}) {
    auto z = GaussianRational::parse(text);
    CHECK(GaussianRational::parse(z.to_string()) == z);
  }
  CHECK_THROWS_AS(GaussianRational::parse(""), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("x"), ParseError);
  CHECK_THROWS_AS(GaussianRational::parse("1.5"), ParseError);
}

TEST_CASE("period value parsing and canonical form") {
  SymbolTable table;
  table.declare("a", Parity::real);
  auto v = PeriodValue::parse("a + 2*i*pi", table);
  CHECK(v.coordinate(builtin_i_pi()) == 2);
  CHECK(v.to_string() == "2*i*pi + a");
  CHECK(PeriodValue::parse(v.to_string(), table) == v);
  CHECK(PeriodValue::parse("a - a", table).is_zero());
  CHECK(PeriodValue::parse("i*a", table).coordinate(PeriodSymbol{"a", Parity::real, true}) == 1);
  CHECK_THROWS_AS(PeriodValue::parse("b", table), ParseError);
  CHECK_THROWS_AS(PeriodValue::parse("a*pi", table), ParseError);
  CHECK_THROWS_AS(table.declare("pi", Parity::real), ParseError);
  CHECK_THROWS_AS(table.declare("a", Parity::real), ParseError);
}

TEST_CASE("period value scaling by Q(i)") {
  SymbolTable table;
  table.declare("a", Parity::real);
  auto i = GaussianRational::i();
  CHECK(i * PeriodValue::parse("1", table) == PeriodValue::parse("i", table));
  CHECK(i * PeriodValue::parse("i", table) == PeriodValue::parse("-1", table));
  CHECK(i * PeriodValue::parse("pi", table) == PeriodValue::parse("i*pi", table));
  CHECK(i * PeriodValue::parse("i*pi", table) == PeriodValue::parse("-pi", table));
  CHECK(i * PeriodValue::parse("a", table) == PeriodValue::parse("i*a", table));
  CHECK(GaussianRational::parse("1-i") * PeriodValue::parse("a + i*pi", table) ==
        PeriodValue::parse("a - i*a + i*pi + pi", table));
}

TEST_CASE("period_in_2pi_i_Z") {
  SymbolTable table;
  table.declare("a", Parity::real);
  CHECK(period_in_2pi_i_Z(PeriodValue::parse("2*i*pi", table)));
  CHECK_FALSE(period_in_2pi_i_Z(PeriodValue::parse("i*pi", table)));
  CHECK_FALSE(period_in_2pi_i_Z(PeriodValue::parse("a", table)));
  CHECK(period_in_2pi_i_Z(PeriodValue()));
  CHECK(period_in_2pi_i_Z(PeriodValue::parse("-4*i*pi", table)));
  CHECK_FALSE(period_in_2pi_i_Z(PeriodValue::parse("2*i*pi + 1", table)));
  CHECK_FALSE(period_in_2pi_i_Z(PeriodValue::parse("2*pi", table)));
}

TEST_CASE("period_im_in_pi_Z") {
  SymbolTable table;
  table.declare("a", Parity::real);
  table.declare("t", Parity::imaginary);
  CHECK(period_im_in_pi_Z(PeriodValue::parse("a + i*pi", table)));
  CHECK_FALSE(period_im_in_pi_Z(PeriodValue::parse("a + i", table)));
  CHECK(period_im_in_pi_Z(PeriodValue()));
  CHECK_FALSE(period_im_in_pi_Z(PeriodValue::parse("1/2*i*pi", table)));
  CHECK_FALSE(period_im_in_pi_Z(PeriodValue::parse("i*a", table)));
  CHECK_FALSE(period_im_in_pi_Z(PeriodValue::parse("t", table)));
  CHECK(period_im_in_pi_Z(PeriodValue::parse("i*t + 3 + pi", table)));
}

TEST_CASE("period value properties on random values") {
  SymbolTable table;
  table.declare("a", Parity::real);
  table.declare("t", Parity::imaginary);
  std::vector<PeriodSymbol> symbols{builtin_one(), builtin_i(), builtin_pi(), builtin_i_pi(), *table.find("a"),
                                    *table.find("t")};
  symbols.push_back({"a", Parity::real, true});
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
  auto random_value = [&](bool lattice_like) {
    PeriodValue v;
    if (lattice_like) return PeriodValue::symbol(builtin_i_pi(), 2 * coeff(rng));
    for (int t = 0; t < 3; ++t) v += PeriodValue::symbol(symbols[pick(rng)], mpq_class(coeff(rng), 2));
    return v;
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto v = random_value(trial % 3 == 0);
    auto w = random_value(trial % 2 == 0);
    CHECK(v.conj().conj() == v);
    CHECK((v + w).conj() == v.conj() + w.conj());
    if (period_in_2pi_i_Z(v) && period_in_2pi_i_Z(w)) CHECK(period_in_2pi_i_Z(v + w));
    if (period_in_2pi_i_Z(v)) CHECK(period_im_in_pi_Z(v));
    // the ratio test is exactly "conj(v) - v in 2 pi i Z"
    CHECK(period_im_in_pi_Z(v) == period_in_2pi_i_Z(v.conj() - v));
  }
}

TEST_CASE("rank_and_kernel examples") {
  auto id = ExactMatrix::identity(3);
  auto rk = rank_and_kernel(id);
  CHECK(rk.rank == 3);
  CHECK(rk.kernel_basis.empty());

  auto i = GaussianRational::i();
  auto m = ExactMatrix::from_rows({{1, i}, {i, -1}});
  rk = rank_and_kernel(m);
  CHECK(rk.rank == 1);
  REQUIRE(rk.kernel_basis.size() == 1);
  CHECK(is_zero_vector(m.apply(rk.kernel_basis[0])));
  CHECK_FALSE(is_zero_vector(rk.kernel_basis[0]));
}

TEST_CASE("Heisenberg degree-1 differential has rank 1") {
  auto g = fixtures::heisenberg();
  ModuleAction trivial;
  trivial.matrices.assign(3, ExactMatrix(1, 1));
  auto d1 = ce_differential(g, trivial, 1);
  CHECK(rank_and_kernel(d1).rank == 1);
}

TEST_CASE("random matrices: rank invariants") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<std::size_t> size(0, 7);
  for (int trial = 0; trial < 150; ++trial) {
    auto m = fixtures::random_matrix(rng, size(rng), size(rng), trial % 2 ? 0.3 : 0.7);
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank + rk.kernel_basis.size() == m.cols());
    for (const auto& v : rk.kernel_basis) CHECK(is_zero_vector(m.apply(v)));
    CHECK(rank(m, PivotOrder::sparsest_row) == rank(m, PivotOrder::reversed_first_nonzero));
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(rk.rank == rank(m));
  }
}

TEST_CASE("low-rank products") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = fixtures::random_matrix(rng, 6, 2, 0.9);
    auto b = fixtures::random_matrix(rng, 2, 5, 0.9);
    CHECK(rank(a * b) <= 2);
    CHECK(rank(a * b) == rank((a * b).transpose(), PivotOrder::reversed_first_nonzero));
  }
}

TEST_CASE("inverse") {
  auto m = ExactMatrix::from_rows({{2, 1}, {1, 1}});
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == ExactMatrix::identity(2));
  CHECK_FALSE(inverse(ExactMatrix::from_rows({{1, 2}, {2, 4}})));
}

TEST_CASE("echelon basis") {
  EchelonBasis b(3);
  CHECK(b.insert({1, 2, 0}));
  CHECK(b.insert({0, 1, 1}));
  CHECK_FALSE(b.insert({1, 3, 1}));
  CHECK(b.contains({2, 5, 1}));
  CHECK_FALSE(b.contains({0, 0, 1}));
  CHECK(b.size() == 2);
}

TEST_CASE("polynomials") {
  Polynomial p({q(-1), 0, 1});  // t^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p(q(1)).is_zero());
  CHECK(p.derivative() == Polynomial({0, 2}));
  auto [quot, rem] = divmod(p, Polynomial::linear_root(q(1)));
  CHECK(quot == Polynomial({1, 1}));
  CHECK(rem.is_zero());
  auto sq = Polynomial::linear_root(q(2)) * Polynomial::linear_root(q(2)) * Polynomial::linear_root(q(3));
  CHECK(squarefree_part(sq) == Polynomial::linear_root(q(2)) * Polynomial::linear_root(q(3)));
}

TEST_CASE("characteristic polynomial") {
  auto m = ExactMatrix::from_rows({{2, 1}, {0, 3}});
  CHECK(characteristic_polynomial(m) == Polynomial({6, -5, 1}));
  CHECK(characteristic_polynomial(ExactMatrix()) == Polynomial({1}));
}

TEST_CASE("roots in Q(i)") {
  auto i = GaussianRational::i();
  // (t - 1/2)^2 (t + i) (t - 3 + 2i)
  auto p = Polynomial::linear_root(q(1, 2)) * Polynomial::linear_root(q(1, 2)) * Polynomial::linear_root(-i) *
           Polynomial::linear_root(GaussianRational::parse("3-2*i"));
  auto split = roots_in_gaussian_rationals(p);
  CHECK(split.remainder.degree() == 0);
  REQUIRE(split.roots.size() == 3);
  std::size_t total = 0;
  for (const auto& [root, mult] : split.roots) {
    CHECK(p(root).is_zero());
    total += mult;
    if (root == q(1, 2)) CHECK(mult == 2);
  }
  CHECK(total == 4);

  // t^2 - 2 does not split over Q(i)
  auto irreducible = roots_in_gaussian_rationals(Polynomial({-2, 0, 1}) * Polynomial::linear_root(q(5)));
  CHECK(irreducible.roots.size() == 1);
  CHECK(irreducible.remainder == Polynomial({-2, 0, 1}));
  // t^2 + 1 splits
  CHECK(roots_in_gaussian_rationals(Polynomial({1, 0, 1})).roots.size() == 2);
}
