#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "solvcohom/errors.hpp"
#include "solvcohom/exact/linalg.hpp"
#include "solvcohom/lie/ce.hpp"
#include "solvcohom/lie/complex.hpp"
#include "solvcohom/lie/nilshadow.hpp"
#include "solvcohom/lie/representation.hpp"

using namespace solvcohom;

namespace {

ModuleAction trivial_module(const LieAlgebraData& g) {
  ModuleAction m;
  m.matrices.assign(g.dim(), ExactMatrix(1, 1));
  return m;
}

bool has_violation(const ValidationReport& r, const std::string& key) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.invariant == key; });
}

// column of x_I in degree |I| (trivial module), as a map from target forms
GaussianRational d_entry(const LieAlgebraData& g, std::size_t p, IndexSet from, IndexSet to) {
  auto d = ce_differential(g, trivial_module(g), p);
  return d(SubsetBasis(g.dim(), p + 1).position(to), SubsetBasis(g.dim(), p).position(from));
}

}  // namespace

TEST_CASE("validate_algebra accepts the reference algebras") {
  CHECK(validate_algebra(fixtures::heisenberg()).ok());
  CHECK(validate_algebra(fixtures::real_six()).ok());
  CHECK(validate_algebra(fixtures::complex_three()).ok());
  CHECK(validate_algebra(fixtures::abelian(0)).ok());
}

TEST_CASE("validate_algebra reports a Jacobi violation with its triple") {
  auto g = fixtures::heisenberg();
  g.brackets.push_back({0, 2, 0, 1});  // [X,Z] = X breaks Jacobi together with [X,Y] = Z
  auto report = validate_algebra(g);
  REQUIRE_FALSE(report.ok());
  auto it = std::find_if(report.violations.begin(), report.violations.end(),
                         [](const Violation& v) { return v.invariant == "jacobi"; });
  REQUIRE(it != report.violations.end());
  CHECK(it->witness.size() == 3);
}

TEST_CASE("validate_algebra: structural violations") {
  SUBCASE("antisymmetry") {
    auto g = fixtures::heisenberg();
    g.brackets.push_back({1, 0, 2, 1});  // [Y,X] = Z contradicts [X,Y] = Z
    CHECK(has_violation(validate_algebra(g), "antisymmetry"));
  }
  SUBCASE("[X,X] != 0") {
    auto g = fixtures::heisenberg();
    g.brackets.push_back({0, 0, 2, 1});
    CHECK(has_violation(validate_algebra(g), "antisymmetry"));
  }
  SUBCASE("index out of range") {
    auto g = fixtures::heisenberg();
    g.brackets.push_back({0, 7, 2, 1});
    CHECK_FALSE(validate_algebra(g).ok());
  }
  SUBCASE("split: overlap and gaps") {
    auto g = fixtures::real_six();
    g.complement = {3, 4, 5};
    CHECK_FALSE(validate_algebra(g).ok());
    g = fixtures::real_six();
    g.complement = {4};
    CHECK_FALSE(validate_algebra(g).ok());
  }
  SUBCASE("derived algebra outside the nilradical") {
    auto g = fixtures::complex_three();
    g.nilradical = {2};
    g.complement = {0, 1};
    CHECK_FALSE(validate_algebra(g).ok());
  }
  SUBCASE("nilradical that is not nilpotent") {
    auto g = fixtures::complex_three();
    g.nilradical = {0, 1, 2};
    g.complement = {};
    CHECK_FALSE(validate_algebra(g).ok());
  }
  SUBCASE("conjugation") {
    auto g = fixtures::real_six();
    g.conjugation = std::vector<std::size_t>{1, 2, 0, 3, 5, 4};  // not an involution
    CHECK(has_violation(validate_algebra(g), "conjugation"));
    g = fixtures::real_six();
    g.conjugation = std::vector<std::size_t>{2, 3, 0, 1, 5, 4};  // breaks the brackets
    CHECK(has_violation(validate_algebra(g), "conjugation"));
    auto h = fixtures::complex_three();
    h.conjugation = std::vector<std::size_t>{0, 1, 2};
    CHECK(has_violation(validate_algebra(h), "conjugation"));
  }
  SUBCASE("duplicate basis names") {
    auto g = fixtures::heisenberg();
    g.basis_names[2] = "X";
    CHECK_FALSE(validate_algebra(g).ok());
  }
}

TEST_CASE("ce_differential: abelian algebra gives zero matrices") {
  auto g = fixtures::abelian(4);
  for (std::size_t p = 0; p < 4; ++p) CHECK(ce_differential(g, trivial_module(g), p).is_zero());
  CHECK_THROWS_AS(ce_differential(g, trivial_module(g), 5), std::out_of_range);
}

TEST_CASE("ce_differential: Heisenberg dz* = -x*^y*") {
  auto g = fixtures::heisenberg();
  const IndexSet x = singleton(0), y = singleton(1), z = singleton(2);
  CHECK(d_entry(g, 1, z, x | y) == GaussianRational(-1));
  CHECK(d_entry(g, 1, z, x | z).is_zero());
  for (IndexSet two : {x | y, x | z, y | z}) {
    CHECK(d_entry(g, 1, x, two).is_zero());
    CHECK(d_entry(g, 1, y, two).is_zero());
  }
  CHECK(ce_differential(g, trivial_module(g), 0).is_zero());
}

TEST_CASE("ce_differential: complex three-dimensional algebra") {
  auto g = fixtures::complex_three();
  const IndexSet e1 = singleton(0), e2 = singleton(1), e3 = singleton(2);
  CHECK(d_entry(g, 1, e2, e1 | e2) == GaussianRational(-1));
  CHECK(d_entry(g, 1, e3, e1 | e3) == GaussianRational(1));
  CHECK(d_entry(g, 1, e2, e1 | e3).is_zero());
  CHECK(d_entry(g, 1, e1, e1 | e2).is_zero());
}

TEST_CASE("ce_differential: module action term") {
  // one-dimensional algebra acting on C by a character: d(1 (x) v) = mu x* (x) v
  auto g = fixtures::abelian(1, GroundMode::complex);
  g.nilradical = {};
  g.complement = {0};
  ModuleAction m = trivial_module(g);
  m.character = fixtures::weight({3});
  auto d = ce_differential(g, m, 0);
  CHECK(d(0, 0) == GaussianRational(3));
  CHECK(cohomology(ce_complex(g, m)).betti == std::vector<std::size_t>{0, 0});
}

TEST_CASE("cohomology examples") {
  auto heis = fixtures::heisenberg();
  CHECK(cohomology(ce_complex(heis, trivial_module(heis))).betti == std::vector<std::size_t>{1, 2, 2, 1});
  auto c3 = fixtures::complex_three();
  CHECK(cohomology(ce_complex(c3, trivial_module(c3))).betti == std::vector<std::size_t>{1, 1, 1, 1});
  auto z = zero_complex({2, 5, 3});
  CHECK(cohomology(z).betti == std::vector<std::size_t>{2, 5, 3});
}

TEST_CASE("n = 0 gives the one-point complex") {
  auto g = fixtures::abelian(0, GroundMode::real_complexified);
  auto c = ce_complex(g, trivial_module(g));
  CHECK(c.dims == std::vector<std::size_t>{1});
  CHECK(cohomology(c).betti == std::vector<std::size_t>{1});
}

TEST_CASE("cohomology representatives are independent cocycles") {
  auto g = fixtures::heisenberg();
  auto c = ce_complex(g, trivial_module(g));
  auto h = cohomology(c);
  for (std::size_t p = 0; p < c.dims.size(); ++p) {
    REQUIRE(h.representatives[p].size() == h.betti[p]);
    EchelonBasis span(c.dims[p]);
    if (p > 0)
      for (std::size_t j = 0; j < c.dims[p - 1]; ++j) span.insert(c.differentials[p - 1].column(j));
    for (const auto& v : h.representatives[p]) {
      if (p < c.differentials.size()) CHECK(is_zero_vector(c.differentials[p].apply(v)));
      CHECK(span.insert(v));
    }
  }
}

TEST_CASE("check_complex rejects d o d != 0 and bad shapes") {
  FiniteComplex c = zero_complex({1, 1, 1});
  c.differentials[0](0, 0) = 1;
  c.differentials[1](0, 0) = 1;
  CHECK_THROWS_AS(check_complex(c), ComplexError);
  CHECK_THROWS_AS(cohomology(c), ComplexError);
  FiniteComplex bad = zero_complex({1, 2});
  bad.differentials[0] = ExactMatrix(1, 1);
  CHECK_THROWS_AS(check_complex(bad), ComplexError);
}

TEST_CASE("random twisted CE complexes: d o d = 0 and Euler characteristic") {
  std::mt19937 rng(99);
  const std::vector<LieAlgebraData> algebras{fixtures::heisenberg(), fixtures::real_six(), fixtures::complex_three()};
  for (const auto& g : algebras) {
    for (int trial = 0; trial < 6; ++trial) {
      ModuleAction m = trivial_module(g);
      m.character = fixtures::random_weight(rng, g.rank());
      if (trial == 0) m.character = Weight::zero(g.rank());
      auto c = ce_complex(g, m);
      CHECK_NOTHROW(check_complex(c));
      auto h = cohomology(c);
      CHECK(euler_characteristic(c.dims) == euler_characteristic(h.betti));
    }
    // adjoint coefficients too
    auto ad = RepresentationData::adjoint(g);
    ModuleAction m{ad.dim, ad.matrices, fixtures::random_weight(rng, g.rank())};
    auto c = ce_complex(g, m);
    CHECK_NOTHROW(check_complex(c));
    CHECK(euler_characteristic(c.dims) == euler_characteristic(cohomology(c).betti));
  }
}

TEST_CASE("betti_1 with trivial coefficients is dim g/[g,g]") {
  for (const auto& g : {fixtures::heisenberg(), fixtures::real_six(), fixtures::complex_three(), fixtures::abelian(3)}) {
    StructureConstants c(g);
    std::vector<Vector> brackets;
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = i + 1; j < g.dim(); ++j) {
        Vector v(g.dim());
        for (std::size_t k = 0; k < g.dim(); ++k) v[k] = c(i, j, k);
        brackets.push_back(v);
      }
    std::size_t derived = brackets.empty() ? 0 : rank(ExactMatrix::from_columns(g.dim(), brackets));
    auto betti = cohomology(ce_complex(g, trivial_module(g))).betti;
    CHECK(betti[1] == g.dim() - derived);
  }
  CHECK(cohomology(ce_complex(fixtures::real_six(), trivial_module(fixtures::real_six()))).betti[1] == 2);
}

TEST_CASE("representations") {
  auto g = fixtures::real_six();
  CHECK(validate_representation(g, RepresentationData::adjoint(g)).ok());
  CHECK(validate_representation(g, RepresentationData::trivial(g)).ok());
  auto bad = RepresentationData::adjoint(g);
  bad.matrices[0](0, 0) = 1;  // breaks both the homomorphism law and unipotence on n
  auto report = validate_representation(g, bad);
  CHECK(has_violation(report, "homomorphism"));
  CHECK(has_violation(report, "unipotent"));
  bad = RepresentationData::trivial(g);
  bad.matrices.pop_back();
  CHECK_FALSE(validate_representation(g, bad).ok());
}

TEST_CASE("nilshadow") {
  SUBCASE("nilpotent input is unchanged") {
    auto g = fixtures::heisenberg();
    auto u = nilshadow(g, std::vector<Weight>(3));
    CHECK(u.brackets == g.brackets);
    CHECK(u.basis_names == g.basis_names);
    CHECK(lower_central_series(u).back() == 0);
  }
  SUBCASE("complex three-dimensional algebra becomes abelian") {
    auto g = fixtures::complex_three();
    auto u = nilshadow(g, {fixtures::weight({0}), fixtures::weight({1}), fixtures::weight({-1})});
    CHECK(is_abelian(u));
    CHECK(u.dim() == 3);
    CHECK(u.complement.empty());
  }
  SUBCASE("real six-dimensional algebra becomes abelian") {
    auto g = fixtures::real_six();
    auto u = nilshadow(g, {fixtures::weight({1, 0}), fixtures::weight({0, 1}), fixtures::weight({-1, 0}),
                           fixtures::weight({0, -1}), fixtures::weight({0, 0}), fixtures::weight({0, 0})});
    CHECK(is_abelian(u));
    CHECK(validate_algebra(u).ok());
  }
  SUBCASE("idempotent") {
    auto g = fixtures::complex_three();
    auto u = nilshadow(g, {fixtures::weight({0}), fixtures::weight({1}), fixtures::weight({-1})});
    CHECK(nilshadow(u, std::vector<Weight>(3)) == u);
  }
  SUBCASE("inconsistent weights are rejected") {
    auto g = fixtures::complex_three();
    CHECK_THROWS_AS(nilshadow(g, {fixtures::weight({0}), fixtures::weight({2}), fixtures::weight({-1})}),
                    ValidationError);
  }
}
