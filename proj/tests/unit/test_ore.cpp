#include <gtest/gtest.h>

#include "dop/error.hpp"
#include "dop/arith.hpp"
#include "dop/linalg.hpp"
#include "dop/ore.hpp"
#include "fixtures.hpp"

namespace dop {
namespace {

using test::P;

OreContext ctx(std::string_view dx, std::string_view dy, bool uni = false) {
  return OreContext::make({P(dx), P(dy)}, uni);
}

// Ore polynomial from coefficients listed lowest power first.
OrePoly O(std::initializer_list<std::string_view> cs) {
  std::vector<BiPoly> v;
  for (auto c : cs) v.push_back(P(c));
  return OrePoly(std::move(v));
}

const OrePoly T = OrePoly::theta();

OrePoly random_ore(std::mt19937_64& rng, unsigned tdeg, unsigned cdeg, bool uni) {
  std::vector<BiPoly> c;
  for (unsigned i = 0; i <= tdeg; ++i) {
    BiPoly a = test::random_bipoly(rng, cdeg, 0.5);
    if (uni) a = BiPoly::from_uni(a.to_uni_x());
    c.push_back(a);
  }
  return OrePoly(std::move(c));
}

BiPoly random_coeff(std::mt19937_64& rng, unsigned deg, bool uni) {
  BiPoly a = test::random_bipoly(rng, deg, 0.6);
  return uni ? BiPoly::from_uni(a.to_uni_x()) : a;
}

TEST(Ore, MulExamples) {
  const auto d = ctx("1", "0", true);
  EXPECT_EQ(mul(d, T, O({"x"})), O({"1", "x"}));
  EXPECT_EQ(mul(d, OrePoly::monomial(P("1"), 2), O({"x^2"})), O({"2", "4*x", "x^2"}));
  EXPECT_EQ(mul(d, O({"0", "x"}), O({"0", "x"})), O({"0", "x", "x^2"}));
}

TEST(Ore, Text) {
  EXPECT_EQ(O({"2", "4*x", "x^2"}).to_string(), "(x^2)t^2 + (4*x)t + (2)");
  EXPECT_EQ(O({"0", "-2*x"}).to_string(), "(-2*x)t");
  EXPECT_EQ(OrePoly{}.to_string(), "0");
}

TEST(Ore, ThetaPowLeftExamples) {
  EXPECT_EQ(theta_pow_left(ctx("1", "0", true), 2, P("x")), O({"0", "2", "x"}));
  EXPECT_EQ(theta_pow_left(ctx("1", "0"), 0, P("y")), O({"y"}));
  EXPECT_EQ(theta_pow_left(ctx("1", "-y^2"), 2, P("y")), O({"2*y^3", "-2*y^2", "y"}));
}

TEST(Ore, RightFormExamples) {
  EXPECT_EQ(a_theta_pow_right(ctx("1", "0", true), P("x"), 2), OrePoly::monomial(P("x"), 2));
  EXPECT_EQ(a_theta_pow_right(ctx("1", "0"), P("1"), 5), OrePoly::monomial(P("1"), 5));
  EXPECT_EQ(a_theta_pow_right(ctx("x", "y"), P("y"), 1), OrePoly::monomial(P("y"), 1));
}

TEST(Ore, ActAndPhiExamples) {
  const auto d = ctx("1", "0");
  EXPECT_EQ(act(d, OrePoly::monomial(P("1"), 2), P("x^3")), P("6*x"));
  EXPECT_EQ(act(d, O({"1", "x"}), P("y")), P("y"));
  EXPECT_EQ(act(ctx("x", "y"), T, P("x*y")), P("2*x*y"));
  EXPECT_EQ(phi(O({"3", "x", "1"})), P("3"));
  EXPECT_EQ(phi(OrePoly::monomial(P("1"), 5)), BiPoly{});
}

TEST(Ore, ContextChecks) {
  EXPECT_THROW(ctx("1", "x", true), ContractError);
  EXPECT_THROW(ctx("y", "0", true), ContractError);
  EXPECT_THROW(mul(ctx("1", "0", true), T, O({"y"})), ContractError);
}

struct Case {
  const char* dx;
  const char* dy;
  bool uni;
};
const Case kCases[] = {{"1", "0", true}, {"1", "0", false}, {"x", "y", false}, {"1", "-y^2", false}};

TEST(Ore, BinomialIdentitiesMatchStepwise) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (const auto& c : kCases) {
    const auto d = ctx(c.dx, c.dy, c.uni);
    for (int trial = 0; trial < 100; ++trial) {
      const BiPoly a = random_coeff(rng, 3, c.uni);
      OrePoly iterated(a);
      for (unsigned n = 0; n <= 6; ++n) {
        ASSERT_EQ(theta_pow_left(d, n, a), iterated);
        ASSERT_EQ(a_theta_pow_right(d, a, n), OrePoly::monomial(a, n));
        iterated = mul_stepwise(d, T, iterated);
        ++checked;
      }
    }
  }
  EXPECT_EQ(checked, 4 * 100 * 7);
}

TEST(Ore, RingAxioms) {
  std::mt19937_64 rng(37);
  for (const auto& c : kCases) {
    const auto d = ctx(c.dx, c.dy, c.uni);
    for (int trial = 0; trial < 15; ++trial) {
      const auto f = random_ore(rng, trial % 5, 3, c.uni);
      const auto g = random_ore(rng, (trial + 2) % 5, 3, c.uni);
      const auto h = random_ore(rng, (trial + 1) % 5, 2, c.uni);
      const auto fg = mul(d, f, g);
      EXPECT_EQ(fg, mul_stepwise(d, f, g));
      EXPECT_EQ(mul(d, fg, h), mul(d, f, mul(d, g, h)));
      EXPECT_EQ(mul(d, f, g + h), fg + mul(d, f, h));
      EXPECT_EQ(mul(d, f + g, h), mul(d, f, h) + mul(d, g, h));
      if (!f.is_zero() && !g.is_zero()) EXPECT_EQ(fg.degree(), f.degree() + g.degree());
    }
  }
}

TEST(Ore, ActionLawAndPhi) {
  std::mt19937_64 rng(41);
  for (const auto& c : kCases) {
    const auto d = ctx(c.dx, c.dy, c.uni);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_ore(rng, 3, 2, c.uni);
      const auto g = random_ore(rng, 3, 2, c.uni);
      const BiPoly b = random_coeff(rng, 3, c.uni);
      EXPECT_EQ(act(d, mul(d, f, g), b), act(d, f, act(d, g, b)));
      EXPECT_EQ(phi(f), act(d, f, P("1")));
      EXPECT_TRUE(phi(mul(d, mul(d, f, g), T)).is_zero());
    }
  }
}

// g -> g t x is injective with no image in R: the map to the t^{>=1}
// coefficients has trivial kernel on the space of g with t-degree <= 4 and
// coefficient degree <= 2.
TEST(Ore, NoRingElementsInLeftIdealOfThetaX) {
  for (const auto& c : kCases) {
    const auto d = ctx(c.dx, c.dy, c.uni);
    const OrePoly tx = mul(d, T, O({"x"}));
    std::vector<OrePoly> basis;
    for (unsigned i = 0; i <= 4; ++i)
      for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; a + b <= 2; ++b) {
          if (c.uni && b > 0) continue;
          basis.push_back(OrePoly::monomial(BiPoly::term(1, Mono{a, b}), i));
        }
    std::map<std::pair<int, Mono>, std::size_t> row_of;
    std::vector<OrePoly> images;
    for (const auto& g : basis) {
      images.push_back(mul(d, g, tx));
      for (int i = 1; i <= images.back().degree(); ++i)
        for (const auto& [m, v] : images.back().coeffs()[static_cast<std::size_t>(i)].terms())
          row_of.try_emplace({i, m}, row_of.size());
    }
    Matrix a(row_of.size(), Vector(basis.size()));
    for (std::size_t k = 0; k < images.size(); ++k)
      for (int i = 1; i <= images[k].degree(); ++i)
        for (const auto& [m, v] : images[k].coeffs()[static_cast<std::size_t>(i)].terms())
          a[row_of.at({i, m})][k] = v;
    EXPECT_TRUE(kernel(a, basis.size()).empty()) << c.dx << ", " << c.dy;
  }
}

TEST(Witness, Examples) {
  const auto d = ctx("1", "0", true);
  const auto w0 = essential_witness(d, O({"1"}), P("x"));
  EXPECT_TRUE(w0.h.is_zero());
  EXPECT_EQ(w0.r, P("1"));
  const auto w1 = essential_witness(d, T, P("x"));
  EXPECT_EQ(w1.h, O({"x"}));
  EXPECT_EQ(w1.r, P("-1"));
  const auto w2 = essential_witness(d, OrePoly::monomial(P("1"), 2), P("x"));
  EXPECT_EQ(w2.h, O({"-2*x", "x^2"}));
  EXPECT_EQ(w2.r, P("2"));
  for (const auto* w : {&w0, &w1, &w2}) EXPECT_TRUE(w->verify(d));
}

TEST(Witness, RandomOverQx) {
  std::mt19937_64 rng(43);
  const auto d = ctx("1", "0", true);
  int done = 0;
  while (done < 50) {
    const auto f = random_ore(rng, static_cast<unsigned>(done % 6), 3, true);
    if (f.is_zero() || divides(P("x"), f.leading_coeff())) continue;
    const auto w = essential_witness(d, f, P("x"));
    ASSERT_TRUE(w.verify(d)) << f.to_string();
    EXPECT_FALSE(w.r.is_zero());
    ++done;
  }
}

TEST(Witness, IrreducibleBranch) {
  // x is prime and not Darboux for y d/dx + d/dy on Q[x, y].
  const auto d = ctx("y", "1");
  std::mt19937_64 rng(47);
  int done = 0;
  while (done < 20) {
    const auto f = random_ore(rng, static_cast<unsigned>(done % 4), 2, false);
    if (f.is_zero() || divides(P("x"), f.leading_coeff())) continue;
    EXPECT_TRUE(essential_witness(d, f, P("x")).verify(d));
    ++done;
  }
  const auto uni = ctx("1", "0", true);
  EXPECT_TRUE(essential_witness(ctx("x^2", "0", true), T, P("x^2 + 1")).verify(ctx("x^2", "0", true)));
  EXPECT_TRUE(essential_witness(uni, T, P("x - 3")).verify(uni));
}

TEST(Witness, Hypotheses) {
  const auto d = ctx("1", "0", true);
  EXPECT_THROW(essential_witness(d, OrePoly{}, P("x")), ContractError);
  EXPECT_THROW(essential_witness(d, T, BiPoly{}), ContractError);
  EXPECT_THROW(essential_witness(d, O({"0", "x"}), P("x")), ContractError);
  const auto euler = ctx("x", "0", true);
  EXPECT_THROW(essential_witness(euler, T, P("x")), ContractError);  // x | d(x)
  const auto sq = ctx("x", "0", true);
  EXPECT_THROW(essential_witness(sq, T, P("x^2 - 1")), ContractError);  // reducible
  EXPECT_THROW(essential_witness(ctx("x", "0", true), T, P("x^4 + 1")), ContractError);  // not certified
}

}  // namespace
}  // namespace dop
