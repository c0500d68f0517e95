#include <gtest/gtest.h>

#include "support.hpp"

using namespace lgv;
using namespace lgv::testing;

namespace {

Monomial mono(std::initializer_list<int> e) {
  Monomial m;
  for (int x : e) m.push_back(static_cast<Exponent>(x));
  return m;
}

}  // namespace

TEST(PrimeField, CanonicalResidues) {
  PrimeField k(7);
  EXPECT_EQ(k.from_integer(-1), 6u);
  EXPECT_EQ(k.from_integer(15), 1u);
  EXPECT_EQ(k.mul(k.inv(3), 3), 1u);
  EXPECT_EQ(k.from_rational(mpq_class(1, 2)), 4u);
  EXPECT_THROW(k.from_rational(mpq_class(1, 7)), PreconditionError);
  EXPECT_THROW(k.inv(0), ConsistencyError);
  EXPECT_EQ(k.to_string(6), "-1");
}

TEST(PrimeField, RejectsBadModulus) {
  EXPECT_THROW(PrimeField(9), PreconditionError);
  EXPECT_THROW(PrimeField(2), PreconditionError);
  EXPECT_THROW(parse_field_descriptor("fp:4"), ParseError);
  EXPECT_THROW(parse_field_descriptor("fp:2147483659"), ParseError);
  EXPECT_THROW(parse_field_descriptor("real"), ParseError);
  EXPECT_TRUE(parse_field_descriptor("rat").rational);
  EXPECT_EQ(parse_field_descriptor("fp:101").prime, 101u);
}

TEST(RationalField, ReducedFractions) {
  RationalField q;
  auto a = q.div(q.from_integer(6), q.from_integer(-4));
  EXPECT_EQ(q.to_string(a), "-3/2");
  EXPECT_EQ(a.get_den(), 2);
}

TEST(MonomialOrder, GrevlexExample) {
  auto ord = MonomialOrder::grevlex(3);
  EXPECT_EQ(ord.compare(mono({1, 1, 0}), mono({0, 0, 2})), std::strong_ordering::greater);
}

TEST(MonomialOrder, LexExample) {
  auto ord = MonomialOrder::lex(2);
  EXPECT_EQ(ord.compare(mono({1, 0}), mono({0, 3})), std::strong_ordering::greater);
}

TEST(MonomialOrder, Reflexive) {
  for (const auto& ord : {MonomialOrder::lex(3), MonomialOrder::grevlex(3), MonomialOrder::weighted_grevlex({1, 2, 3})})
    EXPECT_EQ(ord.compare(mono({2, 0, 1}), mono({2, 0, 1})), std::strong_ordering::equal);
}

TEST(MonomialOrder, MismatchedLengthIsStructural) {
  EXPECT_THROW(compare_monomials(mono({1, 0}), mono({1, 0, 0}), MonomialOrder::lex(2)), StructuralError);
  EXPECT_THROW(MonomialOrder(3, {{{0, 1}, OrderKind::lex, {}}}), StructuralError);
}

TEST(MonomialOrder, MultiplicativeAndWellFounded) {
  std::mt19937_64 rng(7);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(4), MonomialOrder::grevlex(4),
                                    MonomialOrder::weighted_grevlex({1, 2, 1, 3}),
                                    MonomialOrder::permuted_grevlex({2, 0, 3, 1}),
                                    MonomialOrder::elimination(4, {false, true, false, true})};
  const Monomial one(4, 0);
  for (const auto& ord : orders) {
    for (int i = 0; i < 1000; ++i) {
      auto a = random_monomial(rng, 4, 5), b = random_monomial(rng, 4, 5), c = random_monomial(rng, 4, 5);
      auto ab = ord.compare(a, b);
      EXPECT_EQ(ord.compare(product(a, c), product(b, c)), ab);
      EXPECT_EQ(ord.compare(b, a), 0 <=> ab);
      if (a != one) {
        EXPECT_EQ(ord.compare(a, one), std::strong_ordering::greater);
      }
    }
  }
}

TEST(MonomialOrder, Transitive) {
  std::mt19937_64 rng(11);
  auto ord = MonomialOrder::grevlex(3);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_monomial(rng, 3, 3), b = random_monomial(rng, 3, 3), c = random_monomial(rng, 3, 3);
    if (ord.compare(a, b) > 0 && ord.compare(b, c) > 0) {
      EXPECT_TRUE(ord.compare(a, c) > 0);
    }
  }
}

TEST(VarTable, Validation) {
  EXPECT_THROW(VarTable({"x", "x"}), StructuralError);
  EXPECT_THROW(VarTable({"1x"}), ParseError);
  EXPECT_THROW(VarTable({"x"}, {0}), StructuralError);
  VarTable v({"x", "y", "s"});
  EXPECT_EQ(v.with_s_weight_two().weights(), (std::vector<int>{1, 1, 2}));
}

class PolyArith : public ::testing::Test {
 protected:
  PrimeField k;
  RingPtr<PrimeField> ring = make_ring(k, VarTable({"x", "y", "s"}));
  Polynomial<PrimeField> p(const std::string& t) { return P(ring, t); }
};

TEST_F(PolyArith, Examples) {
  EXPECT_EQ(p("x+y") + p("x-y"), p("2*x"));
  EXPECT_EQ(p("x+y") * p("x-y"), p("x^2-y^2"));
  EXPECT_EQ(p("x*y-s").scale(k.from_integer(-1)), p("s-x*y"));
  EXPECT_TRUE((p("x") - p("x")).is_zero());
}

TEST_F(PolyArith, MismatchedRingsAreStructural) {
  auto other = make_ring(k, VarTable({"x", "z"}));
  EXPECT_THROW(p("x") + P(other, "x"), StructuralError);
  EXPECT_THROW(p("x") * P(other, "z"), StructuralError);
}

TEST_F(PolyArith, TermsDescendAndNoZeros) {
  auto q = p("s + y^2 + x*y - x*y + 3*x^3");
  EXPECT_EQ(q.to_string(), "3*x^3 + y^2 + s");
  for (std::size_t i = 0; i + 1 < q.size(); ++i)
    EXPECT_TRUE(ring->order.compare(q.exponents(i), q.exponents(i + 1)) > 0);
}

TEST_F(PolyArith, RingAxioms) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto a = random_polynomial(rng, ring, 5, 3), b = random_polynomial(rng, ring, 5, 3),
         c = random_polynomial(rng, ring, 5, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a - b) + b, a);
    EXPECT_EQ(a.sub_mul(k.from_integer(3), mono({1, 0, 2}), b),
              a - b.mul_term(k.from_integer(3), mono({1, 0, 2})));
  }
}

TEST(WeightedDegree, Examples) {
  PrimeField k;
  auto w2 = make_ring(k, VarTable({"x", "y", "s"}, {1, 1, 2}));
  auto w1 = make_ring(k, VarTable({"x", "y", "s"}));
  EXPECT_EQ(P(w2, "x*y - s").weighted_degree(), 2);
  EXPECT_EQ(P(w1, "x*y - s").weighted_degree(), std::nullopt);
  EXPECT_THROW(Polynomial<PrimeField>(w1).weighted_degree(), UndefinedDegreeError);
}

TEST(WeightedDegree, CommutingPairEntries) {
  PrimeField k;
  auto C = commuting_pair_ideal(k, 2);
  auto ring = make_ring(k, C.vars().with_s_weight_two());
  for (const auto& g : C.generators()) EXPECT_EQ(embed(g, ring).weighted_degree(), 2) << g;
}

TEST(RationalVsPrime, ReductionCommutes) {
  RationalField q;
  PrimeField k(101);
  auto rq = make_ring(q, VarTable({"x", "y", "z"}));
  auto rk = make_ring(k, VarTable({"x", "y", "z"}));
  std::mt19937_64 rng(5);
  auto reduce = [&](const Polynomial<RationalField>& f) {
    std::vector<std::pair<Monomial, PrimeField::Element>> ts;
    for (std::size_t i = 0; i < f.size(); ++i)
      ts.emplace_back(Monomial(f.exponents(i).begin(), f.exponents(i).end()), k.from_rational(f.coeff(i)));
    return Polynomial<PrimeField>::from_terms(rk, std::move(ts));
  };
  for (int i = 0; i < 100; ++i) {
    auto a = random_polynomial(rng, rq, 4, 3).scale(mpq_class(1, 3)), b = random_polynomial(rng, rq, 4, 3);
    EXPECT_EQ(reduce(a * b), reduce(a) * reduce(b));
    EXPECT_EQ(reduce(a - b), reduce(a) - reduce(b));
  }
  // Groebner bases agree too when no leading coefficient vanishes mod p
  auto Iq = ideal_in(rq, {"x^2 - 3/2*y", "x^3 - z", "x*y*z - 2"});
  auto Ik = ideal_in(rk, {"x^2 - 3/2*y", "x^3 - z", "x*y*z - 2"});
  std::vector<Polynomial<PrimeField>> reduced;
  for (const auto& g : Iq.groebner_basis()) reduced.push_back(reduce(g));
  EXPECT_EQ(reduced, Ik.groebner_basis());
}

TEST(Parse, SyntaxAndErrors) {
  RationalField q;
  auto ring = make_ring(q, VarTable({"A1_12", "A2_12", "s"}));
  auto f = P(ring, "3/2*A1_12*A2_12 - s");
  EXPECT_EQ(f.to_string(), "3/2*A1_12*A2_12 - s");
  EXPECT_EQ(P(ring, "(s+1)^2"), P(ring, "s^2 + 2*s + 1"));
  EXPECT_TRUE(P(ring, "-s + s").is_zero());
  EXPECT_THROW(P(ring, "t"), ParseError);
  EXPECT_THROW(P(ring, "s/s"), ParseError);
  EXPECT_THROW(P(ring, "s/0"), ParseError);
  EXPECT_THROW(P(ring, "(s"), ParseError);
  EXPECT_THROW(P(ring, "s +"), ParseError);
  EXPECT_THROW(P(ring, "2 3"), ParseError);
}

TEST(Parse, IdealFileFormat) {
  auto t = read_ideal_text("# comment\nvars: x y s\nweights: 1 1 2\n\nx*y - s\n# another\n");
  EXPECT_EQ(t.vars.names(), (std::vector<std::string>{"x", "y", "s"}));
  EXPECT_EQ(t.vars.weights(), (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(t.generators, (std::vector<std::string>{"x*y - s"}));
  EXPECT_THROW(read_ideal_text("x*y\n"), ParseError);
  EXPECT_THROW(read_ideal_text(""), ParseError);
  EXPECT_THROW(read_ideal_text("vars: x\nx\nweights: 1\n"), ParseError);
  EXPECT_THROW(read_ideal_text("vars: x y\nweights: 1\n"), StructuralError);
}

TEST(Parse, RoundTrip) {
  std::mt19937_64 rng(9);
  for (bool rational : {false, true}) {
    for (int i = 0; i < 50; ++i) {
      auto check = [&](auto field) {
        using F = decltype(field);
        auto ring = make_ring(field, VarTable({"x", "y", "A1_2_3", "s"}, {1, 2, 1, 2}));
        auto I = random_ideal(rng, ring, 3, 4, 3);
        auto text = I.to_text();
        auto J = Ideal<F>::from_text(read_ideal_text(text), field);
        EXPECT_EQ(J.vars(), I.vars());
        EXPECT_EQ(J.generators(), I.generators());
        EXPECT_EQ(J.to_text(), text);
      };
      if (rational)
        check(RationalField{});
      else
        check(PrimeField{});
    }
  }
}
