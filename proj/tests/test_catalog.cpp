#include <gtest/gtest.h>

#include <modulislope/modulislope.hpp>

using namespace modulislope;

namespace {

DivisorClass mg(int g, Rational a, std::vector<Rational> b) {
    DivisorClass d(ModuliSpace{g, 0});
    d.add_lambda(a);
    for (std::size_t i = 0; i < b.size(); ++i) d.add_delta(static_cast<int>(i), -b[i]);
    return d;
}

}  // namespace

TEST(Catalog, BrillNoether) {
    EXPECT_EQ(brill_noether_class(10), mg(10, 13, {Rational(11, 6), 9, 16, 21, 24, 25}));
    EXPECT_EQ(brill_noether_class(3), mg(3, 6, {Rational(2, 3), 2}));
    EXPECT_EQ(brill_noether_class(10).delta(0), LinExpr(Rational(-11, 6)));
    EXPECT_EQ(brill_noether_number(10, 4, 12), 0);
    EXPECT_EQ(brill_noether_number(11, 1, 6), -1);
    EXPECT_EQ(petri_slope(22), Rational(145, 22));
}

TEST(Catalog, Weierstrass) {
    // Independent: -lambda + C(g+1,2) psi - sum C(g-i+1,2) delta_i.
    for (int g = 2; g <= 12; ++g) {
        const DivisorClass w = weierstrass_class(g);
        EXPECT_EQ(w.lambda(), LinExpr(-1));
        EXPECT_EQ(w.psi(1), LinExpr(Rational(g * (g + 1), 2)));
        for (int i = 1; i <= g - 1; ++i) EXPECT_EQ(w.delta(i), LinExpr(-binomial(g - i + 1, 2))) << g << " " << i;
    }
    DivisorClass w4(ModuliSpace{4, 1});
    w4.add_lambda(-1).add_psi(1, 10).add_delta(1, -6).add_delta(2, -3).add_delta(3, -1);
    EXPECT_EQ(weierstrass_class(4), w4);
}

TEST(Catalog, K3Class) {
    const NamedClass k = k3_class();
    EXPECT_EQ(k.cls.lambda(), LinExpr(7));
    EXPECT_EQ(k.cls.delta(0), LinExpr(-1));
    EXPECT_EQ(k.cls.delta(4), LinExpr(-14));
    EXPECT_EQ(k.cls.delta(5), -LinExpr::symbol("B5"));
    ASSERT_NE(k.bounds.find("B5"), nullptr);
    EXPECT_EQ(k.bounds.find("B5")->lo, Rational(6));
    EXPECT_EQ(k.cls.substitute("B5", LinExpr(15)).delta(5), LinExpr(-15));
}

TEST(Catalog, BN1) {
    // BN_1 on M_{4,1} is pi^* BN: 7 lambda - 5/6 delta_0 - 3 delta_1 - 4 delta_2 - 3 delta_3.
    DivisorClass want(ModuliSpace{4, 1});
    want.add_lambda(7).add_delta(0, Rational(-5, 6)).add_delta(1, -3).add_delta(2, -4).add_delta(3, -3);
    EXPECT_EQ(bn1_pointed_class(4), want);
}

TEST(Catalog, CanonicalClasses) {
    const DivisorClass k = canonical_class_mgn(10, 9);
    EXPECT_EQ(k.lambda(), LinExpr(13));
    EXPECT_EQ(k.delta(BoundaryIndex::irreducible()), LinExpr(-2));
    EXPECT_EQ(k.psi(3), LinExpr(1));
    EXPECT_EQ(k.delta(delta_index({10, 9}, 1, 0)), LinExpr(-3));
    EXPECT_EQ(k.delta(delta_index({10, 9}, 0, marks_of({1, 2}))), LinExpr(-2));
    for (int g = 3; g <= 12; ++g) EXPECT_EQ(canonical_class_mgn(g, 1), canonical_class_mg1(g, true)) << g;
    EXPECT_TRUE(canonical_class_mg1(5, false).delta(0).is_zero());
}

TEST(Catalog, PointedSymbolicClasses) {
    const NamedClass d = averaged_weierstrass(10);
    EXPECT_EQ(d.cls.lambda(), LinExpr(-1));
    EXPECT_EQ(d.cls.delta(BoundaryIndex::irreducible()), LinExpr(0));
    const BoundaryIndex b0 = delta_index({10, 10}, 0, marks_of({1, 2}));
    const std::string sym = d.cls.delta(b0).terms().begin()->first;
    EXPECT_EQ(d.bounds.find(sym)->lo, Rational(2));
    EXPECT_FALSE(d.bounds.find(sym)->lo_strict);
    EXPECT_THROW(averaged_weierstrass(9), std::invalid_argument);
    EXPECT_EQ(pointed_bn_general_divisor(3).cls.psi(2), LinExpr(1));
}

TEST(Catalog, Lookup) {
    EXPECT_EQ(lookup_class("k3").cls, k3_class().cls);
    EXPECT_EQ(lookup_class("bn:10").cls, brill_noether_class(10));
    EXPECT_EQ(lookup_class("canonical:10:9").cls, canonical_class_mgn(10, 9));
    EXPECT_THROW(lookup_class("nope"), ParseError);
    EXPECT_THROW(lookup_class("bn:x"), ParseError);
    EXPECT_FALSE(catalog_entries().empty());
}

TEST(Serialize, ClassFormat) {
    const json j = named_to_json(k3_class());
    EXPECT_EQ(j["space"], json::parse(R"({"g":10,"n":0})"));
    EXPECT_EQ(j["lambda"], "7");
    EXPECT_EQ(j["boundary"], json::parse(R"({"0":"-1","1":"-5","2":"-9","3":"-12","4":"-14","5":"-B5"})"));
    EXPECT_EQ(j["bounds"]["B5"]["lo"], "6");
    const NamedClass back = named_from_json(j);
    EXPECT_EQ(back.cls, k3_class().cls);
    EXPECT_EQ(back.bounds, k3_class().bounds);
}

TEST(Serialize, RoundTripPointed) {
    const NamedClass d = averaged_weierstrass(10);
    const NamedClass back = named_from_json(json::parse(named_to_json(d).dump()));
    EXPECT_EQ(back.cls, d.cls);
    EXPECT_EQ(back.bounds, d.bounds);
}

TEST(Serialize, Errors) {
    EXPECT_THROW(class_from_json(json::parse(R"({"lambda":"1"})")), ParseError);
    EXPECT_THROW(class_from_json(json::parse(R"({"space":{"g":10,"n":0},"boundary":{"x":"1"}})")), ParseError);
    EXPECT_THROW(class_from_json(json::parse(R"({"space":{"g":10,"n":0},"lambda":"1/0"})")), ParseError);
    EXPECT_THROW(class_from_json(json::parse(R"({"space":{"g":10,"n":1},"psi":{"2":"1"}})")), ParseError);
}

TEST(Serialize, Quadratic) {
    const QuadraticClass q = product(weierstrass_class(3), weierstrass_class(3));
    EXPECT_EQ(quadratic_from_json(quadratic_to_json(q)), q);
}
