#include <doctest.h>

#include "knotoid/laurent.hpp"

using namespace knotoid;

static LaurentPoly lp(std::initializer_list<std::pair<Exp, long long>> ts) {
	LaurentPoly p;
	for (auto [e, c] : ts) p.add_term(e, c);
	return p;
}

TEST_CASE("zero handling") {
	LaurentPoly p;
	CHECK(p.is_zero());
	p.add_term(3, 2);
	p.add_term(3, -2);
	CHECK(p.is_zero());
	CHECK(p.canonical() == "0");
	CHECK(lp({{0, 5}}) + lp({{0, -5}}) == LaurentPoly{});
}

TEST_CASE("constructors and arithmetic") {
	CHECK(LaurentPoly::constant(3) == lp({{0, 3}}));
	CHECK(LaurentPoly::constant(0).is_zero());
	CHECK(LaurentPoly::term(2, 1) + LaurentPoly::term(2, 4) == lp({{2, 5}}));
	CHECK(-lp({{1, 1}, {-1, -1}}) == lp({{1, -1}, {-1, 1}}));
	CHECK(lp({{2, 1}}) - lp({{2, 1}}) == LaurentPoly{});
}

TEST_CASE("canonical rendering") {
	CHECK(lp({{-1, 2}, {0, -2}}).canonical() == "2v^-1 - 2");
	CHECK(lp({{1, -1}, {-1, 1}}).canonical() == "-v + v^-1");
	CHECK(lp({{0, 3}}).canonical() == "3");
	CHECK(lp({{1, 1}}).canonical() == "v");
	CHECK(lp({{1, 1}}).canonical('t') == "t");
	CHECK(lp({{2, 1}, {0, -1}}).canonical('t') == "t^2 - 1");
	CHECK(lp({{-3, -4}}).canonical() == "-4v^-3");
	CHECK(lp({{0, -1}}).canonical() == "-1");
}

TEST_CASE("substitution and evaluation") {
	CHECK(lp({{1, -1}, {-1, 1}}).subst_inv() == lp({{-1, -1}, {1, 1}}));
	CHECK(lp({{0, 7}}).subst_inv() == lp({{0, 7}}));
	CHECK(lp({{3, 2}, {-1, 5}}).eval_one() == 7);
	CHECK(LaurentPoly{}.eval_one() == 0);
}

TEST_CASE("term order") {
	// higher leading exponent wins; ties fall through to the next term;
	// a nonempty sequence beats its proper prefix
	CHECK(LaurentPoly::compare(lp({{2, 1}}), lp({{1, 9}})) > 0);
	CHECK(LaurentPoly::compare(lp({{1, 2}}), lp({{1, 1}})) > 0);
	CHECK(LaurentPoly::compare(lp({{1, 1}, {0, 1}}), lp({{1, 1}})) > 0);
	CHECK(LaurentPoly::compare(lp({{0, 1}}), LaurentPoly{}) > 0);
	CHECK(LaurentPoly::compare(lp({{1, 1}}), lp({{1, 1}})) == 0);
	CHECK(lp({{1, 9}}) < lp({{2, 1}}));
}

TEST_CASE("quotient reduction") {
	SUBCASE("modulus 0 is the identity") {
		auto p = lp({{5, 1}, {-2, 3}});
		auto q = reduce_mod(p, 0);
		CHECK(q.modulus == 0);
		CHECK(q.rep == p);
	}
	SUBCASE("modulus 1 collapses to the coefficient sum") {
		auto q = reduce_mod(lp({{4, 2}, {-1, 3}}), 1);
		CHECK(q.rep == lp({{0, 5}}));
	}
	SUBCASE("exponents land in [0, n)") {
		auto q = reduce_mod(lp({{3, 1}, {-1, 1}}), 2);
		CHECK(q.rep == lp({{1, 2}}));
		CHECK(reduce_mod(lp({{2, 1}, {0, -1}}), 2).rep.is_zero());
	}
}
