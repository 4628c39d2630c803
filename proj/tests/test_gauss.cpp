#include <doctest.h>

#include <algorithm>

#include "knotoid/gauss.hpp"

using namespace knotoid;

TEST_CASE("parse and serialize round-trip") {
	const std::string code = "U1+ O2+ U3- O4- U5- O3- U4- O5- O1+ U2+";
	auto d = GaussDiagram::parse(code);
	CHECK(d.serialize() == code);
	CHECK(d.size() == 10);
	CHECK(d.chord_count() == 5);
	CHECK(GaussDiagram::parse("  O1-\n U1- \t").serialize() == "O1- U1-");
}

TEST_CASE("empty code is the trivial knotoid") {
	auto d = GaussDiagram::parse("");
	CHECK(d.empty());
	CHECK(d.serialize() == "");
	CHECK(d.chords().empty());
}

TEST_CASE("syntax errors") {
	CHECK_THROWS_AS(GaussDiagram::parse("X1+"), SyntaxError);
	CHECK_THROWS_AS(GaussDiagram::parse("O1"), SyntaxError);
	CHECK_THROWS_AS(GaussDiagram::parse("O+"), SyntaxError);
	CHECK_THROWS_AS(GaussDiagram::parse("O1x+"), SyntaxError);
	CHECK_THROWS_AS(GaussDiagram::parse("O1+ U1- garbage"), SyntaxError);
}

TEST_CASE("validation errors name the chord") {
	CHECK_THROWS_WITH_AS(GaussDiagram::parse("O1+ U1-"), "chord 1: sign mismatch between its two endpoints",
	                     ValidationError);
	CHECK_THROWS_WITH_AS(GaussDiagram::parse("O1+ O1+"), "chord 1: duplicate Over role", ValidationError);
	CHECK_THROWS_WITH_AS(GaussDiagram::parse("O1+"), "chord 1: occurs 1 times, expected 2", ValidationError);
	CHECK_THROWS_AS(GaussDiagram::parse("O1+ U1+ O1+ U1+"), ValidationError);
}

TEST_CASE("chords are listed by first occurrence") {
	auto d = GaussDiagram::parse("O2- U3+ O1+ U2- O3+ U1+");
	auto cvs = d.chords();
	REQUIRE(cvs.size() == 3);
	CHECK(cvs[0].id == 2);
	CHECK(cvs[1].id == 3);
	CHECK(cvs[2].id == 1);
	CHECK(cvs[0].sign == -1);
	CHECK(cvs[0].over_pos == 0);
	CHECK(cvs[0].under_pos == 3);
	CHECK(d.chord(3).over_pos == 4);
	CHECK_THROWS_AS(d.chord(9), UnknownChord);
	CHECK(d.has_chord(1));
	CHECK(!d.has_chord(4));
}

TEST_CASE("endpoint signs") {
	Endpoint over{1, Role::Over, -1}, under{1, Role::Under, -1};
	CHECK(over.endpoint_sign() == -1);
	CHECK(under.endpoint_sign() == +1);
}

TEST_CASE("crossing sets and intersection index on a worked example") {
	// chords 1..5 = a..e: i = (-1,-1,0,0,0), r(a)={}, l(a)={b},
	// r(b)={}, l(b)={a}, r(c)={e}, l(c)={d}, r(d)={e}, l(d)={c},
	// r(e)={d}, l(e)={c}
	auto d = GaussDiagram::parse("U1+ O2+ U3- O4- U5- O3- U4- O5- O1+ U2+");
	CHECK(d.intersection_index(1) == -1);
	CHECK(d.intersection_index(2) == -1);
	CHECK(d.intersection_index(3) == 0);
	CHECK(d.intersection_index(4) == 0);
	CHECK(d.intersection_index(5) == 0);
	auto ca = d.crossing_chords(1);
	CHECK(ca.r.empty());
	CHECK(ca.l == std::vector<int>{2});
	auto cb = d.crossing_chords(2);
	CHECK(cb.r.empty());
	CHECK(cb.l == std::vector<int>{1});
	auto cc = d.crossing_chords(3);
	CHECK(cc.r == std::vector<int>{5});
	CHECK(cc.l == std::vector<int>{4});
	auto cd = d.crossing_chords(4);
	CHECK(cd.r == std::vector<int>{5});
	CHECK(cd.l == std::vector<int>{3});
	auto ce = d.crossing_chords(5);
	CHECK(ce.r == std::vector<int>{4});
	CHECK(ce.l == std::vector<int>{3});
}

TEST_CASE("lead_side_sign_sum agrees with intersection_index on the full set") {
	auto d = GaussDiagram::parse("O1- U2+ O3+ U1- U4- O5- U3+ O2+ U5- O4-");
	for (const ChordView& cv : d.chords()) {
		std::set<int> others;
		for (const ChordView& x : d.chords())
			if (x.id != cv.id) others.insert(x.id);
		CHECK(d.lead_side_sign_sum(cv.id, others) == d.intersection_index(cv.id));
	}
	CHECK_THROWS_AS(d.lead_side_sign_sum(1, std::set<int>{1, 2}), DomainError);
}

TEST_CASE("inverse, mirror, relabel") {
	auto d = GaussDiagram::parse("O1- U2+ U1- O2+");
	auto inv = d.inverse();
	CHECK(inv.serialize() == "O2+ U1- U2+ O1-");
	CHECK(inv.inverse() == d);
	auto mir = d.mirror();
	CHECK(mir.serialize() == "U1+ O2- O1+ U2-");
	CHECK(mir.mirror() == d);
	auto r = GaussDiagram::parse("O7- U3+ U7- O3+").relabeled();
	CHECK(r.serialize() == "O1- U2+ U1- O2+");
}

TEST_CASE("product renumbers the second factor") {
	auto d1 = GaussDiagram::parse("O1- U1-");
	auto d2 = GaussDiagram::parse("O1+ U2+ U1+ O2+");
	auto p = product(d1, d2);
	CHECK(p.serialize() == "O1- U1- O2+ U3+ U2+ O3+");
	CHECK(product(GaussDiagram{}, d2) == d2);
}

TEST_CASE("hm family") {
	auto h2 = make_hm(2);
	CHECK(h2.chord_count() == 7);
	CHECK(h2.size() == 14);
	CHECK(h2.serialize() == "O1- U2+ O3+ U1- U4- O5- U6- O7- U3+ O2+ U7- O6- U5- O4-");
	CHECK(make_hm(5).chord_count() == 13);
	CHECK_THROWS_AS(make_hm(1), DomainError);
}

TEST_CASE("built-in diagrams") {
	for (const std::string& n : corpus_names()) CHECK(corpus(n).chord_count() == 5);
	CHECK_THROWS_AS(corpus("nope"), UnknownName);
}

TEST_CASE("max_chord_id") {
	CHECK(GaussDiagram{}.max_chord_id() == 0);
	CHECK(GaussDiagram::parse("O9+ U9+").max_chord_id() == 9);
}
