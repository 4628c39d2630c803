#include "knotoid/invariants.hpp"

#include <cstdlib>
#include <sstream>

namespace knotoid {

void GeneralizedPoly::add_term(const LaurentPoly& exponent, const Coeff& c) {
	if (c == 0) return;
	auto it = terms_.find(exponent);
	if (it == terms_.end()) {
		terms_.emplace(exponent, c);
	} else {
		it->second += c;
		if (it->second == 0) terms_.erase(it);
	}
}

GeneralizedPoly& GeneralizedPoly::operator+=(const GeneralizedPoly& o) {
	for (const auto& [e, c] : o.terms_) add_term(e, c);
	return *this;
}

GeneralizedPoly GeneralizedPoly::operator-() const {
	GeneralizedPoly p;
	for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
	return p;
}

std::string GeneralizedPoly::canonical() const {
	if (terms_.empty()) return "0";
	std::ostringstream out;
	bool first = true;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
		const LaurentPoly& e = it->first;
		const Coeff& c = it->second;
		if (first) {
			if (c < 0) out << '-';
		} else {
			out << (c < 0 ? " - " : " + ");
		}
		Coeff mag = abs(c);
		if (mag != 1 || e.is_zero()) out << mag.str();
		if (!e.is_zero()) {
			if (e == LaurentPoly::constant(1))
				out << 'u';
			else if (e == LaurentPoly::constant(-1))
				out << "u^-1";
			else
				out << "u^(" << e.canonical() << ')';
		}
		first = false;
	}
	return out.str();
}

namespace {

// Raw (unreduced) defining sum of g_c over the given crossing sets, with
// `index` supplying the exponent datum (i or d_n) per chord.
template <class IndexFn>
LaurentPoly raw_index_sum(const GaussDiagram& d, const GaussDiagram::CrossingSets& cs, IndexFn index) {
	LaurentPoly raw;
	for (int x : cs.r) raw.add_term(index(x), d.chord(x).sign);
	for (int x : cs.l) raw.add_term(-index(x), -Coeff(d.chord(x).sign));
	return raw;
}

} // namespace

QuotientLaurent index_function(const GaussDiagram& d, int c) {
	auto cs = d.crossing_chords(c);
	LaurentPoly raw = raw_index_sum(d, cs, [&](int x) { return d.intersection_index(x); });
	return reduce_mod(raw, std::llabs(d.intersection_index(c)));
}

GeneralizedPoly f_polynomial(const GaussDiagram& d) {
	GeneralizedPoly f;
	for (const ChordView& cv : d.chords()) {
		f.add_term(index_function(d, cv.id).rep, cv.sign);
		f.add_term(LaurentPoly{}, -Coeff(cv.sign));
	}
	return f;
}

LaurentPoly index_polynomial(const GaussDiagram& d) {
	LaurentPoly f;
	for (const ChordView& cv : d.chords()) {
		f.add_term(d.intersection_index(cv.id), cv.sign);
		f.add_term(0, -Coeff(cv.sign));
	}
	return f;
}

bool in_cn(const GaussDiagram& d, int c, long long n) {
	const long long i = d.intersection_index(c);
	return n == 0 ? i == 0 : i % n == 0;
}

namespace {

std::set<int> cn_set(const GaussDiagram& d, long long n) {
	std::set<int> out;
	for (const ChordView& cv : d.chords())
		if (in_cn(d, cv.id, n)) out.insert(cv.id);
	return out;
}

long long dn_in(const GaussDiagram& d, const std::set<int>& cn, int c) {
	std::set<int> subset = cn;
	subset.erase(c);
	return d.lead_side_sign_sum(c, subset);
}

QuotientLaurent nth_index_in(const GaussDiagram& d, const std::set<int>& cn, int c) {
	auto cs = d.crossing_chords(c);
	std::erase_if(cs.l, [&](int x) { return !cn.count(x); });
	std::erase_if(cs.r, [&](int x) { return !cn.count(x); });
	LaurentPoly raw = raw_index_sum(d, cs, [&](int x) { return dn_in(d, cn, x); });
	return reduce_mod(raw, std::llabs(dn_in(d, cn, c)));
}

} // namespace

long long dn_function(const GaussDiagram& d, int c, long long n) {
	if (!d.has_chord(c)) throw UnknownChord(c);
	if (!in_cn(d, c, n)) throw NotInCn(c, n);
	return dn_in(d, cn_set(d, n), c);
}

LaurentPoly nth_polynomial(const GaussDiagram& d, long long n) {
	const std::set<int> cn = cn_set(d, n);
	LaurentPoly z;
	for (const ChordView& cv : d.chords()) {
		if (!cn.count(cv.id)) continue;
		z.add_term(dn_in(d, cn, cv.id), cv.sign);
		z.add_term(0, -Coeff(cv.sign));
	}
	return z;
}

QuotientLaurent nth_index_function(const GaussDiagram& d, int c, long long n) {
	if (!d.has_chord(c)) throw UnknownChord(c);
	if (!in_cn(d, c, n)) throw NotInCn(c, n);
	return nth_index_in(d, cn_set(d, n), c);
}

GeneralizedPoly nth_f_polynomial(const GaussDiagram& d, long long n) {
	const std::set<int> cn = cn_set(d, n);
	GeneralizedPoly f;
	for (const ChordView& cv : d.chords()) {
		if (!cn.count(cv.id)) continue;
		f.add_term(nth_index_in(d, cn, cv.id).rep, cv.sign);
		f.add_term(LaurentPoly{}, -Coeff(cv.sign));
	}
	return f;
}

GeneralizedPoly mirror_transform(const GaussDiagram& d) {
	GeneralizedPoly f;
	for (const ChordView& cv : d.chords()) {
		auto cs = d.crossing_chords(cv.id);
		LaurentPoly raw = raw_index_sum(d, cs, [&](int x) { return d.intersection_index(x); });
		QuotientLaurent h = reduce_mod(raw.subst_inv(), std::llabs(d.intersection_index(cv.id)));
		f.add_term(h.rep, -Coeff(cv.sign));
		f.add_term(LaurentPoly{}, cv.sign);
	}
	return f;
}

GeneralizedPoly nth_mirror_transform(const GaussDiagram& d, long long n) {
	const std::set<int> cn = cn_set(d, n);
	GeneralizedPoly f;
	for (const ChordView& cv : d.chords()) {
		if (!cn.count(cv.id)) continue;
		auto cs = d.crossing_chords(cv.id);
		std::erase_if(cs.l, [&](int x) { return !cn.count(x); });
		std::erase_if(cs.r, [&](int x) { return !cn.count(x); });
		LaurentPoly raw = raw_index_sum(d, cs, [&](int x) { return dn_in(d, cn, x); });
		QuotientLaurent h = reduce_mod(raw.subst_inv(), std::llabs(dn_in(d, cn, cv.id)));
		f.add_term(h.rep, -Coeff(cv.sign));
		f.add_term(LaurentPoly{}, cv.sign);
	}
	return f;
}

LaurentPoly specialize_v1(const GeneralizedPoly& p) {
	LaurentPoly out;
	for (const auto& [e, c] : p.terms()) out.add_term(e.eval_one().convert_to<Exp>(), c);
	return out;
}

std::vector<ChordReport> chord_report(const GaussDiagram& d, const std::vector<long long>& n_list) {
	std::vector<ChordReport> out;
	for (const ChordView& cv : d.chords()) {
		ChordReport r;
		r.id = cv.id;
		r.sign = cv.sign;
		r.i = d.intersection_index(cv.id);
		r.g = index_function(d, cv.id);
		for (long long n : n_list) {
			if (!in_cn(d, cv.id, n)) continue;
			ChordReport::NthData nd;
			nd.d_n = dn_function(d, cv.id, n);
			nd.g_n = nth_index_function(d, cv.id, n);
			r.by_n.emplace(n, std::move(nd));
		}
		out.push_back(std::move(r));
	}
	return out;
}

} // namespace knotoid
