#include "knotoid/laurent.hpp"

#include <sstream>

namespace knotoid {

LaurentPoly LaurentPoly::constant(Coeff c) { return term(0, std::move(c)); }

LaurentPoly LaurentPoly::term(Exp k, Coeff c) {
	LaurentPoly p;
	p.add_term(k, c);
	return p;
}

void LaurentPoly::add_term(Exp k, const Coeff& c) {
	if (c == 0) return;
	auto it = terms_.find(k);
	if (it == terms_.end()) {
		terms_.emplace(k, c);
	} else {
		it->second += c;
		if (it->second == 0) terms_.erase(it);
	}
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
	for (const auto& [k, c] : o.terms_) add_term(k, c);
	return *this;
}

LaurentPoly LaurentPoly::operator-() const {
	LaurentPoly p;
	for (const auto& [k, c] : terms_) p.terms_.emplace(k, -c);
	return p;
}

LaurentPoly LaurentPoly::subst_inv() const {
	LaurentPoly p;
	for (const auto& [k, c] : terms_) p.terms_.emplace(-k, c);
	return p;
}

Coeff LaurentPoly::eval_one() const {
	Coeff s = 0;
	for (const auto& [k, c] : terms_) s += c;
	return s;
}

std::string LaurentPoly::canonical(char var) const {
	if (terms_.empty()) return "0";
	std::ostringstream out;
	bool first = true;
	auto emit = [&](Exp k, const Coeff& c) {
		if (first) {
			if (c < 0) out << '-';
		} else {
			out << (c < 0 ? " - " : " + ");
		}
		Coeff mag = abs(c);
		if (mag != 1 || k == 0) out << mag.str();
		if (k == 1)
			out << var;
		else if (k != 0)
			out << var << '^' << k;
		first = false;
	};
	// variable powers in decreasing exponent order, constant term last
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
		if (it->first != 0) emit(it->first, it->second);
	auto c0 = terms_.find(0);
	if (c0 != terms_.end()) emit(0, c0->second);
	return out.str();
}

int LaurentPoly::compare(const LaurentPoly& a, const LaurentPoly& b) {
	auto ia = a.terms_.rbegin(), ib = b.terms_.rbegin();
	for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
		if (ia->first != ib->first) return ia->first > ib->first ? 1 : -1;
		if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
	}
	if (ia != a.terms_.rend()) return 1;
	if (ib != b.terms_.rend()) return -1;
	return 0;
}

QuotientLaurent reduce_mod(const LaurentPoly& p, Exp n) {
	QuotientLaurent q;
	q.modulus = n;
	if (n == 0) {
		q.rep = p;
		return q;
	}
	for (const auto& [k, c] : p.terms()) {
		Exp r = k % n;
		if (r < 0) r += n;
		q.rep.add_term(r, c);
	}
	return q;
}

} // namespace knotoid
