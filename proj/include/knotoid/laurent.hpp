#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace knotoid {

using Coeff = boost::multiprecision::cpp_int;
using Exp = long long;

/// Exact integer Laurent polynomial in one variable.
/// Stored as a sparse exponent -> coefficient map with no zero coefficients;
/// the zero polynomial is the empty map.
class LaurentPoly {
public:
	LaurentPoly() = default;

	static LaurentPoly constant(Coeff c);
	/// c * v^k
	static LaurentPoly term(Exp k, Coeff c);

	bool is_zero() const { return terms_.empty(); }
	const std::map<Exp, Coeff>& terms() const { return terms_; }

	LaurentPoly& operator+=(const LaurentPoly& o);
	friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
	LaurentPoly operator-() const;
	friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a += -b; }

	bool operator==(const LaurentPoly&) const = default;

	/// v -> v^-1: flips the sign of every exponent.
	LaurentPoly subst_inv() const;

	/// Evaluation at v = 1, i.e. the coefficient sum.
	Coeff eval_one() const;

	/// Deterministic rendering, terms in strictly decreasing exponent order.
	/// "c*v^k" with v^0 elided, v^1 printed as the bare variable, unit
	/// coefficients elided except on the constant term; "0" when zero.
	std::string canonical(char var = 'v') const;

	/// Total order: the (exponent, coefficient) term sequences sorted by
	/// decreasing exponent, compared lexicographically. Returns <0, 0, >0.
	static int compare(const LaurentPoly& a, const LaurentPoly& b);
	bool operator<(const LaurentPoly& o) const { return compare(*this, o) < 0; }

	void add_term(Exp k, const Coeff& c);

private:
	std::map<Exp, Coeff> terms_;
};

/// An element of Z[v,v^-1]/(v^n - 1), kept as its normalized representative.
/// modulus 0 means the full ring (no reduction); modulus 1 collapses every
/// exponent to 0, so rep is a constant.
struct QuotientLaurent {
	Exp modulus = 0;
	LaurentPoly rep;
	bool operator==(const QuotientLaurent&) const = default;
};

/// Reduce every exponent into [0, n) when n > 0; identity when n = 0.
QuotientLaurent reduce_mod(const LaurentPoly& p, Exp n);

} // namespace knotoid
