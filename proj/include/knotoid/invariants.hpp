#pragma once

#include <map>
#include <vector>

#include "knotoid/gauss.hpp"
#include "knotoid/laurent.hpp"

namespace knotoid {

/// Formal integer combination of u-powers whose exponents are Laurent
/// polynomials in v (the normalized quotient representatives). The key for
/// the zero polynomial holds the constant term.
class GeneralizedPoly {
public:
	GeneralizedPoly() = default;

	bool is_zero() const { return terms_.empty(); }
	const std::map<LaurentPoly, Coeff>& terms() const { return terms_; }

	void add_term(const LaurentPoly& exponent, const Coeff& c);
	GeneralizedPoly& operator+=(const GeneralizedPoly& o);
	friend GeneralizedPoly operator+(GeneralizedPoly a, const GeneralizedPoly& b) { return a += b; }
	GeneralizedPoly operator-() const;

	bool operator==(const GeneralizedPoly&) const = default;

	/// Terms sorted by the Laurent-poly order on exponents, descending.
	/// "c*u^(E)", with u^(0) elided to the constant, u^(1) as "u" and
	/// u^(-1) as "u^-1"; "0" when zero.
	std::string canonical() const;

private:
	std::map<LaurentPoly, Coeff> terms_;
};

/// g_c(v), valued in Z[v,v^-1]/(v^{|i(c)|}-1).
QuotientLaurent index_function(const GaussDiagram& d, int c);

/// F_D(u,v) = sum over chords of sign(c) * (u^{g_c(v)} - 1).
GeneralizedPoly f_polynomial(const GaussDiagram& d);

/// F_D(t) = sum over chords of sign(c) * (t^{i(c)} - 1).
LaurentPoly index_polynomial(const GaussDiagram& d);

bool in_cn(const GaussDiagram& d, int c, long long n);

/// d_n(c): lead-side sign sum over C_n \ {c}. Requires c in C_n.
long long dn_function(const GaussDiagram& d, int c, long long n);

/// Z^n_D(t) = sum over C_n of sign(c) * (t^{d_n(c)} - 1).
LaurentPoly nth_polynomial(const GaussDiagram& d, long long n);

/// g^n_c(v): the index function computed over C_n with d_n in place of i.
QuotientLaurent nth_index_function(const GaussDiagram& d, int c, long long n);

/// F^n_D(u,v) = sum over C_n of sign(c) * (u^{g^n_c(v)} - 1).
GeneralizedPoly nth_f_polynomial(const GaussDiagram& d, long long n);

/// -F_D(u, v^-1), computed chord-wise: the substitution v -> v^-1 is applied
/// to the raw (unreduced) g_c before quotient normalization.
GeneralizedPoly mirror_transform(const GaussDiagram& d);
GeneralizedPoly nth_mirror_transform(const GaussDiagram& d, long long n);

/// Replace each u-exponent g by the integer g(1); the result is a Laurent
/// polynomial in t.
LaurentPoly specialize_v1(const GeneralizedPoly& p);

struct ChordReport {
	int id = 0;
	int sign = +1;
	long long i = 0;
	QuotientLaurent g;
	struct NthData {
		long long d_n = 0;
		QuotientLaurent g_n;
	};
	std::map<long long, NthData> by_n; // only for n where the chord is in C_n
};

std::vector<ChordReport> chord_report(const GaussDiagram& d, const std::vector<long long>& n_list);

} // namespace knotoid
