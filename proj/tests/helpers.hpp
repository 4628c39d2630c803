// Shared test utilities: oracle-to-library conversion at the comparison
// boundary, a seeded random diagram generator, and the bounded exhaustive
// enumeration of small diagrams.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "knotoid/invariants.hpp"
#include "oracle.hpp"

namespace testutil {

inline knotoid::LaurentPoly to_lp(const oracle::Poly& p) {
	knotoid::LaurentPoly out;
	for (const auto& [e, c] : p) out.add_term(e, c);
	return out;
}

inline knotoid::GeneralizedPoly to_gp(const oracle::GP& p) {
	knotoid::GeneralizedPoly out;
	for (const auto& [key, c] : p) {
		knotoid::LaurentPoly e;
		for (const auto& [ve, vc] : key) e.add_term(ve, vc);
		out.add_term(e, c);
	}
	return out;
}

inline knotoid::GaussDiagram random_diagram(std::mt19937_64& rng, int max_chords) {
	const int k = (int)(rng() % (max_chords + 1));
	std::vector<int> order;
	for (int c = 1; c <= k; ++c) {
		order.push_back(c);
		order.push_back(c);
	}
	std::shuffle(order.begin(), order.end(), rng);
	std::vector<knotoid::Endpoint> eps;
	std::vector<bool> seen(k + 1, false), first_over(k + 1, false), neg(k + 1, false);
	for (int c : order) {
		knotoid::Endpoint e;
		e.chord = c;
		if (!seen[c]) {
			seen[c] = true;
			first_over[c] = rng() & 1;
			neg[c] = rng() & 1;
			e.role = first_over[c] ? knotoid::Role::Over : knotoid::Role::Under;
		} else {
			e.role = first_over[c] ? knotoid::Role::Under : knotoid::Role::Over;
		}
		e.sign = neg[c] ? -1 : +1;
		eps.push_back(e);
	}
	return knotoid::GaussDiagram(std::move(eps));
}

// All diagrams with exactly k chords: every interleaving (perfect matching of
// 2k positions) x every role assignment x every sign assignment.
inline void for_each_diagram(int k, const std::function<void(const knotoid::GaussDiagram&)>& fn) {
	std::vector<int> pairing(2 * k, 0); // chord id per position, 0 = free
	std::function<void(int)> match = [&](int next_id) {
		int lo = -1;
		for (int p = 0; p < 2 * k; ++p)
			if (pairing[p] == 0) {
				lo = p;
				break;
			}
		if (lo < 0) {
			for (int mask = 0; mask < (1 << (2 * k)); ++mask) {
				// low k bits: first endpoint role per chord; high k bits: sign
				std::vector<knotoid::Endpoint> eps(2 * k);
				std::vector<bool> seen(k + 1, false);
				for (int p = 0; p < 2 * k; ++p) {
					const int c = pairing[p];
					const bool fo = mask >> (c - 1) & 1;
					eps[p].chord = c;
					eps[p].sign = mask >> (k + c - 1) & 1 ? -1 : +1;
					eps[p].role = (seen[c] != fo) ? knotoid::Role::Over : knotoid::Role::Under;
					seen[c] = true;
				}
				fn(knotoid::GaussDiagram(std::move(eps)));
			}
			return;
		}
		for (int q = lo + 1; q < 2 * k; ++q) {
			if (pairing[q] != 0) continue;
			pairing[lo] = pairing[q] = next_id;
			match(next_id + 1);
			pairing[lo] = pairing[q] = 0;
		}
	};
	match(1);
}

} // namespace testutil
