#include "knotoid/moves.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>

namespace knotoid {

std::string to_string(MoveKind k) {
	switch (k) {
	case MoveKind::R1Insert: return "R1Insert";
	case MoveKind::R1Delete: return "R1Delete";
	case MoveKind::R2Insert: return "R2Insert";
	case MoveKind::R2Delete: return "R2Delete";
	case MoveKind::R3: return "R3";
	case MoveKind::ForbiddenSlide: return "ForbiddenSlide";
	}
	return "?";
}

std::string MoveDescriptor::describe() const {
	std::ostringstream out;
	out << to_string(kind);
	switch (kind) {
	case MoveKind::R1Insert:
		out << " gap=" << gap << " sign=" << (sign > 0 ? '+' : '-') << " first=" << (over_first ? 'O' : 'U');
		break;
	case MoveKind::R1Delete: out << " chord=" << chord; break;
	case MoveKind::R2Insert:
		out << " gaps=" << gap << ',' << gap2 << " sign=" << (sign > 0 ? '+' : '-')
		    << " first=" << (over_first ? 'O' : 'U');
		break;
	case MoveKind::R2Delete: out << " chords=" << chord << ',' << chord2; break;
	case MoveKind::R3: out << " pairs=" << p1 << ',' << p2 << ',' << p3; break;
	case MoveKind::ForbiddenSlide: out << " end=" << (end == End::Tail ? "tail" : "head"); break;
	}
	return out.str();
}

const MoveKindSet& reidemeister_kinds() {
	static const MoveKindSet ks = {MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert, MoveKind::R2Delete,
	                               MoveKind::R3};
	return ks;
}

namespace {

// ---- R3 pattern templates ----------------------------------------------
// The six endpoints sit in three adjacent position pairs; each slot names
// which of the three chords it belongs to and its role. Chord 1 and 3 carry
// sign +1, chord 2 sign -1. The four templates are the two generating
// triangle moves, each in both directions (the move transposes the two
// endpoints inside every pair, which maps each "before" form to "after").
struct R3Slot {
	int who;
	Role role;
};
using R3Template = std::array<R3Slot, 6>;

constexpr Role O = Role::Over;
constexpr Role U = Role::Under;

const std::array<R3Template, 4> kR3Templates = {{
    {{{3, U}, {2, U}, {1, U}, {3, O}, {2, O}, {1, O}}}, // all-under-first variant, before
    {{{2, U}, {3, U}, {3, O}, {1, U}, {1, O}, {2, O}}}, // all-under-first variant, after
    {{{1, O}, {2, O}, {3, O}, {1, U}, {2, U}, {3, U}}}, // all-over-first variant, before
    {{{2, O}, {1, O}, {1, U}, {3, O}, {3, U}, {2, U}}}, // all-over-first variant, after
}};

// Tries to match the six endpoints against one of the templates; on success
// fills c1..c3 (c2 is the negative chord).
bool match_r3_endpoints(const std::array<Endpoint, 6>& eps, int& c1, int& c2, int& c3) {
	for (const R3Template& t : kR3Templates) {
		std::array<int, 4> assigned = {0, 0, 0, 0};
		bool ok = true;
		for (int k = 0; k < 6 && ok; ++k) {
			if (eps[k].role != t[k].role) {
				ok = false;
				break;
			}
			int& slot = assigned[t[k].who];
			if (slot == 0)
				slot = eps[k].chord;
			else if (slot != eps[k].chord)
				ok = false;
		}
		if (!ok) continue;
		if (assigned[1] == assigned[2] || assigned[1] == assigned[3] || assigned[2] == assigned[3]) continue;
		auto sign_of = [&](int id) {
			for (const Endpoint& e : eps)
				if (e.chord == id) return e.sign;
			return 0;
		};
		if (sign_of(assigned[1]) != +1 || sign_of(assigned[2]) != -1 || sign_of(assigned[3]) != +1) continue;
		c1 = assigned[1];
		c2 = assigned[2];
		c3 = assigned[3];
		return true;
	}
	return false;
}

bool match_r3_site(const GaussDiagram& d, std::size_t p1, std::size_t p2, std::size_t p3, int& c1, int& c2,
                   int& c3) {
	const auto& eps = d.endpoints();
	if (!(p1 + 1 < p2 && p2 + 1 < p3 && p3 + 1 < eps.size())) return false;
	std::array<Endpoint, 6> six = {eps[p1], eps[p1 + 1], eps[p2], eps[p2 + 1], eps[p3], eps[p3 + 1]};
	return match_r3_endpoints(six, c1, c2, c3);
}

// Isolated chord: both endpoints adjacent in the sequence.
bool find_isolated(const GaussDiagram& d, int chord, std::size_t& pos) {
	const auto& eps = d.endpoints();
	for (std::size_t i = 0; i + 1 < eps.size(); ++i)
		if (eps[i].chord == chord && eps[i + 1].chord == chord) {
			pos = i;
			return true;
		}
	return false;
}

// The R2 pattern: chords x, y with opposite signs, endpoints interleaved in
// two adjacent pairs (x y ... x y), one pair all Over, the other all Under.
bool find_r2_pair(const GaussDiagram& d, int x, int y, std::size_t& i, std::size_t& j) {
	const auto& eps = d.endpoints();
	std::vector<std::size_t> px, py;
	for (std::size_t k = 0; k < eps.size(); ++k) {
		if (eps[k].chord == x) px.push_back(k);
		if (eps[k].chord == y) py.push_back(k);
	}
	if (px.size() != 2 || py.size() != 2) return false;
	if (eps[px[0]].sign != -eps[py[0]].sign) return false;
	// same within-pair order: x immediately before y in both pairs
	if (py[0] != px[0] + 1 || py[1] != px[1] + 1) return false;
	if (px[1] <= px[0] + 1) return false;
	if (eps[px[0]].role != eps[py[0]].role) return false;
	if (eps[px[1]].role != eps[py[1]].role) return false;
	if (eps[px[0]].role == eps[px[1]].role) return false;
	i = px[0];
	j = px[1];
	return true;
}

std::vector<Endpoint> erase_positions(const std::vector<Endpoint>& eps, std::vector<std::size_t> pos) {
	std::sort(pos.begin(), pos.end(), std::greater<>());
	std::vector<Endpoint> out = eps;
	for (std::size_t p : pos) out.erase(out.begin() + static_cast<std::ptrdiff_t>(p));
	return out;
}

} // namespace

std::vector<MoveDescriptor> enumerate_moves(const GaussDiagram& d, const MoveKindSet& kinds) {
	std::vector<MoveDescriptor> out;
	const auto& eps = d.endpoints();
	const std::size_t gaps = eps.size() + 1;

	if (kinds.count(MoveKind::R1Insert)) {
		for (std::size_t g = 0; g < gaps; ++g)
			for (int s : {+1, -1})
				for (bool of : {true, false}) {
					MoveDescriptor m;
					m.kind = MoveKind::R1Insert;
					m.gap = g;
					m.sign = s;
					m.over_first = of;
					out.push_back(m);
				}
	}
	if (kinds.count(MoveKind::R1Delete)) {
		for (std::size_t i = 0; i + 1 < eps.size(); ++i)
			if (eps[i].chord == eps[i + 1].chord) {
				MoveDescriptor m;
				m.kind = MoveKind::R1Delete;
				m.chord = eps[i].chord;
				out.push_back(m);
			}
	}
	if (kinds.count(MoveKind::R2Insert)) {
		for (std::size_t g1 = 0; g1 < gaps; ++g1)
			for (std::size_t g2 = g1 + 1; g2 < gaps; ++g2)
				for (int s : {+1, -1})
					for (bool of : {true, false}) {
						MoveDescriptor m;
						m.kind = MoveKind::R2Insert;
						m.gap = g1;
						m.gap2 = g2;
						m.sign = s;
						m.over_first = of;
						out.push_back(m);
					}
	}
	if (kinds.count(MoveKind::R2Delete)) {
		for (std::size_t i = 0; i + 1 < eps.size(); ++i) {
			const int x = eps[i].chord, y = eps[i + 1].chord;
			if (x == y) continue;
			std::size_t a, b;
			if (find_r2_pair(d, x, y, a, b) && a == i) {
				MoveDescriptor m;
				m.kind = MoveKind::R2Delete;
				m.chord = x;
				m.chord2 = y;
				out.push_back(m);
			}
		}
	}
	if (kinds.count(MoveKind::R3)) {
		// A site is three disjoint adjacent pairs over three chords; every
		// chord is paired with both others, so the third chord of a site is a
		// neighbor of the remaining endpoint of the first pair. Each site is
		// reported once, from its lowest pair.
		std::map<int, std::array<std::size_t, 2>> at;
		for (std::size_t k = 0; k < eps.size(); ++k) {
			auto it = at.find(eps[k].chord);
			if (it == at.end())
				at[eps[k].chord] = {k, k};
			else
				it->second[1] = k;
		}
		for (std::size_t i = 0; i + 1 < eps.size(); ++i) {
			const int x = eps[i].chord, y = eps[i + 1].chord;
			if (x == y) continue;
			auto other = [&](int c, std::size_t self) {
				const auto& p = at[c];
				return p[0] == self ? p[1] : p[0];
			};
			const std::size_t xo = other(x, i), yo = other(y, i + 1);
			std::set<int> seen;
			for (std::size_t j : {xo > 0 ? xo - 1 : xo, xo + 1}) {
				if (j == xo || j >= eps.size()) continue;
				const int z = eps[j].chord;
				if (z == x || z == y || !seen.insert(z).second) continue;
				std::array<std::size_t, 6> pos = {i, i + 1, xo, yo, at[z][0], at[z][1]};
				std::sort(pos.begin(), pos.end());
				if (pos[0] != i) continue; // counted from a higher pair
				if (pos[1] != pos[0] + 1 || pos[3] != pos[2] + 1 || pos[5] != pos[4] + 1) continue;
				MoveDescriptor m;
				m.kind = MoveKind::R3;
				m.p1 = pos[0];
				m.p2 = pos[2];
				m.p3 = pos[4];
				if (match_r3_site(d, m.p1, m.p2, m.p3, m.c1, m.c2, m.c3)) out.push_back(m);
			}
		}
	}
	if (kinds.count(MoveKind::ForbiddenSlide) && !eps.empty()) {
		for (End e : {End::Tail, End::Head}) {
			MoveDescriptor m;
			m.kind = MoveKind::ForbiddenSlide;
			m.end = e;
			out.push_back(m);
		}
	}
	return out;
}

GaussDiagram apply_move(const GaussDiagram& d, const MoveDescriptor& m) {
	const auto& eps = d.endpoints();
	const std::size_t gaps = eps.size() + 1;
	switch (m.kind) {
	case MoveKind::R1Insert: {
		if (m.gap >= gaps) throw InvalidMove("R1Insert: gap out of range");
		const int id = d.max_chord_id() + 1;
		std::vector<Endpoint> out = eps;
		Endpoint first{id, m.over_first ? Role::Over : Role::Under, m.sign};
		Endpoint second{id, m.over_first ? Role::Under : Role::Over, m.sign};
		out.insert(out.begin() + static_cast<std::ptrdiff_t>(m.gap), {first, second});
		return GaussDiagram(std::move(out));
	}
	case MoveKind::R1Delete: {
		std::size_t pos;
		if (!find_isolated(d, m.chord, pos)) throw InvalidMove("R1Delete: chord not isolated");
		return GaussDiagram(erase_positions(eps, {pos, pos + 1}));
	}
	case MoveKind::R2Insert: {
		if (!(m.gap < m.gap2 && m.gap2 < gaps)) throw InvalidMove("R2Insert: bad gaps");
		const int id1 = d.max_chord_id() + 1, id2 = id1 + 1;
		const Role r1 = m.over_first ? Role::Over : Role::Under;
		const Role r2 = m.over_first ? Role::Under : Role::Over;
		std::vector<Endpoint> out = eps;
		out.insert(out.begin() + static_cast<std::ptrdiff_t>(m.gap2),
		           {Endpoint{id1, r2, m.sign}, Endpoint{id2, r2, -m.sign}});
		out.insert(out.begin() + static_cast<std::ptrdiff_t>(m.gap),
		           {Endpoint{id1, r1, m.sign}, Endpoint{id2, r1, -m.sign}});
		return GaussDiagram(std::move(out));
	}
	case MoveKind::R2Delete: {
		std::size_t i, j;
		if (!find_r2_pair(d, m.chord, m.chord2, i, j)) throw InvalidMove("R2Delete: pattern does not match");
		return GaussDiagram(erase_positions(eps, {i, i + 1, j, j + 1}));
	}
	case MoveKind::R3: {
		int c1, c2, c3;
		if (!match_r3_site(d, m.p1, m.p2, m.p3, c1, c2, c3)) throw InvalidMove("R3: site does not match");
		std::vector<Endpoint> out = eps;
		std::swap(out[m.p1], out[m.p1 + 1]);
		std::swap(out[m.p2], out[m.p2 + 1]);
		std::swap(out[m.p3], out[m.p3 + 1]);
		return GaussDiagram(std::move(out));
	}
	case MoveKind::ForbiddenSlide: return forbidden_slide(d, m.end);
	}
	throw InvalidMove("unknown move kind");
}

GaussDiagram forbidden_slide(const GaussDiagram& d, End end) {
	if (d.empty()) throw EmptyDiagram("forbidden slide on the trivial knotoid");
	const auto& eps = d.endpoints();
	const int victim = end == End::Tail ? eps.front().chord : eps.back().chord;
	std::vector<std::size_t> pos;
	for (std::size_t i = 0; i < eps.size(); ++i)
		if (eps[i].chord == victim) pos.push_back(i);
	return GaussDiagram(erase_positions(eps, pos));
}

namespace {

// Insert moves are sampled by index instead of materializing the whole list.
std::size_t insert_move_count(const GaussDiagram& d, MoveKind k) {
	const std::size_t gaps = d.size() + 1;
	if (k == MoveKind::R1Insert) return gaps * 4;
	if (k == MoveKind::R2Insert) return gaps * (gaps - 1) / 2 * 4;
	return 0;
}

MoveDescriptor decode_insert(const GaussDiagram& d, MoveKind k, std::size_t idx) {
	MoveDescriptor m;
	m.kind = k;
	const std::size_t variant = idx % 4;
	m.sign = variant & 1 ? -1 : +1;
	m.over_first = (variant & 2) == 0;
	idx /= 4;
	if (k == MoveKind::R1Insert) {
		m.gap = idx;
		return m;
	}
	const std::size_t gaps = d.size() + 1;
	for (std::size_t g1 = 0; g1 < gaps; ++g1) {
		const std::size_t count = gaps - 1 - g1;
		if (idx < count) {
			m.gap = g1;
			m.gap2 = g1 + 1 + idx;
			return m;
		}
		idx -= count;
	}
	throw InvalidMove("R2Insert: sample index out of range");
}

} // namespace

WalkTrace random_walk_traced(const GaussDiagram& d, int steps, std::uint64_t seed, const MoveKindSet& kinds,
                             std::size_t growth_cap) {
	std::mt19937_64 rng(seed);
	WalkTrace walk;
	walk.result = d;
	auto uniform = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
	for (int step = 0; step < steps; ++step) {
		std::vector<MoveKind> candidates(kinds.begin(), kinds.end());
		if (walk.result.chord_count() > growth_cap) {
			std::vector<MoveKind> deletes;
			for (MoveKind k : candidates)
				if (k == MoveKind::R1Delete || k == MoveKind::R2Delete) deletes.push_back(k);
			bool any = false;
			for (MoveKind k : deletes)
				any = any || !enumerate_moves(walk.result, {k}).empty();
			if (any) candidates = deletes;
		}
		bool applied = false;
		while (!candidates.empty() && !applied) {
			const std::size_t pick = uniform(candidates.size());
			const MoveKind k = candidates[pick];
			MoveDescriptor chosen;
			bool found = false;
			if (k == MoveKind::R1Insert || k == MoveKind::R2Insert) {
				const std::size_t n = insert_move_count(walk.result, k);
				if (n > 0) {
					chosen = decode_insert(walk.result, k, uniform(n));
					found = true;
				}
			} else {
				auto moves = enumerate_moves(walk.result, {k});
				if (!moves.empty()) {
					chosen = moves[uniform(moves.size())];
					found = true;
				}
			}
			if (!found) {
				candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
				continue;
			}
			walk.result = apply_move(walk.result, chosen);
			walk.moves.push_back(chosen);
			applied = true;
		}
		if (!applied) {
			MoveDescriptor m = decode_insert(walk.result, MoveKind::R1Insert,
			                                 uniform(insert_move_count(walk.result, MoveKind::R1Insert)));
			walk.result = apply_move(walk.result, m);
			walk.moves.push_back(m);
		}
	}
	return walk;
}

GaussDiagram random_walk(const GaussDiagram& d, int steps, std::uint64_t seed, const MoveKindSet& kinds,
                         std::size_t growth_cap) {
	return random_walk_traced(d, steps, seed, kinds, growth_cap).result;
}

} // namespace knotoid
