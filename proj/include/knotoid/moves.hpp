#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "knotoid/gauss.hpp"

namespace knotoid {

enum class MoveKind { R1Insert, R1Delete, R2Insert, R2Delete, R3, ForbiddenSlide };

enum class End { Tail, Head };

std::string to_string(MoveKind k);

/// A concrete applicable move instance at a site in a diagram.
/// Which fields are meaningful depends on kind:
///   R1Insert:  gap, sign, over_first (role of the first endpoint)
///   R1Delete:  chord (isolated)
///   R2Insert:  gap < gap2 (gap indices in the unmodified diagram), sign of
///              the first chord, over_first (whether the pair at `gap` is
///              the Over pair)
///   R2Delete:  chord, chord2 (the pattern pair, in within-pair order)
///   R3:        p1 < p2 < p3, start positions of the three adjacent endpoint
///              pairs; c1, c2, c3 the matched chords (c2 the negative one)
///   ForbiddenSlide: end
struct MoveDescriptor {
	MoveKind kind = MoveKind::R1Insert;
	std::size_t gap = 0;
	std::size_t gap2 = 0;
	int sign = +1;
	bool over_first = true;
	int chord = 0;
	int chord2 = 0;
	std::size_t p1 = 0, p2 = 0, p3 = 0;
	int c1 = 0, c2 = 0, c3 = 0;
	End end = End::Tail;

	std::string describe() const;
};

using MoveKindSet = std::set<MoveKind>;

/// All applicable move instances of the requested kinds, in a deterministic
/// order. ForbiddenSlide instances are listed only when explicitly requested.
std::vector<MoveDescriptor> enumerate_moves(const GaussDiagram& d, const MoveKindSet& kinds);

/// Applies a move after re-validating its site; throws InvalidMove when the
/// site no longer matches.
GaussDiagram apply_move(const GaussDiagram& d, const MoveDescriptor& m);

struct WalkTrace {
	GaussDiagram result;
	std::vector<MoveDescriptor> moves;
};

/// Seeded random sequence of applicable moves; reproducible for fixed
/// arguments. When the chord count exceeds growth_cap, delete kinds are
/// preferred if any applies. If no requested kind applies, an R1 chord is
/// inserted instead.
WalkTrace random_walk_traced(const GaussDiagram& d, int steps, std::uint64_t seed, const MoveKindSet& kinds,
                             std::size_t growth_cap = 32);
GaussDiagram random_walk(const GaussDiagram& d, int steps, std::uint64_t seed, const MoveKindSet& kinds,
                         std::size_t growth_cap = 32);

/// Pulls the chosen endpoint of the knotoid across the strand it first
/// crosses: deletes the chord incident to the outermost position. Not an
/// invariance-preserving move.
GaussDiagram forbidden_slide(const GaussDiagram& d, End end); // throws EmptyDiagram

const MoveKindSet& reidemeister_kinds(); // the five R kinds

} // namespace knotoid
