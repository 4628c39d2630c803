#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "knotoid/errors.hpp"

namespace knotoid {

enum class Role { Over, Under };

/// One chord endpoint as met along the tail-to-head traversal.
/// The crossing sign is stored on both endpoints of a chord; the endpoint
/// sign is derived: +sign at the overpass preimage, -sign at the underpass.
struct Endpoint {
	int chord = 0; // positive chord id
	Role role = Role::Over;
	int sign = +1; // crossing sign, +1 or -1

	int endpoint_sign() const { return role == Role::Over ? sign : -sign; }
	bool operator==(const Endpoint&) const = default;
};

struct ChordView {
	int id = 0;
	int sign = +1;
	std::size_t over_pos = 0;
	std::size_t under_pos = 0;
};

/// Gauss diagram of a knotoid diagram: the ordered endpoint sequence from
/// tail to head. Every chord id occurs exactly twice, once per role, with a
/// consistent crossing sign. The empty sequence is the trivial knotoid.
class GaussDiagram {
public:
	GaussDiagram() = default;
	explicit GaussDiagram(std::vector<Endpoint> endpoints); // throws ValidationError

	/// Gauss-code grammar: token*, token := ('O'|'U') INT ('+'|'-'),
	/// whitespace separated; the empty string is the trivial knotoid.
	static GaussDiagram parse(std::string_view code); // throws SyntaxError, ValidationError
	std::string serialize() const;

	bool empty() const { return endpoints_.empty(); }
	std::size_t size() const { return endpoints_.size(); }
	std::size_t chord_count() const { return endpoints_.size() / 2; }
	const std::vector<Endpoint>& endpoints() const { return endpoints_; }

	/// Chords ordered by first occurrence along the traversal.
	std::vector<ChordView> chords() const;
	ChordView chord(int id) const; // throws UnknownChord
	bool has_chord(int id) const;

	struct CrossingSets {
		std::vector<int> l; // crossing chords pointing to the lead side
		std::vector<int> r; // crossing chords pointing off the lead side
	};
	/// A chord x crosses c iff exactly one endpoint of x lies strictly
	/// between c's two positions. The lead side of c is the complement of
	/// that open interval (it contains tail and head); x goes to l or r by
	/// where its arrowhead (Under endpoint) lies.
	CrossingSets crossing_chords(int c) const;

	/// i(c): sum of endpoint signs on the lead side of c, excluding c's own.
	long long intersection_index(int c) const;

	/// Lead-side endpoint-sign sum restricted to chords in `subset`
	/// (which must not contain c). Independent oracle for i(c) and d_n.
	long long lead_side_sign_sum(int c, const std::set<int>& subset) const;

	/// Orientation reversal -D: endpoint sequence reversed, roles and signs kept.
	GaussDiagram inverse() const;
	/// Mirror image D*: roles swapped and every crossing sign negated.
	GaussDiagram mirror() const;

	/// Chords renumbered 1..k by first occurrence; equality up to renumbering.
	GaussDiagram relabeled() const;

	int max_chord_id() const;

	bool operator==(const GaussDiagram&) const = default;

private:
	std::vector<Endpoint> endpoints_;
	void validate() const;
};

/// Concatenation; d2's chords are renumbered past d1's largest id.
GaussDiagram product(const GaussDiagram& d1, const GaussDiagram& d2);

/// The H_m family (m >= 2): chords a, b, c and pairs d_1,e_1,...,d_m,e_m.
GaussDiagram make_hm(int m); // throws DomainError

/// Built-in diagrams: "5.1.3", "5.1.4", "5.1.26".
GaussDiagram corpus(const std::string& name); // throws UnknownName
const std::vector<std::string>& corpus_names();

} // namespace knotoid
