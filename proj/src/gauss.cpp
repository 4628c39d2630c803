#include "knotoid/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace knotoid {

GaussDiagram::GaussDiagram(std::vector<Endpoint> endpoints) : endpoints_(std::move(endpoints)) {
	validate();
}

void GaussDiagram::validate() const {
	std::map<int, std::vector<std::size_t>> where;
	for (std::size_t i = 0; i < endpoints_.size(); ++i) {
		const Endpoint& e = endpoints_[i];
		if (e.chord <= 0)
			throw ValidationError("chord " + std::to_string(e.chord) + ": identifier must be positive");
		if (e.sign != 1 && e.sign != -1)
			throw ValidationError("chord " + std::to_string(e.chord) + ": sign must be +1 or -1");
		where[e.chord].push_back(i);
	}
	for (const auto& [id, pos] : where) {
		if (pos.size() != 2)
			throw ValidationError("chord " + std::to_string(id) + ": occurs " + std::to_string(pos.size()) +
			                      " times, expected 2");
		const Endpoint& a = endpoints_[pos[0]];
		const Endpoint& b = endpoints_[pos[1]];
		if (a.role == b.role)
			throw ValidationError("chord " + std::to_string(id) + ": duplicate " +
			                      (a.role == Role::Over ? std::string("Over") : std::string("Under")) + " role");
		if (a.sign != b.sign)
			throw ValidationError("chord " + std::to_string(id) + ": sign mismatch between its two endpoints");
	}
}

GaussDiagram GaussDiagram::parse(std::string_view code) {
	std::vector<Endpoint> eps;
	std::istringstream in{std::string(code)};
	std::string tok;
	while (in >> tok) {
		bool ok = tok.size() >= 3 && (tok.front() == 'O' || tok.front() == 'U') &&
		          (tok.back() == '+' || tok.back() == '-');
		if (ok)
			for (std::size_t i = 1; i + 1 < tok.size(); ++i) ok = ok && std::isdigit((unsigned char)tok[i]);
		if (!ok) throw SyntaxError("bad token '" + tok + "'");
		Endpoint e;
		e.role = tok.front() == 'O' ? Role::Over : Role::Under;
		e.sign = tok.back() == '+' ? +1 : -1;
		try {
			e.chord = std::stoi(tok.substr(1, tok.size() - 2));
		} catch (const std::exception&) {
			throw SyntaxError("bad token '" + tok + "'");
		}
		eps.push_back(e);
	}
	return GaussDiagram(std::move(eps));
}

std::string GaussDiagram::serialize() const {
	std::string out;
	for (const Endpoint& e : endpoints_) {
		if (!out.empty()) out += ' ';
		out += (e.role == Role::Over ? 'O' : 'U');
		out += std::to_string(e.chord);
		out += (e.sign > 0 ? '+' : '-');
	}
	return out;
}

std::vector<ChordView> GaussDiagram::chords() const {
	std::vector<ChordView> out;
	std::map<int, std::size_t> index;
	for (std::size_t i = 0; i < endpoints_.size(); ++i) {
		const Endpoint& e = endpoints_[i];
		auto it = index.find(e.chord);
		if (it == index.end()) {
			index.emplace(e.chord, out.size());
			ChordView cv;
			cv.id = e.chord;
			cv.sign = e.sign;
			(e.role == Role::Over ? cv.over_pos : cv.under_pos) = i;
			out.push_back(cv);
		} else {
			ChordView& cv = out[it->second];
			(e.role == Role::Over ? cv.over_pos : cv.under_pos) = i;
		}
	}
	return out;
}

bool GaussDiagram::has_chord(int id) const {
	return std::any_of(endpoints_.begin(), endpoints_.end(), [&](const Endpoint& e) { return e.chord == id; });
}

ChordView GaussDiagram::chord(int id) const {
	for (const ChordView& cv : chords())
		if (cv.id == id) return cv;
	throw UnknownChord(id);
}

GaussDiagram::CrossingSets GaussDiagram::crossing_chords(int c) const {
	const ChordView self = chord(c);
	const std::size_t lo = std::min(self.over_pos, self.under_pos);
	const std::size_t hi = std::max(self.over_pos, self.under_pos);
	CrossingSets out;
	for (const ChordView& x : chords()) {
		if (x.id == c) continue;
		const bool over_in = x.over_pos > lo && x.over_pos < hi;
		const bool under_in = x.under_pos > lo && x.under_pos < hi;
		if (over_in == under_in) continue; // nested or disjoint, no crossing
		// arrowhead is the Under endpoint; lead side is outside (lo, hi)
		(under_in ? out.r : out.l).push_back(x.id);
	}
	return out;
}

long long GaussDiagram::intersection_index(int c) const {
	const ChordView self = chord(c);
	const std::size_t lo = std::min(self.over_pos, self.under_pos);
	const std::size_t hi = std::max(self.over_pos, self.under_pos);
	long long sum = 0;
	for (std::size_t i = 0; i < endpoints_.size(); ++i) {
		if (i >= lo && i <= hi) continue;
		sum += endpoints_[i].endpoint_sign();
	}
	return sum;
}

long long GaussDiagram::lead_side_sign_sum(int c, const std::set<int>& subset) const {
	if (subset.count(c)) throw DomainError("subset must exclude chord " + std::to_string(c));
	const ChordView self = chord(c);
	const std::size_t lo = std::min(self.over_pos, self.under_pos);
	const std::size_t hi = std::max(self.over_pos, self.under_pos);
	long long sum = 0;
	for (std::size_t i = 0; i < endpoints_.size(); ++i) {
		if (i >= lo && i <= hi) continue;
		if (subset.count(endpoints_[i].chord)) sum += endpoints_[i].endpoint_sign();
	}
	return sum;
}

GaussDiagram GaussDiagram::inverse() const {
	std::vector<Endpoint> eps(endpoints_.rbegin(), endpoints_.rend());
	return GaussDiagram(std::move(eps));
}

GaussDiagram GaussDiagram::mirror() const {
	std::vector<Endpoint> eps = endpoints_;
	for (Endpoint& e : eps) {
		e.role = e.role == Role::Over ? Role::Under : Role::Over;
		e.sign = -e.sign;
	}
	return GaussDiagram(std::move(eps));
}

int GaussDiagram::max_chord_id() const {
	int m = 0;
	for (const Endpoint& e : endpoints_) m = std::max(m, e.chord);
	return m;
}

GaussDiagram GaussDiagram::relabeled() const {
	std::map<int, int> remap;
	std::vector<Endpoint> eps = endpoints_;
	int next = 1;
	for (Endpoint& e : eps) {
		auto it = remap.find(e.chord);
		if (it == remap.end()) it = remap.emplace(e.chord, next++).first;
		e.chord = it->second;
	}
	return GaussDiagram(std::move(eps));
}

GaussDiagram product(const GaussDiagram& d1, const GaussDiagram& d2) {
	std::vector<Endpoint> eps = d1.endpoints();
	std::map<int, int> remap;
	int next = d1.max_chord_id() + 1;
	for (Endpoint e : d2.endpoints()) {
		auto it = remap.find(e.chord);
		if (it == remap.end()) it = remap.emplace(e.chord, next++).first;
		e.chord = it->second;
		eps.push_back(e);
	}
	return GaussDiagram(std::move(eps));
}

GaussDiagram make_hm(int m) {
	if (m < 2) throw DomainError("H_m requires m >= 2, got " + std::to_string(m));
	// chords: a=1 (sign -1), b=2 (+1), c=3 (+1), d_k=2k+2, e_k=2k+3 (all -1)
	std::vector<Endpoint> eps;
	auto push = [&](int id, Role role, int sign) { eps.push_back({id, role, sign}); };
	push(1, Role::Over, -1);
	push(2, Role::Under, +1);
	push(3, Role::Over, +1);
	push(1, Role::Under, -1);
	for (int k = 1; k <= m; ++k) {
		push(2 * k + 2, Role::Under, -1);
		push(2 * k + 3, Role::Over, -1);
	}
	push(3, Role::Under, +1);
	push(2, Role::Over, +1);
	for (int k = m; k >= 1; --k) {
		push(2 * k + 3, Role::Under, -1);
		push(2 * k + 2, Role::Over, -1);
	}
	return GaussDiagram(std::move(eps));
}

const std::vector<std::string>& corpus_names() {
	static const std::vector<std::string> names = {"5.1.3", "5.1.4", "5.1.26"};
	return names;
}

GaussDiagram corpus(const std::string& name) {
	// Chords numbered 1..5 in the order a, b, c, d, e of each source diagram.
	if (name == "5.1.3") return GaussDiagram::parse("U1+ O2+ U3- O4- U5- O3- U4- O5- O1+ U2+");
	if (name == "5.1.4") return GaussDiagram::parse("O1- U2+ O3+ U1- U4- O5- U3+ O2+ U5- O4-");
	if (name == "5.1.26") return GaussDiagram::parse("O1+ U2- O3- O4+ U3- O5- U1+ U5- O2- U4+");
	throw UnknownName(name);
}

} // namespace knotoid
