// Command-line front end: compute, compare, fuzz, generate, tabulate.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "knotoid/invariants.hpp"
#include "knotoid/moves.hpp"

using json = nlohmann::ordered_json;
using namespace knotoid;

namespace {

// Input resolution: a built-in name, "hm(m)", or a raw Gauss code.
GaussDiagram resolve(const std::string& text) {
	for (const std::string& n : corpus_names())
		if (text == n) return corpus(n);
	if (text.rfind("hm(", 0) == 0 && text.back() == ')')
		return make_hm(std::stoi(text.substr(3, text.size() - 4)));
	return GaussDiagram::parse(text);
}

std::string sign_str(int s) { return s > 0 ? "+" : "-"; }

std::string chord_line(const ChordReport& r) {
	std::ostringstream out;
	out << "chord " << r.id << ": sign=" << sign_str(r.sign) << " i=" << r.i << " g=" << r.g.rep.canonical();
	for (const auto& [n, nd] : r.by_n)
		out << " | n=" << n << " d=" << nd.d_n << " g=" << nd.g_n.rep.canonical();
	return out.str();
}

struct Invariants {
	GeneralizedPoly f;
	LaurentPoly ft;
	std::map<long long, LaurentPoly> z;
	std::map<long long, GeneralizedPoly> fn;
};

Invariants compute_all(const GaussDiagram& d, const std::vector<long long>& ns) {
	Invariants inv;
	inv.f = f_polynomial(d);
	inv.ft = index_polynomial(d);
	for (long long n : ns) {
		inv.z.emplace(n, nth_polynomial(d, n));
		inv.fn.emplace(n, nth_f_polynomial(d, n));
	}
	return inv;
}

json laurent_terms(const LaurentPoly& p) {
	json terms = json::array();
	for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
		terms.push_back({{"exp", it->first}, {"coeff", it->second.str()}});
	return terms;
}

json compute_doc(const GaussDiagram& d, const Invariants& inv, const std::vector<long long>& ns) {
	json doc;
	doc["input"] = d.serialize();
	json fterms = json::array();
	for (auto it = inv.f.terms().rbegin(); it != inv.f.terms().rend(); ++it) {
		json exp = json::array();
		for (auto jt = it->first.terms().rbegin(); jt != it->first.terms().rend(); ++jt)
			exp.push_back({{"vexp", jt->first}, {"coeff", jt->second.str()}});
		fterms.push_back({{"coefficient", it->second.str()}, {"exponent", exp}});
	}
	doc["f_polynomial"] = {{"canonical", inv.f.canonical()}, {"terms", fterms}};
	doc["index_polynomial"] = {{"canonical", inv.ft.canonical('t')}, {"terms", laurent_terms(inv.ft)}};
	json z = json::object(), fn = json::object();
	for (long long n : ns) {
		z[std::to_string(n)] = inv.z.at(n).canonical('t');
		fn[std::to_string(n)] = inv.fn.at(n).canonical();
	}
	doc["z"] = z;
	doc["f_n"] = fn;
	json chords = json::array();
	for (const ChordReport& r : chord_report(d, ns)) {
		json c;
		c["id"] = r.id;
		c["sign"] = r.sign;
		c["i"] = r.i;
		c["g"] = r.g.rep.canonical();
		json by_n = json::object();
		for (const auto& [n, nd] : r.by_n)
			by_n[std::to_string(n)] = {{"d_n", nd.d_n}, {"g_n", nd.g_n.rep.canonical()}};
		c["by_n"] = by_n;
		chords.push_back(c);
	}
	doc["chords"] = chords;
	return doc;
}

void print_compute_text(const GaussDiagram& d, const Invariants& inv, const std::vector<long long>& ns) {
	std::cout << "code: " << d.serialize() << '\n';
	std::cout << "F(u,v) = " << inv.f.canonical() << '\n';
	std::cout << "F(t) = " << inv.ft.canonical('t') << '\n';
	for (long long n : ns) std::cout << "Z^" << n << "(t) = " << inv.z.at(n).canonical('t') << '\n';
	for (long long n : ns) std::cout << "F^" << n << "(u,v) = " << inv.fn.at(n).canonical() << '\n';
	for (const ChordReport& r : chord_report(d, ns)) std::cout << chord_line(r) << '\n';
}

MoveKindSet parse_kinds(const std::vector<std::string>& names) {
	if (names.empty()) return reidemeister_kinds();
	MoveKindSet ks;
	for (std::string s : names) {
		for (char& ch : s) ch = static_cast<char>(std::tolower((unsigned char)ch));
		if (s == "r1insert")
			ks.insert(MoveKind::R1Insert);
		else if (s == "r1delete")
			ks.insert(MoveKind::R1Delete);
		else if (s == "r2insert")
			ks.insert(MoveKind::R2Insert);
		else if (s == "r2delete")
			ks.insert(MoveKind::R2Delete);
		else if (s == "r3")
			ks.insert(MoveKind::R3);
		else if (s == "forbidden" || s == "forbiddenslide")
			ks.insert(MoveKind::ForbiddenSlide);
		else if (s == "reidemeister")
			for (MoveKind k : reidemeister_kinds()) ks.insert(k);
		else
			throw DomainError("unknown move kind '" + s + "'");
	}
	return ks;
}

std::string csv_quote(const std::string& s) {
	if (s.find_first_of(",\"") == std::string::npos) return s;
	std::string out = "\"";
	for (char c : s) {
		if (c == '"') out += '"';
		out += c;
	}
	return out + '"';
}

int run(int argc, char** argv) {
	CLI::App app{"knotoid invariants: F-polynomial and index-polynomial tools"};
	app.require_subcommand(1);

	std::string code, name, file, format = "text", out_format = "csv", family;
	std::vector<long long> n_list;
	std::vector<std::string> kind_names, compare_inputs;
	int trials = 100, steps = 30, m = 2;
	std::uint64_t seed = 1;

	auto add_input = [&](CLI::App* cmd, bool with_file) {
		auto* oc = cmd->add_option("--code", code, "Gauss code (empty = trivial knotoid)");
		auto* on = cmd->add_option("--name", name, "built-in diagram name");
		oc->excludes(on);
		if (with_file) cmd->add_option("--file", file, "read the Gauss code from a file")->excludes(oc)->excludes(on);
	};

	auto* c_compute = app.add_subcommand("compute", "compute all invariants of one diagram");
	add_input(c_compute, true);
	c_compute->add_option("--n", n_list, "n values for Z^n and F^n");
	c_compute->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));

	auto* c_compare = app.add_subcommand("compare", "compare the invariants of two diagrams");
	c_compare->add_option("inputs", compare_inputs, "two codes or names")->expected(2);
	c_compare->add_option("--n", n_list, "n values for Z^n and F^n");

	auto* c_fuzz = app.add_subcommand("fuzz", "random-walk invariance check");
	add_input(c_fuzz, false);
	c_fuzz->add_option("--trials", trials, "number of walks");
	c_fuzz->add_option("--steps", steps, "moves per walk");
	c_fuzz->add_option("--seed", seed, "base seed");
	c_fuzz->add_option("--kinds", kind_names, "move kinds (default: the five Reidemeister kinds)")->delimiter(',');
	c_fuzz->add_option("--n", n_list, "n values for Z^n and F^n");

	auto* c_generate = app.add_subcommand("generate", "print a family diagram's Gauss code");
	c_generate->add_option("family", family, "family name (hm)")->required();
	c_generate->add_option("m", m, "family parameter")->required();

	auto* c_tabulate = app.add_subcommand("tabulate", "batch invariants for a file of codes");
	c_tabulate->add_option("--file", file, "input file: 'name code' per line, # comments")->required();
	c_tabulate->add_option("--n", n_list, "n values for Z^n and F^n");
	c_tabulate->add_option("--out", out_format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		return app.exit(e) == 0 ? 0 : 2;
	}

	if (n_list.empty()) n_list = {1, 2, 3, 4};

	auto input_diagram = [&]() {
		if (!name.empty()) return corpus(name);
		if (!file.empty()) {
			std::ifstream in(file);
			if (!in) throw DomainError("cannot read file '" + file + "'");
			std::stringstream buf;
			buf << in.rdbuf();
			return GaussDiagram::parse(buf.str());
		}
		return GaussDiagram::parse(code);
	};

	if (c_compute->parsed()) {
		GaussDiagram d = input_diagram();
		Invariants inv = compute_all(d, n_list);
		if (format == "json")
			std::cout << compute_doc(d, inv, n_list).dump(2) << '\n';
		else
			print_compute_text(d, inv, n_list);
		return 0;
	}

	if (c_compare->parsed()) {
		GaussDiagram a = resolve(compare_inputs[0]);
		GaussDiagram b = resolve(compare_inputs[1]);
		Invariants ia = compute_all(a, n_list), ib = compute_all(b, n_list);
		bool any_diff = false;
		auto verdict = [&](const std::string& label, bool equal, const std::string& va, const std::string& vb) {
			std::cout << label << ": " << (equal ? "equal" : "different");
			if (equal)
				std::cout << " (" << va << ")\n";
			else
				std::cout << " (" << va << " vs " << vb << ")\n";
			any_diff = any_diff || !equal;
		};
		verdict("index_polynomial", ia.ft == ib.ft, ia.ft.canonical('t'), ib.ft.canonical('t'));
		for (long long n : n_list)
			verdict("z_" + std::to_string(n), ia.z.at(n) == ib.z.at(n), ia.z.at(n).canonical('t'),
			        ib.z.at(n).canonical('t'));
		verdict("f_polynomial", ia.f == ib.f, ia.f.canonical(), ib.f.canonical());
		for (long long n : n_list)
			verdict("f_" + std::to_string(n), ia.fn.at(n) == ib.fn.at(n), ia.fn.at(n).canonical(),
			        ib.fn.at(n).canonical());
		std::cout << (any_diff ? "distinguished" : "indistinguishable by these invariants") << '\n';
		return any_diff ? 0 : 1;
	}

	if (c_fuzz->parsed()) {
		GaussDiagram d = input_diagram();
		const MoveKindSet kinds = parse_kinds(kind_names);
		Invariants base = compute_all(d, n_list);
		for (int t = 0; t < trials; ++t) {
			const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(t);
			WalkTrace walk = random_walk_traced(d, steps, trial_seed, kinds);
			Invariants got = compute_all(walk.result, n_list);
			std::string bad;
			if (got.f != base.f) bad = "F(u,v)";
			if (bad.empty() && got.ft != base.ft) bad = "F(t)";
			for (long long n : n_list) {
				if (bad.empty() && got.z.at(n) != base.z.at(n)) bad = "Z^" + std::to_string(n);
				if (bad.empty() && got.fn.at(n) != base.fn.at(n)) bad = "F^" + std::to_string(n);
			}
			if (!bad.empty()) {
				std::cout << "counterexample: trial " << t << " seed " << trial_seed << " changed " << bad << '\n';
				std::cout << "start: " << d.serialize() << '\n';
				std::cout << "end:   " << walk.result.serialize() << '\n';
				for (const MoveDescriptor& mv : walk.moves) std::cout << "  " << mv.describe() << '\n';
				return 1;
			}
		}
		std::cout << "ok: " << trials << " trials x " << steps << " steps preserved all invariants\n";
		return 0;
	}

	if (c_generate->parsed()) {
		if (family != "hm") throw UnknownName(family);
		std::cout << make_hm(m).serialize() << '\n';
		return 0;
	}

	// tabulate
	std::ifstream in(file);
	if (!in) {
		std::cerr << "error: cannot read file '" << file << "'\n";
		return 2;
	}
	std::vector<std::string> labels = {"name", "code", "f_poly", "index_poly"};
	for (long long n : n_list) labels.push_back("z_" + std::to_string(n));
	for (long long n : n_list) labels.push_back("f_" + std::to_string(n));
	json rows = json::array();
	bool bad_lines = false;
	std::string line;
	std::size_t lineno = 0;
	std::ostringstream csv;
	for (std::size_t i = 0; i < labels.size(); ++i) csv << (i ? "," : "") << labels[i];
	csv << '\n';
	while (std::getline(in, line)) {
		++lineno;
		std::istringstream ls(line);
		std::string rec_name;
		if (!(ls >> rec_name) || rec_name[0] == '#') continue;
		std::string rest;
		std::getline(ls, rest);
		try {
			GaussDiagram d = GaussDiagram::parse(rest);
			Invariants inv = compute_all(d, n_list);
			if (out_format == "json") {
				json doc = compute_doc(d, inv, n_list);
				doc["name"] = rec_name;
				rows.push_back(doc);
			} else {
				std::vector<std::string> fields = {rec_name, d.serialize(), inv.f.canonical(),
				                                   inv.ft.canonical('t')};
				for (long long n : n_list) fields.push_back(inv.z.at(n).canonical('t'));
				for (long long n : n_list) fields.push_back(inv.fn.at(n).canonical());
				for (std::size_t i = 0; i < fields.size(); ++i) csv << (i ? "," : "") << csv_quote(fields[i]);
				csv << '\n';
			}
		} catch (const std::exception& e) {
			std::cerr << "line " << lineno << ": " << e.what() << '\n';
			bad_lines = true;
		}
	}
	if (out_format == "json")
		std::cout << rows.dump(2) << '\n';
	else
		std::cout << csv.str();
	return bad_lines ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
	try {
		return run(argc, argv);
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
}
