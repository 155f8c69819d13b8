#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hgc/charsum.hpp"
#include "hgc/common.hpp"
#include "hgc/finite_field.hpp"
#include "hgc/padic.hpp"
#include "hgc/qseries.hpp"
#include "hgc/varieties.hpp"
#include "hgc/verify.hpp"

using namespace hgc;

namespace {

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_cap = 3 };

class UsageError : public std::runtime_error
{
public:
	using std::runtime_error::runtime_error;
};

struct Output
{
	std::string format = "table";
	std::string path;
};

/// A command result: scalar fields plus an optional list of flat rows.
struct Result
{
	Json fields = Json::object();
	Json rows = Json::array();

	Json to_json() const
	{
		Json j = fields;
		if (!rows.empty())
			j["rows"] = rows;
		return j;
	}
};

std::string cell(const Json& v)
{
	if (v.is_string())
		return v.get<std::string>();
	return v.dump();
}

std::string csv_cell(const Json& v)
{
	std::string s = cell(v);
	if (s.find_first_of(",\"\n") == std::string::npos)
		return s;
	std::string out = "\"";
	for (char c : s) {
		if (c == '"')
			out += '"';
		out += c;
	}
	return out + "\"";
}

std::vector<std::string> columns(const Json& rows)
{
	std::vector<std::string> cols;
	for (const auto& row : rows)
		for (const auto& [k, _] : row.items())
			if (std::find(cols.begin(), cols.end(), k) == cols.end())
				cols.push_back(k);
	return cols;
}

std::string render_table(const Result& r)
{
	std::ostringstream os;
	for (const auto& [k, v] : r.fields.items())
		os << k << ": " << cell(v) << "\n";
	if (r.rows.empty())
		return os.str();
	const auto cols = columns(r.rows);
	std::vector<std::size_t> width(cols.size());
	for (std::size_t c = 0; c < cols.size(); ++c) {
		width[c] = cols[c].size();
		for (const auto& row : r.rows)
			if (row.contains(cols[c]))
				width[c] = std::max(width[c], cell(row[cols[c]]).size());
	}
	auto line = [&](auto get) {
		for (std::size_t c = 0; c < cols.size(); ++c) {
			const std::string s = get(c);
			os << s << std::string(width[c] - s.size(), ' ') << (c + 1 < cols.size() ? "  " : "\n");
		}
	};
	line([&](std::size_t c) { return cols[c]; });
	line([&](std::size_t c) { return std::string(width[c], '-'); });
	for (const auto& row : r.rows)
		line([&](std::size_t c) { return row.contains(cols[c]) ? cell(row[cols[c]]) : std::string(); });
	return os.str();
}

std::string render_csv(const Result& r)
{
	std::ostringstream os;
	Json rows = r.rows;
	if (rows.empty())
		rows.push_back(r.fields);
	const auto cols = columns(rows);
	for (std::size_t c = 0; c < cols.size(); ++c)
		os << csv_cell(cols[c]) << (c + 1 < cols.size() ? "," : "\n");
	for (const auto& row : rows)
		for (std::size_t c = 0; c < cols.size(); ++c)
			os << (row.contains(cols[c]) ? csv_cell(row[cols[c]]) : "") << (c + 1 < cols.size() ? "," : "\n");
	return os.str();
}

void emit(const Result& r, const Output& out)
{
	std::string text;
	if (out.format == "json")
		text = r.to_json().dump(2) + "\n";
	else if (out.format == "csv")
		text = render_csv(r);
	else
		text = render_table(r);
	if (out.path.empty()) {
		std::cout << text;
		return;
	}
	std::ofstream f(out.path, std::ios::binary);
	if (!f)
		throw std::runtime_error("cannot open " + out.path);
	f << text;
	if (out.format != "json")
		std::cout << text;
}

// ---- argument parsing helpers ----

std::vector<std::string> split(const std::string& s, char sep)
{
	std::vector<std::string> out;
	std::string cur;
	std::istringstream is(s);
	while (std::getline(is, cur, sep))
		if (!cur.empty())
			out.push_back(cur);
	return out;
}

std::uint64_t to_u64(const std::string& s)
{
	std::size_t pos = 0;
	const auto v = std::stoull(s, &pos);
	if (pos != s.size())
		throw UsageError("not an integer: " + s);
	return v;
}

/// "a..b" or a comma list of integers.
std::vector<std::uint64_t> parse_primes(const std::string& spec)
{
	const auto dots = spec.find("..");
	if (dots != std::string::npos) {
		const auto lo = to_u64(spec.substr(0, dots)), hi = to_u64(spec.substr(dots + 2));
		if (lo > hi)
			throw UsageError("empty prime range " + spec);
		return primes_in_range(lo, hi);
	}
	std::vector<std::uint64_t> out;
	for (const auto& t : split(spec, ','))
		out.push_back(to_u64(t));
	return out;
}

FieldPtr make_field(std::uint64_t p, unsigned e, std::uint64_t q)
{
	if (q != 0) {
		const auto [pp, ee] = prime_power(q);
		if (pp == 0)
			throw UsageError(std::to_string(q) + " is not a prime power");
		return FieldCtx::create(pp, ee);
	}
	if (p == 0)
		throw UsageError("give --q, or --p (with optional --e)");
	if (!is_prime(p))
		throw UsageError(std::to_string(p) + " is not prime");
	return FieldCtx::create(p, e);
}

/// Character tokens: "n" (order n), "n:j" (j-th power of the order-n character), "@k" (exponent k), "eps".
Character parse_character(const FieldPtr& ctx, const std::string& tok)
{
	if (tok == "eps" || tok == "e")
		return trivial_character(ctx);
	if (!tok.empty() && tok[0] == '@')
		return Character{ctx, mod_floor(std::stoll(tok.substr(1)), ctx->order())};
	const auto colon = tok.find(':');
	const std::uint64_t n = to_u64(tok.substr(0, colon));
	const std::int64_t j = colon == std::string::npos ? 1 : std::stoll(tok.substr(colon + 1));
	if (n == 0 || ctx->order() % n != 0)
		throw UsageError("no character of order " + std::to_string(n) + " on F_" + std::to_string(ctx->q()));
	return character_of_order(ctx, n, 1).pow(j);
}

std::vector<Character> parse_characters(const FieldPtr& ctx, const std::string& list)
{
	std::vector<Character> out;
	for (const auto& t : split(list, ','))
		out.push_back(parse_character(ctx, t));
	return out;
}

/// Field elements: an integer (reduced into the prime field) or "#k" for the raw encoding k.
FieldCtx::Elem parse_element(const FieldPtr& ctx, const std::string& tok)
{
	if (!tok.empty() && tok[0] == '#') {
		const auto k = to_u64(tok.substr(1));
		if (k >= ctx->q())
			throw UsageError("encoding out of range: " + tok);
		return static_cast<FieldCtx::Elem>(k);
	}
	return ctx->from_int(std::stoll(tok));
}

std::vector<Rat> parse_rationals(const std::string& list)
{
	std::vector<Rat> out;
	for (const auto& t : split(list, ','))
		out.push_back(parse_rational(t));
	return out;
}

Json field_json(const FieldPtr& ctx)
{
	return Json{{"p", ctx->p()}, {"e", ctx->e()}, {"q", ctx->q()}};
}

Json character_json(const Character& c)
{
	return Json{{"k", c.k}, {"order", c.order()}, {"chi(-1)", c.at_minus_one()}};
}

std::string invocation(int argc, char** argv)
{
	std::string s;
	for (int i = 0; i < argc; ++i) {
		const std::string a = argv[i];
		// Parallelism and the output path do not change the report.
		if (a == "--jobs" || a == "--out") {
			++i;
			continue;
		}
		if (a.rfind("--jobs=", 0) == 0 || a.rfind("--out=", 0) == 0)
			continue;
		if (!s.empty())
			s += ' ';
		s += i == 0 ? std::string("hgc") : a;
	}
	return s;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Finite-field hypergeometric functions, p-adic supercongruences and point counts"};
	app.require_subcommand(1);
	Output out;
	auto add_output = [&out](CLI::App* sub) {
		sub->add_option("--format", out.format, "table, json or csv")
			->check(CLI::IsMember({"table", "json", "csv"}))
			->capture_default_str();
		sub->add_option("--out", out.path, "also write the report to this file");
	};

	std::uint64_t p = 0, q = 0;
	unsigned e = 1;
	auto add_field = [&](CLI::App* sub) {
		sub->add_option("--p", p, "characteristic");
		sub->add_option("--e", e, "extension degree")->capture_default_str();
		sub->add_option("--q", q, "field size (overrides --p/--e)");
	};

	// field
	auto* field_cmd = app.add_subcommand("field", "field parameters, modulus and generator");
	add_field(field_cmd);
	add_output(field_cmd);

	// char
	std::string char_tok = "2";
	std::size_t char_limit = 16;
	auto* char_cmd = app.add_subcommand("char", "a multiplicative character and its values");
	add_field(char_cmd);
	char_cmd->add_option("--char", char_tok, "n, n:j, @k or eps")->capture_default_str();
	char_cmd->add_option("--limit", char_limit, "number of values listed")->capture_default_str();
	add_output(char_cmd);

	// jacobi
	std::string orders;
	auto* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi sum J(A, B)");
	add_field(jacobi_cmd);
	jacobi_cmd->add_option("--orders,--chars", orders, "two character tokens, e.g. 3,3 or 4:3,2")->required();
	add_output(jacobi_cmd);

	// gauss
	std::string gauss_tok;
	auto* gauss_cmd = app.add_subcommand("gauss", "Gauss sum g(chi)");
	add_field(gauss_cmd);
	gauss_cmd->add_option("--char", gauss_tok, "character token")->required();
	add_output(gauss_cmd);

	// ghf / starred
	std::string upper_tok, lower_tok, x_tok;
	auto add_hgf = [&](CLI::App* sub) {
		add_field(sub);
		sub->add_option("--upper", upper_tok, "upper characters, comma separated")->required();
		sub->add_option("--lower", lower_tok, "lower characters, comma separated")->required();
		sub->add_option("--x", x_tok, "argument; all of F_q when omitted");
		add_output(sub);
	};
	auto* ghf_cmd = app.add_subcommand("ghf", "Greene's hypergeometric function");
	add_hgf(ghf_cmd);
	auto* starred_cmd = app.add_subcommand("starred", "McCarthy's normalized function");
	add_hgf(starred_cmd);

	// gammap
	std::string rat_tok;
	unsigned prec = 2;
	auto* gammap_cmd = app.add_subcommand("gammap", "Morita's p-adic Gamma function");
	gammap_cmd->add_option("--p", p, "prime")->required();
	gammap_cmd->add_option("--r", prec, "precision")->capture_default_str();
	gammap_cmd->add_option("--x", rat_tok, "rational argument")->required();
	add_output(gammap_cmd);

	// trunc
	std::string up_rats, lo_rats, z_tok = "1", scale_tok = "1";
	std::uint64_t last = 0, start = 0;
	bool exact = false;
	auto* trunc_cmd = app.add_subcommand("trunc", "truncated hypergeometric series");
	trunc_cmd->add_option("--p", p, "prime")->required();
	trunc_cmd->add_option("--r", prec, "precision")->capture_default_str();
	trunc_cmd->add_option("--upper", up_rats, "upper rationals")->required();
	trunc_cmd->add_option("--lower", lo_rats, "lower rationals (the 1/k! is implicit)")->required();
	trunc_cmd->add_option("--z", z_tok, "argument")->capture_default_str();
	trunc_cmd->add_option("--m", last, "last index; p-1 when omitted");
	trunc_cmd->add_option("--start", start, "first index")->capture_default_str();
	trunc_cmd->add_option("--scale", scale_tok, "factor applied to every term")->capture_default_str();
	trunc_cmd->add_flag("--exact", exact, "also print the exact rational value");
	add_output(trunc_cmd);

	// dwork
	unsigned s_level = 2;
	auto* dwork_cmd = app.add_subcommand("dwork", "ratio F_{p^s-1}/F_{p^{s-1}-1}");
	dwork_cmd->add_option("--p", p, "prime")->required();
	dwork_cmd->add_option("--s", s_level, "level")->capture_default_str();
	dwork_cmd->add_option("--r", prec, "precision")->capture_default_str();
	dwork_cmd->add_option("--upper", up_rats, "upper rationals")->required();
	dwork_cmd->add_option("--lower", lo_rats, "lower rationals")->required();
	dwork_cmd->add_option("--z", z_tok, "argument")->capture_default_str();
	add_output(dwork_cmd);

	// count
	unsigned n = 2;
	std::string lambda_tok, route = "both";
	std::uint64_t max_points = BruteOptions{}.max_points;
	unsigned threads = 1;
	auto* count_cmd = app.add_subcommand("count", "points on y^n = (x_1...x_{n-1})^{n-1} prod(1-x_i) (x_1 - lambda x_2...x_{n-1})");
	add_field(count_cmd);
	count_cmd->add_option("--n", n, "degree")->capture_default_str();
	count_cmd->add_option("--lambda", lambda_tok, "lambda; all of F_q when omitted");
	count_cmd->add_option("--route", route, "brute, hgf or both")
		->check(CLI::IsMember({"brute", "hgf", "both"}))
		->capture_default_str();
	count_cmd->add_option("--max-points", max_points, "cap on enumerated tuples")->capture_default_str();
	count_cmd->add_option("--threads", threads, "brute-force threads")->capture_default_str();
	add_output(count_cmd);

	// zeta
	unsigned s_max = 2;
	bool zeta_brute = false;
	auto* zeta_cmd = app.add_subcommand("zeta", "zeta function factors and N_s for n = 3, 4 at lambda = 1");
	zeta_cmd->add_option("--p", p, "prime")->required();
	zeta_cmd->add_option("--n", n, "3 or 4")->required();
	zeta_cmd->add_option("--s", s_max, "largest s listed")->capture_default_str();
	zeta_cmd->add_flag("--brute", zeta_brute, "compare against brute-force counts");
	zeta_cmd->add_option("--max-points", max_points, "cap on enumerated tuples")->capture_default_str();
	add_output(zeta_cmd);

	// eta
	std::size_t eta_n = 20;
	auto* eta_cmd = app.add_subcommand("eta", "coefficients of q prod (1-q^{2m})^4 (1-q^{4m})^4");
	eta_cmd->add_option("--n", eta_n, "last coefficient")->capture_default_str();
	add_output(eta_cmd);

	// psi
	auto* psi_cmd = app.add_subcommand("psi", "the Hecke character psi at the prime above p");
	psi_cmd->add_option("--p", p, "prime, 1 mod 4")->required();
	add_output(psi_cmd);

	// verify / sweep
	std::vector<std::string> ids;
	std::string primes_tok, qs_tok, params_tok;
	unsigned jobs = 1;
	bool timings = false, proven_only = false, list_checks = false;
	auto add_sweep = [&](CLI::App* sub) {
		sub->add_option("--primes", primes_tok, "prime range a..b or a comma list");
		sub->add_option("--q", qs_tok, "extra field sizes, comma separated");
		sub->add_option("--jobs", jobs, "worker threads")->capture_default_str();
		sub->add_flag("--timings", timings, "record runtimes (makes the report non-reproducible)");
		add_output(sub);
	};
	auto* verify_cmd = app.add_subcommand("verify", "run named checks");
	verify_cmd->add_option("--id", ids, "check id (repeatable or comma separated)")->delimiter(',');
	verify_cmd->add_option("--params", params_tok, "JSON parameter object replacing the registry variants");
	verify_cmd->add_flag("--list", list_checks, "list the registry");
	add_sweep(verify_cmd);
	auto* sweep_cmd = app.add_subcommand("sweep", "run many checks over a prime range");
	sweep_cmd->add_option("--ids", ids, "check ids; all when omitted")->delimiter(',');
	sweep_cmd->add_flag("--proven-only", proven_only, "skip conjectural entries");
	add_sweep(sweep_cmd);

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return exit_usage;
	}

	try {
		Result res;
		int code = exit_ok;
		if (field_cmd->parsed()) {
			const auto ctx = make_field(p, e, q);
			res.fields = field_json(ctx);
			Json modulus = Json::array();
			for (auto c : ctx->modulus())
				modulus.push_back(c);
			res.fields["modulus"] = modulus;
			res.fields["generator"] = ctx->generator();
		} else if (char_cmd->parsed()) {
			const auto ctx = make_field(p, e, q);
			const Character c = parse_character(ctx, char_tok);
			res.fields = field_json(ctx);
			res.fields.update(character_json(c));
			for (std::uint64_t x = 1; x < ctx->q() && x <= char_limit; ++x) {
				const auto xe = static_cast<FieldCtx::Elem>(x);
				res.rows.push_back({{"x", x}, {"dlog", ctx->dlog(xe)}, {"exponent of zeta_{q-1}", c.exponent_at(xe)}});
			}
		} else if (jacobi_cmd->parsed()) {
			const auto ctx = make_field(p, e, q);
			const auto chars = parse_characters(ctx, orders);
			if (chars.size() != 2)
				throw UsageError("--orders needs two characters");
			const CycInt j = jacobi_sum(chars[0], chars[1]);
			res.fields = field_json(ctx);
			res.fields["A"] = character_json(chars[0]);
			res.fields["B"] = character_json(chars[1]);
			res.fields["J"] = to_json(j);
			res.fields["|J|^2"] = to_json(*(j * j.bar()).to_integer());
		} else if (gauss_cmd->parsed()) {
			const auto ctx = make_field(p, e, q);
			const Character c = parse_character(ctx, gauss_tok);
			const CycInt g = gauss_sum(c);
			res.fields = field_json(ctx);
			res.fields["chi"] = character_json(c);
			res.fields["g"] = to_json(g);
			res.fields["|g|^2"] = to_json(*(g * g.bar()).to_integer());
		} else if (ghf_cmd->parsed() || starred_cmd->parsed()) {
			const bool starred = starred_cmd->parsed();
			const auto ctx = make_field(p, e, q);
			const auto up = parse_characters(ctx, upper_tok);
			const auto lo = parse_characters(ctx, lower_tok);
			if (up.size() != lo.size() + 1)
				throw UsageError("need one more upper character than lower");
			res.fields = field_json(ctx);
			res.fields["function"] = starred ? "starred" : "greene";
			if (!x_tok.empty()) {
				const auto x = parse_element(ctx, x_tok);
				const CycRat v = starred ? mccarthy_starred(up, lo, x) : greene_hgf(up, lo, x);
				res.rows.push_back({{"x", x}, {"value", to_json(v)}});
			} else {
				const auto table = starred ? mccarthy_starred_table(up, lo) : greene_hgf_table(up, lo);
				for (std::uint64_t x = 0; x < table.size(); ++x)
					res.rows.push_back({{"x", x}, {"value", to_json(table[x])}});
			}
		} else if (gammap_cmd->parsed()) {
			const Rat x = parse_rational(rat_tok);
			res.fields = {{"x", to_string(x)}, {"value", to_json(gamma_p(x, p, prec))}};
		} else if (trunc_cmd->parsed()) {
			HgsParams h;
			h.upper = parse_rationals(up_rats);
			h.lower = parse_rationals(lo_rats);
			h.argument = parse_rational(z_tok);
			h.truncation = trunc_cmd->count("--m") ? last : p - 1;
			h.start = start;
			h.scale = parse_rational(scale_tok);
			res.fields = {{"p", p}, {"last", h.truncation}, {"start", start}, {"value", to_json(trunc_hgs_eval(h, p, prec))}};
			if (exact)
				res.fields["exact"] = to_string(trunc_hgs_exact(h));
		} else if (dwork_cmd->parsed()) {
			const PadicInt v =
				dwork_ratio(parse_rationals(up_rats), parse_rationals(lo_rats), parse_rational(z_tok), p, s_level, prec);
			res.fields = {{"p", p}, {"s", s_level}, {"value", to_json(v)}};
		} else if (count_cmd->parsed()) {
			const auto ctx = make_field(p, e, q);
			if (ctx->order() % n != 0)
				throw UsageError("n must divide q - 1");
			BruteOptions opt;
			opt.max_points = max_points;
			opt.threads = threads;
			res.fields = field_json(ctx);
			res.fields["n"] = n;
			std::vector<FieldCtx::Elem> lambdas;
			if (lambda_tok.empty())
				for (std::uint64_t l = 0; l < ctx->q(); ++l)
					lambdas.push_back(static_cast<FieldCtx::Elem>(l));
			else
				lambdas.push_back(parse_element(ctx, lambda_tok));
			std::vector<CountResult> formula;
			if (route != "brute")
				formula = count_via_hgf_all(ctx, n);
			bool agree = true;
			for (auto l : lambdas) {
				Json row = {{"lambda", l}};
				std::optional<Int> a, b;
				if (route != "hgf") {
					a = count_affine_brute(ctx, n, l, opt).count_with_infinity();
					row["brute"] = to_json(*a);
				}
				if (route != "brute") {
					b = formula[l].count_with_infinity();
					row["hgf"] = to_json(*b);
				}
				if (a && b) {
					row["equal"] = *a == *b;
					agree = agree && *a == *b;
				}
				res.rows.push_back(row);
			}
			if (route == "both")
				res.fields["all_equal"] = agree;
		} else if (zeta_cmd->parsed()) {
			const ZetaSpec z = zeta_build(p, n);
			res.fields = {{"p", p}, {"n", n}, {"jacobi", to_json(z.jacobi)}};
			if (n == 4)
				res.fields["a(p)"] = to_json(z.ap);
			Json factors = Json::array();
			for (std::size_t i = 0; i < z.factors.size(); ++i) {
				const auto& f = z.factors[i];
				Json fj = {{"label", f.label}, {"c1", to_json(f.c1)}, {"c2", to_json(f.c2)},
					{"position", f.numerator ? "numerator" : "denominator"}};
				if (n == 4)
					fj["part"] = std::find(z.old_part.begin(), z.old_part.end(), i) != z.old_part.end() ? "old" : "new";
				factors.push_back(fj);
			}
			res.fields["factors"] = factors;
			for (unsigned s = 1; s <= s_max; ++s) {
				Json row = {{"s", s}, {"N_s", to_json(z.count(s))}};
				if (zeta_brute) {
					const auto ext = FieldCtx::create(p, s);
					BruteOptions opt;
					opt.max_points = max_points;
					const CountResult c = count_affine_brute(ext, n, ext->from_int(1), opt);
					row["1+affine"] = to_json(c.count_with_infinity());
					row["affine"] = to_json(c.affine_count);
				}
				res.rows.push_back(row);
			}
		} else if (eta_cmd->parsed()) {
			const auto a = eta_product_coeffs(eta_n);
			for (std::size_t i = 1; i < a.size(); ++i)
				res.rows.push_back({{"n", i}, {"a(n)", to_json(a[i])}});
		} else if (psi_cmd->parsed()) {
			const HeckePsi h = hecke_psi(p);
			auto g = [](const GaussianInt& z) { return Json::array({to_json(z.re), to_json(z.im)}); };
			res.fields = {{"p", p}, {"alpha", g(h.alpha)}, {"chi1", g(h.chi1)}, {"psi", g(h.psi)},
				{"minus_jacobi", g(h.minus_jacobi)}, {"consistent", h.psi == h.minus_jacobi},
				{"normalization", h.normalization}};
		} else if (verify_cmd->parsed() && list_checks) {
			for (const auto& info : check_registry())
				res.rows.push_back({{"id", info.id}, {"status", info.proven ? "proven" : "report-only"},
					{"guard", info.guard}, {"modulus", info.modulus}, {"variants", info.variants.size()},
					{"summary", info.summary}});
		} else {
			std::vector<std::uint64_t> qs;
			if (!primes_tok.empty())
				qs = parse_primes(primes_tok);
			for (const auto& t : split(qs_tok, ','))
				qs.push_back(to_u64(t));
			ids.erase(std::remove(ids.begin(), ids.end(), std::string()), ids.end());
			if (verify_cmd->parsed() && ids.empty())
				throw UsageError("verify needs --id");
			if (sweep_cmd->parsed() && ids.empty() && !sweep_cmd->count("--ids"))
				for (const auto& info : check_registry())
					if (info.proven || !proven_only)
						ids.push_back(info.id);
			if (qs.empty() && !ids.empty())
				throw UsageError("give --primes or --q");
			for (const auto& id : ids)
				find_check(id);
			std::vector<CheckReport> reports;
			if (!params_tok.empty()) {
				const Json params = Json::parse(params_tok);
				for (const auto& id : ids)
					for (auto qq : qs)
						reports.push_back(run_check(id, qq, params));
				if (!timings)
					for (auto& r : reports)
						r.millis.reset();
			} else {
				reports = sweep(ids, qs, SweepOptions{jobs, timings});
			}
			const Json report = sweep_to_json(reports, invocation(argc, argv), timings);
			res.fields = {{"invocation", report["invocation"]}, {"summary", report["summary"]}};
			for (const auto& r : reports) {
				Json row = {{"check", r.check}, {"q", r.q}, {"params", r.params.dump()}, {"modulus", r.modulus},
					{"status", to_string(r.status)}};
				if (timings && r.millis)
					row["millis"] = *r.millis;
				res.rows.push_back(row);
			}
			code = has_proven_failure(reports) ? exit_check_failed : exit_ok;
			if (out.format == "json") {
				const std::string text = report.dump(2) + "\n";
				if (out.path.empty()) {
					std::cout << text;
				} else {
					std::ofstream f(out.path, std::ios::binary);
					if (!f)
						throw std::runtime_error("cannot open " + out.path);
					f << text;
				}
				return code;
			}
		}
		emit(res, out);
		return code;
	} catch (const ResourceCapError& ex) {
		std::cerr << "resource cap: " << ex.what() << "\n";
		return exit_cap;
	} catch (const UsageError& ex) {
		std::cerr << "usage: " << ex.what() << "\n";
		return exit_usage;
	} catch (const std::invalid_argument& ex) {
		std::cerr << "invalid argument: " << ex.what() << "\n";
		return exit_usage;
	} catch (const std::out_of_range& ex) {
		std::cerr << "out of range: " << ex.what() << "\n";
		return exit_usage;
	} catch (const Json::exception& ex) {
		std::cerr << "bad JSON: " << ex.what() << "\n";
		return exit_usage;
	} catch (const std::domain_error& ex) {
		std::cerr << "error: " << ex.what() << "\n";
		return exit_usage;
	}
}
