#include "berezin/cli.hpp"

#include "berezin/errors.hpp"
#include "berezin/json_io.hpp"
#include "berezin/parser.hpp"
#include "berezin/quantization.hpp"
#include "berezin/series.hpp"
#include "berezin/sl2.hpp"
#include "berezin/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <sstream>

namespace berezin::cli {

namespace {

struct Outcome
{
	json data;
	std::string text;
	int code = Ok;
};

std::vector<Rat> parse_list(const std::string &s)
{
	std::vector<Rat> out;
	std::stringstream ss(s);
	std::string item;
	while (std::getline(ss, item, ','))
	{
		item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
		if (item.empty())
			throw ParseError("empty entry in list '" + s + "'");
		try
		{
			out.push_back(parse_rat(item));
		}
		catch (const std::exception &)
		{
			throw ParseError("not a rational number: '" + item + "'");
		}
	}
	return out;
}

Rat parse_one(const std::string &s)
{
	auto v = parse_list(s);
	if (v.size() != 1)
		throw ParseError("expected one rational number, got '" + s + "'");
	return v[0];
}

PointChart parse_point(int n, const std::string &xi, const std::string &eta)
{
	PointChart p{parse_list(xi), parse_list(eta)};
	auto dim = static_cast<std::size_t>(n - 1);
	if (p.xi.size() != dim || p.eta.size() != dim)
		throw InvalidArgument("xi and eta need " + std::to_string(dim) + " entries each for n = " + std::to_string(n));
	return p;
}

QuantParams qparams(int n, const std::string &lambda)
{
	QuantParams p;
	p.n = n;
	if (!lambda.empty())
		p.lambda = parse_one(lambda);
	return p;
}

Outcome symbol_outcome(const SymbolExpr &f)
{
	Outcome o;
	o.data["n"] = f.n();
	o.data["text"] = f.to_text();
	o.data["symbol"] = to_json(f);
	o.text = f.to_text() + "\n" + to_json(f).dump() + "\n";
	return o;
}

json rat_row(const std::vector<Rat> &v)
{
	json j = json::array();
	for (const auto &r : v)
		j.push_back(to_short_string(r));
	return j;
}

json value_json(const sl2::Value &v)
{
	json j;
	j["value"] = to_string(v.real, 20);
	j["exact"] = v.exact ? json(to_short_string(*v.exact)) : json(nullptr);
	return j;
}

json sl2_json(const sl2::SymbolValues &s)
{
	json j;
	j["definition"] = value_json(s.definition);
	j["trace_form"] = value_json(s.trace_form);
	j["uv_form"] = value_json(s.uv_form);
	j["all_exact"] = s.all_exact();
	j["max_rel_dev"] = to_string(s.max_rel_dev(), 6);
	j["agree"] = s.agree();
	return j;
}

std::string sl2_row(const sl2::Case &c, const std::string &kind, const sl2::SymbolValues &s)
{
	std::ostringstream os;
	os << to_short_string(c.g.alpha) << ' ' << to_short_string(c.g.beta) << ' ' << to_short_string(c.g.gamma) << ' '
	   << to_short_string(c.g.delta) << ',' << to_short_string(c.sp.sigma) << ',' << c.sp.eps << ','
	   << to_short_string(c.p.xi) << ',' << to_short_string(c.p.eta) << ',' << kind << ','
	   << sl2::to_text(s.definition) << ',' << sl2::to_text(s.trace_form) << ',' << sl2::to_text(s.uv_form) << ','
	   << to_string(s.max_rel_dev(), 6);
	return os.str();
}

std::string records_text(const std::vector<verify::CheckRecord> &rs)
{
	std::ostringstream os;
	for (const auto &r : rs)
	{
		os << verify::to_string(r.status) << ' ' << r.check << ' ' << r.params.dump();
		if (!(r.residual.is_number() && r.residual == 0))
			os << " residual=" << (r.residual.is_string() ? r.residual.get<std::string>() : r.residual.dump());
		os << '\n';
	}
	return os.str();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Polynomial quantization on SL(n)/GL(n-1) and SL(2) group quantization", "berezin"};
	app.fallthrough();
	app.require_subcommand(1);
	std::string format = "text";
	app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

	std::function<Outcome()> action;
	int n = 3;
	std::string lambda, word, w1, w2, poly, poly2, xi, eta, sigma, g_text;
	int eps = 0, K = 2, max_terms = 64, count = 200;
	std::uint64_t seed = 1;
	bool of_berezin = false;

	auto add_n = [&](CLI::App *c) { c->add_option("--n", n, "G = SL(n)")->check(CLI::Range(2, 12)); };
	auto add_lambda = [&](CLI::App *c) { c->add_option("--lambda", lambda, "Rational value for lambda (formal when omitted)"); };

	auto *sym = app.add_subcommand("symbol", "Covariant symbols");
	sym->require_subcommand(1);
	auto *sym_cov = sym->add_subcommand("cov", "Covariant symbol of an enveloping-algebra element");
	add_n(sym_cov);
	add_lambda(sym_cov);
	sym_cov->add_option("--word", word, "Word spec, e.g. E_{12}*H_1")->required();
	sym_cov->callback([&] {
		action = [&] {
			auto o = symbol_outcome(covariant_symbol(parse_env(n, word), qparams(n, lambda)));
			o.data["word"] = word;
			return o;
		};
	});

	auto *st = app.add_subcommand("star", "Star product of two words");
	add_n(st);
	add_lambda(st);
	st->add_option("--w1", w1, "Left word")->required();
	st->add_option("--w2", w2, "Right word")->required();
	st->callback([&] {
		action = [&] {
			auto o = symbol_outcome(star(parse_env(n, w1), parse_env(n, w2), qparams(n, lambda)));
			o.data["w1"] = w1;
			o.data["w2"] = w2;
			return o;
		};
	});

	auto *ber = app.add_subcommand("berezin", "Berezin transform by the terminating Laplacian series");
	add_n(ber);
	add_lambda(ber);
	ber->add_option("--poly", poly, "Symbol, infix or JSON")->required();
	ber->add_option("--max-terms", max_terms, "Series cutoff")->check(CLI::Range(1, 1000));
	ber->callback([&] {
		action = [&] {
			SymbolExpr f = berezin_transform(parse_symbol(n, poly), max_terms);
			if (!lambda.empty())
				f = f.specialize(parse_one(lambda));
			return symbol_outcome(f);
		};
	});

	auto *eig = app.add_subcommand("eigenvalue", "Eigenvalue of the Berezin transform on the sigma-eigenspace");
	add_n(eig);
	add_lambda(eig);
	eig->add_option("--sigma", sigma, "Degree sigma; integers give the exact rational function")->required();
	eig->callback([&] {
		action = [&] {
			Outcome o;
			Rat s = parse_one(sigma);
			o.data["n"] = n;
			o.data["sigma"] = to_short_string(s);
			if (is_integer(s) && s >= 0)
			{
				LambdaScalar ev = berezin_eigenvalue(static_cast<int>(to_long(s)), n);
				if (lambda.empty())
				{
					o.data["eigenvalue"] = to_json(ev);
					o.data["text"] = ev.to_string();
					o.text = ev.to_string() + "\n";
					return o;
				}
				Rat v = ev.evaluate(parse_one(lambda));
				o.data["value"] = to_short_string(v);
				o.text = to_short_string(v) + "\n";
				return o;
			}
			if (lambda.empty())
				throw InvalidArgument("non-integer sigma needs --lambda");
			std::string v = to_string(berezin_eigenvalue_real(s, parse_one(lambda), n), 20);
			o.data["value"] = v;
			o.text = v + "\n";
			return o;
		};
	});

	auto *exp = app.add_subcommand("expand", "Expansion in powers of 1/lambda");
	add_n(exp);
	exp->add_option("--poly", poly, "Symbol, infix or JSON")->required();
	exp->add_option("--K", K, "Keep terms up to lambda^-K")->check(CLI::Range(0, 64));
	exp->add_flag("--berezin", of_berezin, "Expand the Berezin transform of the symbol");
	exp->callback([&] {
		action = [&] {
			SymbolExpr f = parse_symbol(n, poly);
			if (of_berezin)
				f = berezin_transform(f);
			auto s = expand_inv_lambda(f, K);
			Outcome o;
			o.data["n"] = n;
			o.data["K"] = K;
			o.data["series"] = to_json(s);
			o.data["text"] = s.to_text();
			o.text = s.to_text() + "\n";
			return o;
		};
	});

	auto *geo = app.add_subcommand("geometry", "Coordinates, Laplacian, Poisson bracket, measure");
	geo->require_subcommand(1);
	auto *g_embed = geo->add_subcommand("embed", "Matrix point of (xi, eta)");
	add_n(g_embed);
	g_embed->add_option("--xi", xi, "Comma-separated rationals")->required();
	g_embed->add_option("--eta", eta, "Comma-separated rationals")->required();
	g_embed->callback([&] {
		action = [&] {
			auto p = parse_point(n, xi, eta);
			auto x = embed(p);
			Outcome o;
			o.data["n"] = n;
			o.data["xi"] = rat_row(p.xi);
			o.data["eta"] = rat_row(p.eta);
			o.data["matrix"] = to_json(x);
			o.text = block_text(x) + "\n";
			return o;
		};
	});
	auto *g_lap = geo->add_subcommand("laplace", "Laplace-Beltrami operator applied to a symbol");
	add_n(g_lap);
	g_lap->add_option("--poly", poly, "Symbol, infix or JSON")->required();
	g_lap->callback([&] { action = [&] { return symbol_outcome(laplace_beltrami(parse_symbol(n, poly))); }; });
	auto *g_poi = geo->add_subcommand("poisson", "Poisson bracket {f, g}");
	add_n(g_poi);
	g_poi->add_option("--f", poly, "First symbol")->required();
	g_poi->add_option("--g", poly2, "Second symbol")->required();
	g_poi->callback([&] { action = [&] { return symbol_outcome(poisson(parse_symbol(n, poly), parse_symbol(n, poly2))); }; });
	auto *g_mea = geo->add_subcommand("measure", "Invariant measure density, symbolic or at a point");
	add_n(g_mea);
	g_mea->add_option("--xi", xi, "Comma-separated rationals");
	g_mea->add_option("--eta", eta, "Comma-separated rationals");
	g_mea->callback([&] {
		action = [&] {
			if (xi.empty() != eta.empty())
				throw InvalidArgument("give both --xi and --eta, or neither");
			if (xi.empty())
				return symbol_outcome(measure_density_symbolic(make_space(n)));
			Rat v = measure_density(parse_point(n, xi, eta));
			Outcome o;
			o.data["n"] = n;
			o.data["value"] = to_short_string(v);
			o.text = to_short_string(v) + "\n";
			return o;
		};
	});

	auto *s2 = app.add_subcommand("sl2", "Group quantization on SL(2)");
	s2->require_subcommand(1);
	auto sl2_point_cmd = [&](const std::string &name, bool covariant) {
		auto *c = s2->add_subcommand(name, covariant ? "Covariant symbol of T(g), three ways" : "Contravariant symbol of T(g), three ways");
		c->add_option("--g", g_text, "alpha,beta,gamma,delta with determinant 1")->required();
		c->add_option("--sigma", sigma, "sigma")->required();
		c->add_option("--eps", eps, "0 or 1")->check(CLI::IsMember({0, 1}));
		c->add_option("--xi", xi, "xi")->required();
		c->add_option("--eta", eta, "eta")->required();
		c->callback([&, covariant] {
			action = [&, covariant] {
				auto gv = parse_list(g_text);
				if (gv.size() != 4)
					throw InvalidArgument("--g needs four entries");
				sl2::Elem g(gv[0], gv[1], gv[2], gv[3]);
				sl2::Params sp(parse_one(sigma), eps);
				sl2::Point p(parse_one(xi), parse_one(eta));
				auto v = covariant ? sl2::covariant_symbol(g, sp, p) : sl2::contravariant_symbol(g, sp, p);
				Outcome o;
				o.data = sl2_json(v);
				o.text = "definition " + sl2::to_text(v.definition) + "\ntrace_form " + sl2::to_text(v.trace_form) +
				         "\nuv_form " + sl2::to_text(v.uv_form) + "\nmax_rel_dev " + to_string(v.max_rel_dev(), 6) + "\n";
				o.code = v.agree() ? Ok : ResidualNonzero;
				return o;
			};
		});
	};
	sl2_point_cmd("cov", true);
	sl2_point_cmd("contra", false);
	auto *s2v = s2->add_subcommand("verify", "Randomized three-way table");
	s2v->add_option("--seed", seed, "Generator seed");
	s2v->add_option("--count", count, "Number of inputs")->check(CLI::Range(1, 100000));
	s2v->callback([&] {
		action = [&] {
			RationalSampler rs(seed);
			Outcome o;
			o.data = json::array();
			o.text = "g,sigma,eps,xi,eta,kind,definition,trace_form,uv_form,max_rel_dev\n";
			bool ok = true;
			for (int k = 0; k < count; ++k)
			{
				auto c = sl2::sample_case(rs);
				auto r = sl2::check_case(c);
				ok = ok && r.ok();
				for (auto [kind, vals] : {std::pair{"cov", &r.cov}, std::pair{"contra", &r.contra}})
				{
					json row = sl2_json(*vals);
					row["g"] = rat_row({c.g.alpha, c.g.beta, c.g.gamma, c.g.delta});
					row["sigma"] = to_short_string(c.sp.sigma);
					row["eps"] = c.sp.eps;
					row["xi"] = to_short_string(c.p.xi);
					row["eta"] = to_short_string(c.p.eta);
					row["kind"] = kind;
					o.data.push_back(row);
					o.text += sl2_row(c, kind, *vals) + "\n";
				}
			}
			o.code = ok ? Ok : ResidualNonzero;
			return o;
		};
	});

	auto *ver = app.add_subcommand("verify", "Verification suites");
	ver->require_subcommand(1);
	for (const char *suite : {"all", "geometry", "repn", "quant", "sl2"})
	{
		auto *c = ver->add_subcommand(suite, std::string("Run the ") + suite + " suite");
		c->add_option("--seed", seed, "Generator seed");
		std::string name = suite;
		c->callback([&, name] {
			action = [&, name] {
				auto rs = verify::run_suite(name, seed);
				Outcome o;
				o.data = verify::to_json(rs);
				o.text = records_text(rs);
				o.code = verify::any_failure(rs) ? ResidualNonzero : Ok;
				return o;
			};
		});
	}

	std::vector<std::string> rev(args.rbegin(), args.rend());
	try
	{
		app.parse(rev);
	}
	catch (const CLI::CallForHelp &e)
	{
		out << app.help();
		return Ok;
	}
	catch (const CLI::CallForAllHelp &e)
	{
		out << app.help("", CLI::AppFormatMode::All);
		return Ok;
	}
	catch (const CLI::ParseError &e)
	{
		err << "error: " << e.what() << "\n";
		return InputError;
	}
	if (!action)
	{
		err << "error: no command given\n";
		return InputError;
	}
	try
	{
		Outcome o = action();
		if (format == "json")
			out << o.data.dump(2) << "\n";
		else
			out << o.text;
		return o.code;
	}
	catch (const Error &e)
	{
		err << "error: " << e.what() << "\n";
		return InputError;
	}
	catch (const std::invalid_argument &e)
	{
		err << "error: " << e.what() << "\n";
		return InputError;
	}
}

} // namespace berezin::cli
