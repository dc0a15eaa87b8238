#include "berezin/cli.hpp"
#include "berezin/errors.hpp"
#include "berezin/geometry.hpp"
#include "berezin/json_io.hpp"
#include "berezin/parser.hpp"
#include "berezin/quantization.hpp"
#include "berezin/sl2.hpp"
#include "berezin/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace berezin;

namespace {

py::object to_py(const json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

QuantParams params(int n, const std::optional<std::string> &lambda)
{
	QuantParams p;
	p.n = n;
	if (lambda)
		p.lambda = parse_rat(*lambda);
	return p;
}

py::dict sl2_values(const sl2::SymbolValues &v)
{
	py::dict d;
	d["definition"] = sl2::to_text(v.definition);
	d["trace_form"] = sl2::to_text(v.trace_form);
	d["uv_form"] = sl2::to_text(v.uv_form);
	d["exact"] = v.all_exact();
	d["agree"] = v.agree();
	return d;
}

using Sl2Fn = sl2::SymbolValues (*)(const sl2::Elem &, const sl2::Params &, const sl2::Point &);

py::dict sl2_call(Sl2Fn f, const std::array<std::string, 4> &g, const std::string &sigma, int eps,
                  const std::string &xi, const std::string &eta)
{
	sl2::Elem e(parse_rat(g[0]), parse_rat(g[1]), parse_rat(g[2]), parse_rat(g[3]));
	return sl2_values(f(e, sl2::Params(parse_rat(sigma), eps), sl2::Point(parse_rat(xi), parse_rat(eta))));
}

} // namespace

PYBIND11_MODULE(_berezin, m)
{
	m.doc() = "Exact covariant symbols, star products and Berezin transforms on SL(n,R)/GL(n-1,R)";

	py::register_exception<Error>(m, "BerezinError", PyExc_ValueError);

	m.def(
	    "covariant_symbol",
	    [](int n, const std::string &word, std::optional<std::string> lambda) {
		    return covariant_symbol(parse_env(n, word), params(n, lambda)).to_text();
	    },
	    py::arg("n"), py::arg("word"), py::arg("lam") = py::none());
	m.def(
	    "covariant_symbol_json",
	    [](int n, const std::string &word, std::optional<std::string> lambda) {
		    return to_py(to_json(covariant_symbol(parse_env(n, word), params(n, lambda))));
	    },
	    py::arg("n"), py::arg("word"), py::arg("lam") = py::none());
	m.def(
	    "star",
	    [](int n, const std::string &w1, const std::string &w2, std::optional<std::string> lambda) {
		    return star(parse_env(n, w1), parse_env(n, w2), params(n, lambda)).to_text();
	    },
	    py::arg("n"), py::arg("w1"), py::arg("w2"), py::arg("lam") = py::none());
	m.def(
	    "berezin_transform",
	    [](int n, const std::string &poly, int max_terms) {
		    return berezin_transform(parse_symbol(n, poly), max_terms).to_text();
	    },
	    py::arg("n"), py::arg("poly"), py::arg("max_terms") = 64);
	m.def(
	    "berezin_eigenvalue", [](int n, int m) { return berezin_eigenvalue(m, n).to_string(); }, py::arg("n"),
	    py::arg("m"));
	m.def(
	    "canonical_text", [](int n, const std::string &text) { return parse_symbol(n, text).to_text(); },
	    py::arg("n"), py::arg("text"));
	m.def(
	    "symbol_json", [](int n, const std::string &text) { return to_py(to_json(parse_symbol(n, text))); },
	    py::arg("n"), py::arg("text"));
	m.def(
	    "laplace", [](int n, const std::string &f) { return laplace_beltrami(parse_symbol(n, f)).to_text(); },
	    py::arg("n"), py::arg("f"));
	m.def(
	    "poisson",
	    [](int n, const std::string &f, const std::string &g) {
		    return poisson(parse_symbol(n, f), parse_symbol(n, g)).to_text();
	    },
	    py::arg("n"), py::arg("f"), py::arg("g"));

	m.def(
	    "sl2_covariant",
	    [](const std::array<std::string, 4> &g, const std::string &sigma, int eps, const std::string &xi,
	       const std::string &eta) { return sl2_call(&sl2::covariant_symbol, g, sigma, eps, xi, eta); },
	    py::arg("g"), py::arg("sigma"), py::arg("eps") = 0, py::arg("xi"), py::arg("eta"));
	m.def(
	    "sl2_contravariant",
	    [](const std::array<std::string, 4> &g, const std::string &sigma, int eps, const std::string &xi,
	       const std::string &eta) { return sl2_call(&sl2::contravariant_symbol, g, sigma, eps, xi, eta); },
	    py::arg("g"), py::arg("sigma"), py::arg("eps") = 0, py::arg("xi"), py::arg("eta"));

	m.def(
	    "verify",
	    [](const std::string &suite, std::uint64_t seed) { return to_py(verify::to_json(verify::run_suite(suite, seed))); },
	    py::arg("suite") = "all", py::arg("seed") = 0);
	m.def(
	    "run_cli",
	    [](const std::vector<std::string> &args) {
		    std::ostringstream out, err;
		    int code = cli::run(args, out, err);
		    return py::make_tuple(code, out.str(), err.str());
	    },
	    py::arg("args"));
}
