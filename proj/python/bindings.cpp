// Python bindings. Exact values cross the boundary as fractions.Fraction;
// λ-polynomials as lists of Fraction, constant term first.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dhh/identities.hpp"
#include "dhh/numbers.hpp"
#include "dhh/serialize.hpp"
#include "dhh/series.hpp"
#include "dhh/zeta.hpp"

namespace py = pybind11;
using namespace dhh;

namespace {

py::object fraction(const Rational& x) {
  // Leaked so that no Python object is released after interpreter shutdown.
  static const auto* cls = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*cls)(py::str(x.to_string()));
}

py::list fractions(const LambdaPoly& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(fraction(c));
  return out;
}

Rational rational(const py::handle& x) {
  if (py::isinstance<py::str>(x)) return Rational::parse(x.cast<std::string>());
  if (py::isinstance<py::int_>(x)) return Rational::parse(py::str(x).cast<std::string>());
  const py::object num = x.attr("numerator");
  const py::object den = x.attr("denominator");
  return Rational(BigInt(py::str(num).cast<std::string>()), BigInt(py::str(den).cast<std::string>()));
}

py::object from_json(const Json& j) {
  static const auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

template <typename Enum>
Enum route_named(const std::string& name, std::initializer_list<Enum> all) {
  for (Enum e : all)
    if (to_string(e) == name) return e;
  throw PreconditionError("unknown route " + name);
}

IndexRange index_range(const std::pair<long, long>& p) { return {p.first, p.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact degenerate harmonic and hyperharmonic numbers";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
  py::register_exception<InternalConsistencyError>(m, "InternalConsistencyError", PyExc_RuntimeError);

  m.def("harmonic", [](long n) { return fraction(harmonic(n)); }, py::arg("n"));

  m.def(
      "degen_harmonic",
      [](long n, const py::object& lam) -> py::object {
        if (lam.is_none()) return fractions(degen_harmonic(n));
        return fraction(degen_harmonic(n, rational(lam)));
      },
      py::arg("n"), py::arg("lam") = py::none());

  m.def(
      "hyperharmonic",
      [](long n, long r, const std::string& route) {
        return fraction(hyperharmonic(n, r, route_named(route, {HyperRoute::recurrence, HyperRoute::closed})));
      },
      py::arg("n"), py::arg("r"), py::arg("route") = "recurrence");

  m.def(
      "degen_hyperharmonic",
      [](long n, long r, const py::object& lam, const std::string& route) -> py::object {
        const LambdaPoly p = degen_hyperharmonic(
            n, r,
            route_named(route, {DegenRoute::recurrence, DegenRoute::generating_function, DegenRoute::closed}));
        if (lam.is_none()) return fractions(p);
        return fraction(p(rational(lam)));
      },
      py::arg("n"), py::arg("r"), py::arg("lam") = py::none(), py::arg("route") = "recurrence");

  m.def("degen_hyperharmonic_order0", [](long k) { return fractions(degen_hyperharmonic_order0(k)); },
        py::arg("k"));

  m.def("stirling1", [](long n, long k) { return py::int_(py::str(stirling1(n, k).get_str())); },
        py::arg("n"), py::arg("k"));

  m.def(
      "q_poly",
      [](long n, long r, const std::string& route) {
        return fractions(q_poly({n, r}, route_named(route, {QRoute::product, QRoute::closed, QRoute::stirling})));
      },
      py::arg("n"), py::arg("r"), py::arg("route") = "closed");

  m.def(
      "degen_hyper_gf",
      [](long r, long order, const py::object& lam) {
        py::list out;
        if (lam.is_none()) {
          const auto gf = degen_hyper_gf<LambdaPoly>(r, order, LambdaPoly::lambda());
          for (const auto& c : gf.coefficients()) out.append(fractions(c));
        } else {
          const auto gf = degen_hyper_gf<Rational>(r, order, rational(lam));
          for (const auto& c : gf.coefficients()) out.append(fraction(c));
        }
        return out;
      },
      py::arg("r"), py::arg("order"), py::arg("lam") = py::none());

  m.def(
      "zeta_partial",
      [](long mm, const py::object& delta, const py::object& lam, long terms, long digits) {
        ZetaQuery q;
        q.m = mm;
        q.delta = rational(delta);
        q.lambda = rational(lam);
        q.terms = terms;
        q.digits = digits;
        q.validate();
        return from_json(to_json(zeta_partial(q), digits));
      },
      py::arg("m") = 2, py::arg("delta") = 1, py::arg("lam") = 0, py::arg("terms") = 100,
      py::arg("digits") = 10);

  m.def(
      "zeta_degen_partial",
      [](long mm, const py::object& lam, long terms) {
        const ZetaPartial z = zeta_degen_partial(mm, rational(lam), terms);
        return py::make_tuple(fraction(z.sum), fraction(z.last_term));
      },
      py::arg("m"), py::arg("lam"), py::arg("terms"));

  m.def(
      "section3_report",
      [](long r, long mm, const py::object& lam, long terms) {
        const Section3Report s = section3_report(r, mm, rational(lam), terms);
        py::dict d;
        d["direct"] = fraction(s.direct);
        d["swapped"] = fraction(s.swapped);
        d["zeta_form"] = fraction(s.zeta_form);
        d["swap_holds"] = s.swap_holds();
        d["residual"] = fraction(s.residual());
        return d;
      },
      py::arg("r"), py::arg("m"), py::arg("lam"), py::arg("terms"));

  m.def("render_decimal", [](const py::object& x, long digits) { return render_decimal(rational(x), digits); },
        py::arg("x"), py::arg("digits"));

  m.def("identity_names", &all_identity_names);

  m.def(
      "verify",
      [](const std::string& identity, std::pair<long, long> n, std::pair<long, long> k, std::pair<long, long> r,
         std::pair<long, long> mm, long order, long terms, const std::optional<py::list>& lambdas,
         unsigned workers, const std::optional<std::string>& mutate) {
        VerifyConfig c;
        c.n = index_range(n);
        c.k = index_range(k);
        c.r = index_range(r);
        c.m = index_range(mm);
        c.order = order;
        c.terms = terms;
        c.workers = workers;
        if (lambdas) {
          c.lambdas.clear();
          for (const auto& x : *lambdas) c.lambdas.push_back(rational(x));
        }
        if (mutate) c.perturbation = Perturbation{*mutate, Rational(1)};
        std::vector<VerificationReport> reports;
        {
          py::gil_scoped_release release;
          if (identity == "all") {
            reports = verify_all(c);
          } else {
            reports.push_back(verify_sweep(identity, c));
          }
        }
        return from_json(to_json(reports));
      },
      py::arg("identity") = "all", py::arg("n") = std::pair<long, long>{1, 8},
      py::arg("k") = std::pair<long, long>{1, 8}, py::arg("r") = std::pair<long, long>{1, 5},
      py::arg("m") = std::pair<long, long>{2, 3}, py::arg("order") = 32, py::arg("terms") = 30,
      py::arg("lambdas") = py::none(), py::arg("workers") = 0, py::arg("mutate") = py::none());
}
