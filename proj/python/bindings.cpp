#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "structura/cli/commands.hpp"
#include "structura/cli/dsl.hpp"
#include "structura/error.hpp"
#include "structura/fincat/adjunctions.hpp"
#include "structura/lawvere/builtins.hpp"
#include "structura/lawvere/lawvere_theory.hpp"
#include "structura/transport/enumerate.hpp"
#include "structura/transport/lifted.hpp"
#include "structura/transport/verify.hpp"

namespace py = pybind11;
using namespace structura;

namespace {

  using Tables = std::vector<std::vector<std::size_t>>;
  using Order  = std::vector<std::pair<std::size_t, std::size_t>>;

  // A builtin theory by name, or a theory declared in `spec`.
  Presentation theory_of(std::string const& name, std::string const& spec) {
    if (spec.empty()) {
      return builtin_presentation(name);
    }
    auto p = dsl::parse_spec(spec).theory(name);
    if (!p) {
      raise(Errc::unknown_symbol, "no theory named '" + name + "'");
    }
    return *p;
  }

  Space space_of(std::size_t points, Order const& order) {
    return Space::from_order(points, order);
  }

  template <class Cat>
  Tables tables_of(StructuredObject<Cat> const& s) {
    Tables out;
    for (auto const& f : s.interpretation) {
      out.push_back(f.image);
    }
    return out;
  }

  template <class Cat>
  StructuredObject<Cat> structure(Cat const& cat, Presentation const& p, typename Cat::Object c, Tables t) {
    return structure_from_algebra(cat, p, c, FinAlgebra(p.signature(), cat.points(c), std::move(t)));
  }

  py::dict report_dict(Report const& r) {
    py::list failures;
    for (auto const& f : r.failures()) {
      failures.append(py::make_tuple(f.subject, f.witness));
    }
    py::dict d;
    d["passed"]   = r.passed();
    d["checked"]  = r.checked();
    d["failures"] = failures;
    d["text"]     = r.str();
    return d;
  }

  py::tuple run(std::vector<std::string> args, std::string const& input) {
    std::ostringstream out, err;
    std::istringstream in(input);
    int                code = cli::run(std::move(args), out, err, in);
    return py::make_tuple(code, out.str(), err.str());
  }

  std::vector<std::string> hom(std::string const& name, std::size_t m, std::size_t n, std::size_t max_size,
                               bool allow_bounded, std::string const& spec) {
    auto const               p = theory_of(name, spec);
    auto const               t = build_lawvere_theory(p, select_oracle(p, allow_bounded));
    std::vector<std::string> out;
    for (auto const& f : t.hom(m, n, max_size)) {
      out.push_back(to_string(f));
    }
    return out;
  }

  std::vector<Tables> enumerate(std::string const& name, std::size_t points, std::optional<Order> order,
                                std::string const& spec) {
    auto const          p = theory_of(name, spec);
    std::vector<Tables> out;
    if (order) {
      for (auto const& s : enumerate_structures(p, space_of(points, *order), FinTop{})) {
        out.push_back(tables_of(s));
      }
    } else {
      for (auto const& s : enumerate_structures(p, points, FinSet{})) {
        out.push_back(tables_of(s));
      }
    }
    return out;
  }

  py::dict validate(std::string const& name, std::size_t points, Tables tables, std::optional<Order> order,
                    std::string const& spec) {
    auto const p = theory_of(name, spec);
    if (order) {
      return report_dict(validate_structure(structure(FinTop{}, p, space_of(points, *order), std::move(tables)), p));
    }
    return report_dict(validate_structure(structure(FinSet{}, p, points, std::move(tables)), p));
  }

  py::dict ascend_beta(std::string const& name, std::size_t points, Order const& order, Tables tables,
                       bool verify, std::string const& spec) {
    auto const p  = theory_of(name, spec);
    auto const l  = lift_adjunction(make_beta_adjunction(), p);
    auto const s  = structure(FinTop{}, p, space_of(points, order), std::move(tables));
    auto const up = ascend(s, l);
    py::dict   d;
    d["points"] = up.structure.carrier.size();
    d["tables"] = tables_of(up.structure);
    d["unit"]   = up.unit.base.image;
    if (verify) {
      d["unique"] = report_dict(verify_unique_ascent(s, l));
    }
    return d;
  }

  py::dict descend_discrete(std::string const& name, std::size_t points, Order const& order, Tables tables,
                            bool verify, std::string const& spec) {
    auto const p    = theory_of(name, spec);
    auto const l    = lift_adjunction(make_discrete_forgetful_adjunction(), p);
    auto const s    = structure(FinTop{}, p, space_of(points, order), std::move(tables));
    auto const down = descend(s, l);
    py::dict   d;
    d["points"] = down.structure.carrier;
    d["tables"] = tables_of(down.structure);
    d["counit"] = down.counit.base.image;
    if (verify) {
      d["unique"] = report_dict(verify_unique_descent(s, l));
    }
    return d;
  }

  py::dict parse(std::string const& text) {
    auto const doc = dsl::parse_spec(text);
    py::list   theories, sets, spaces, structures;
    for (auto const& t : doc.theories) {
      theories.append(t.name);
    }
    for (auto const& s : doc.sets) {
      sets.append(s.name);
    }
    for (auto const& s : doc.spaces) {
      spaces.append(s.name);
    }
    for (auto const& s : doc.structures) {
      structures.append(s.name);
    }
    py::dict d;
    d["theories"]   = theories;
    d["sets"]       = sets;
    d["spaces"]     = spaces;
    d["structures"] = structures;
    d["text"]       = dsl::print_spec(doc);
    return d;
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Transport of finite algebraic structures along adjunctions";

  static py::exception<Error> const error(m, "StructuraError");
  static py::exception<dsl::ParseError> const parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (dsl::ParseError const& e) {
      std::string msg;
      for (auto const& d : e.diagnostics()) {
        msg += (msg.empty() ? "" : "\n") + dsl::to_string(d);
      }
      py::set_error(parse_error, msg.c_str());
    } catch (Error const& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("run", &run, py::arg("args"), py::arg("stdin") = "",
        "Run the command line in process; returns (exit_code, stdout, stderr).");
  m.def("builtin_theories", &builtin_theory_names);
  m.def("parse", &parse, py::arg("text"),
        "Names declared in a document, and the document printed back.");
  m.def("hom", &hom, py::arg("theory"), py::arg("m"), py::arg("n"), py::arg("max_size") = 3,
        py::arg("allow_bounded") = false, py::arg("spec") = "",
        "Normal forms of the morphisms m -> n of the theory, up to a term size.");
  m.def("enumerate", &enumerate, py::arg("theory"), py::arg("points"), py::arg("order") = py::none(),
        py::arg("spec") = "",
        "Tables of every structure on a set, or on a space when an order is given.");
  m.def("validate", &validate, py::arg("theory"), py::arg("points"), py::arg("tables"),
        py::arg("order") = py::none(), py::arg("spec") = "");
  m.def("ascend", &ascend_beta, py::arg("theory"), py::arg("points"), py::arg("order"), py::arg("tables"),
        py::arg("verify") = false, py::arg("spec") = "",
        "Ascent along the unit of the component (Stone-Cech) adjunction.");
  m.def("descend", &descend_discrete, py::arg("theory"), py::arg("points"), py::arg("order"),
        py::arg("tables"), py::arg("verify") = false, py::arg("spec") = "",
        "Descent along the counit of the discrete-forgetful adjunction.");
  m.def("components", [](std::size_t points, Order const& order) {
    return component_index(space_of(points, order));
  });
}
