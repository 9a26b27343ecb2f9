#include "structura/cli/commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "structura/cli/dsl.hpp"
#include "structura/error.hpp"
#include "structura/fincat/adjunctions.hpp"
#include "structura/lawvere/builtins.hpp"
#include "structura/lawvere/lawvere_theory.hpp"
#include "structura/transport/enumerate.hpp"
#include "structura/transport/lifted.hpp"
#include "structura/transport/verify.hpp"

namespace structura::cli {

  namespace {
    using nlohmann::json;
    using Names = std::vector<std::string>;

    struct Usage : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    // What a command produced: text for people, the rest for --json.
    struct Outcome {
      int                code = exit_ok;
      std::string        status;
      json               counts    = json::object();
      json               witnesses = json::array();
      std::ostringstream text;
    };

    json records(Report const& r) {
      json out = json::array();
      for (auto const& rec : r.records()) {
        out.push_back({{"ok", rec.ok}, {"index", rec.index}, {"subject", rec.subject},
                       {"witness", rec.witness}});
      }
      return out;
    }

    void add_report(Outcome& o, Report const& r, std::string const& prefix = {}) {
      o.counts[prefix + "total"]  = r.checked();
      o.counts[prefix + "failed"] = r.failed();
      for (auto& rec : records(r)) {
        o.witnesses.push_back(std::move(rec));
      }
      o.text << r.str();
    }

    dsl::SpecDocument load(std::string const& file, std::istream& in) {
      std::string text;
      if (file == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
      } else {
        std::ifstream f(file, std::ios::binary);
        if (!f) {
          throw Usage("cannot read '" + file + "'");
        }
        text.assign(std::istreambuf_iterator<char>(f), {});
      }
      return dsl::parse_spec(text);
    }

    // A resolved structure block.
    struct Resolved {
      dsl::StructureDecl const* decl;
      Presentation              theory;
      Names                     points;
      std::optional<Space>      space;
    };

    Resolved resolve(dsl::SpecDocument const& doc, std::string const& name) {
      auto const* decl = doc.structure(name);
      if (!decl) {
        throw Usage("no structure named '" + name + "'");
      }
      auto c = doc.carrier(decl->carrier);
      return {decl, *doc.theory(decl->theory), *c->points, c->space};
    }

    template <PointCategory Cat>
    StructuredObject<Cat> build(Cat const& cat, Resolved const& r, typename Cat::Object carrier) {
      StructuredObject<Cat> s{cat, r.theory, carrier, {}};
      Powers<Cat>           powers(cat, carrier);
      for (std::size_t k = 0; k < r.decl->tables.size(); ++k) {
        auto const& source = powers(r.theory.signature().symbols()[k].arity).apex;
        s.interpretation.push_back({source, carrier, r.decl->tables[k]});
      }
      return s;
    }

    std::string tuple_name(std::size_t index, std::size_t arity, Names const& points) {
      std::string s = "(";
      auto        c = tuple_at(index, arity, points.size());
      for (std::size_t j = 0; j < c.size(); ++j) {
        s += (j ? "," : "") + points[c[j]];
      }
      return s + ")";
    }

    // For operations that are not continuous, a witness in point names.
    void explain_discontinuity(Report& report, StructuredObject<FinTop> const& s, Names const& points) {
      Report      out;
      auto const& sig = s.theory.signature();
      for (auto rec : report.records()) {
        if (!rec.ok && rec.index < sig.size()) {
          auto const& op = sig.symbols()[rec.index];
          auto const& f  = s.interpretation[rec.index];
          if (auto w = s.cat.monotonicity_witness(f)) {
            auto [p, q] = *w;
            rec.witness = "not monotone: " + tuple_name(p, op.arity, points) + " <= "
                          + tuple_name(q, op.arity, points) + " but " + op.name
                          + tuple_name(p, op.arity, points) + " = " + points[f.image[p]]
                          + " is not <= " + op.name + tuple_name(q, op.arity, points)
                          + " = " + points[f.image[q]];
          }
        }
        if (rec.ok) {
          out.ok(rec.index, rec.subject, rec.witness);
        } else {
          out.fail(rec.index, rec.subject, rec.witness);
        }
      }
      for (auto k = out.checked(); k < report.checked(); ++k) {
        out.pass();
      }
      report = out;
    }

    template <PointCategory Cat>
    Report validate_resolved(StructuredObject<Cat> const& s, Resolved const& r) {
      auto report = validate_structure(s, r.theory);
      if constexpr (std::is_same_v<Cat, FinTop>) {
        explain_discontinuity(report, s, r.points);
      }
      return report;
    }

    void cmd_validate(Outcome& o, dsl::SpecDocument const& doc, std::string const& name) {
      auto const r = resolve(doc, name);
      o.text << "validate " << name << " : " << r.decl->theory << " on " << r.decl->carrier << '\n';
      Report report = r.space ? validate_resolved(build(FinTop{}, r, *r.space), r)
                              : validate_resolved(build(FinSet{}, r, r.points.size()), r);
      add_report(o, report);
      o.status = report.passed() ? "valid" : "invalid";
      o.code   = report.passed() ? exit_ok : exit_failure;
      o.text << "status: " << o.status << '\n';
    }

    // Point names of F(X) given those of X.
    using Namer = std::function<Names(Names const&)>;

    Namer same_names() {
      return [](Names const& n) { return n; };
    }

    Namer component_names(Space const& x) {
      return [x](Names const& n) {
        Names out;
        for (auto const& comp : pi0(x)) {
          std::string s;
          for (auto p : comp) {
            s += (s.empty() ? "" : "_") + n[p];
          }
          out.push_back(s);
        }
        return out;
      };
    }

    template <class Obj>
    std::optional<Space> as_space(Obj const& x) {
      if constexpr (std::is_same_v<Obj, Space>) {
        return x;
      } else {
        return std::nullopt;
      }
    }

    template <PointCategory Cat>
    std::string print_lifted(StructuredObject<Cat> const& s,
                             std::string const&           name,
                             std::string const&           theory,
                             std::string const&           carrier,
                             Names const&                 points) {
      dsl::StructureDecl decl{name, theory, carrier, {}};
      for (auto const& f : s.interpretation) {
        decl.tables.push_back(f.image);
      }
      return dsl::print_carrier(carrier, points, as_space(s.carrier)) + "\n"
             + dsl::print_structure(decl, s.theory.signature(), points);
    }

    struct TransportRequest {
      std::string adjunction, direction;
      bool        verify = false;
    };

    template <PointCategory C, PointCategory D>
    void transport(Outcome&                      o,
                   Resolved const&               r,
                   LiftedAdjunction<C, D> const& l,
                   TransportRequest const&       req,
                   std::function<Namer(typename C::Object const&)> left_names) {
      auto const& adj     = l.base();
      auto const& theory  = r.decl->theory;
      auto const& carrier = r.decl->carrier;
      o.text << "transport " << r.decl->name << " : " << theory << " on " << carrier << " along "
             << req.adjunction << " (" << req.direction << ")\n";
      json lifted = json::object();
      Report sweep;
      if (req.direction == "ascend") {
        StructuredObject<C> c;
        if constexpr (std::is_same_v<typename C::Object, Space>) {
          c = build(l.lower(), r, *r.space);
        } else {
          c = build(l.lower(), r, r.points.size());
        }
        auto const valid = validate_resolved(c, r);
        if (!valid.passed()) {
          add_report(o, valid);
          o.status = "invalid";
          o.code   = exit_failure;
          o.text << "status: invalid input structure\n";
          return;
        }
        auto const up     = ascend(c, l);
        auto const names  = left_names(c.carrier)(r.points);
        auto const target = adj.left.name + "_" + carrier;
        auto const text   = print_lifted(up.structure, r.decl->name + "_ascent", theory, target, names);
        o.text << '\n' << text << "\n# unit carrier map " << carrier << " -> " << target << '\n';
        json map = json::object();
        for (std::size_t p = 0; p < r.points.size(); ++p) {
          o.text << r.points[p] << " -> " << names[up.unit.base.image[p]] << '\n';
          map[r.points[p]] = names[up.unit.base.image[p]];
        }
        lifted = {{"structure", text}, {"carrier_map", map}};
        if (req.verify) {
          sweep = verify_unique_ascent(c, l);
        }
      } else {
        StructuredObject<D> d;
        if constexpr (std::is_same_v<typename D::Object, Space>) {
          d = build(l.upper(), r, *r.space);
        } else {
          d = build(l.upper(), r, r.points.size());
        }
        auto const valid = validate_resolved(d, r);
        if (!valid.passed()) {
          add_report(o, valid);
          o.status = "invalid";
          o.code   = exit_failure;
          o.text << "status: invalid input structure\n";
          return;
        }
        auto const down   = descend(d, l);
        auto const target = adj.right.name + "_" + carrier;
        auto const source = adj.left.name + "_" + target;
        auto const names  = r.points;  // G keeps the points
        auto const up     = left_names(down.structure.carrier)(names);
        auto const text   = print_lifted(down.structure, r.decl->name + "_descent", theory, target, names);
        o.text << '\n' << text << "\n# counit carrier map " << source << " -> " << carrier << '\n';
        json map = json::object();
        for (std::size_t p = 0; p < up.size(); ++p) {
          o.text << up[p] << " -> " << r.points[down.counit.base.image[p]] << '\n';
          map[up[p]] = r.points[down.counit.base.image[p]];
        }
        lifted = {{"structure", text}, {"carrier_map", map}};
        if (req.verify) {
          sweep = verify_unique_descent(d, l);
        }
      }
      o.witnesses.push_back(lifted);
      if (req.verify) {
        o.text << "\n# unique " << (req.direction == "ascend" ? "ascent" : "descent") << '\n';
        add_report(o, sweep);
      }
      o.status = sweep.passed() ? "ok" : "not-unique";
      o.code   = sweep.passed() ? exit_ok : exit_failure;
      o.text << "status: " << o.status << '\n';
    }

    void cmd_transport(Outcome& o, dsl::SpecDocument const& doc, std::string const& name,
                       TransportRequest const& req) {
      auto const r = resolve(doc, name);
      auto const p = r.theory;
      if (req.adjunction == "beta") {
        if (!r.space) {
          throw Usage("the beta adjunction acts on spaces; '" + r.decl->carrier + "' is a set");
        }
        if (req.direction == "descend" && !r.space->is_discrete()) {
          throw Usage("descent along beta starts from a discrete space; '" + r.decl->carrier
                      + "' is not discrete");
        }
        transport(o, r, lift_adjunction(make_beta_adjunction(), p), req,
                  [](Space const& x) { return component_names(x); });
      } else if (req.adjunction == "discrete") {
        if (req.direction == "ascend" && r.space) {
          throw Usage("ascent along discrete starts from a set; '" + r.decl->carrier + "' is a space");
        }
        if (req.direction == "descend" && !r.space) {
          throw Usage("descent along discrete starts from a space; '" + r.decl->carrier + "' is a set");
        }
        transport(o, r, lift_adjunction(make_discrete_forgetful_adjunction(), p), req,
                  [](std::size_t) { return same_names(); });
      } else if (req.adjunction == "identity") {
        if (r.space) {
          transport(o, r, lift_adjunction(identity_adjunction(FinTop{}), p), req,
                    [](Space const&) { return same_names(); });
        } else {
          transport(o, r, lift_adjunction(identity_adjunction(FinSet{}), p), req,
                    [](std::size_t) { return same_names(); });
        }
      } else {
        throw Usage("unknown adjunction '" + req.adjunction + "'");
      }
    }

    struct TheoryRequest {
      std::string name;
      std::size_t m = 0, n = 0, max_size = 3;
      std::string oracle;
      bool        allow_bounded = false;
    };

    void cmd_theory(Outcome& o, dsl::SpecDocument const& doc, TheoryRequest const& req) {
      auto p = doc.theory(req.name);
      if (!p) {
        throw Usage("no theory named '" + req.name + "'");
      }
      auto const oracle = select_oracle(*p, req.allow_bounded, req.oracle);
      LawvereTheory const t(*p, oracle);
      o.text << "theory " << req.name << " oracle=" << oracle->name();
      if (!oracle->complete()) {
        o.text << " UNSOUND-AS-COMPLETE";
      }
      o.text << '\n'
             << "hom(" << req.m << "," << req.n << ") up to size " << req.max_size << '\n';
      auto const homs = t.hom(req.m, req.n, req.max_size);
      for (auto const& f : homs) {
        o.text << to_string(f) << '\n';
        o.witnesses.push_back(to_string(f));
      }
      o.text << "count: " << homs.size() << '\n';
      o.counts["entries"] = homs.size();
      o.status            = oracle->complete() ? "ok" : "ok-bounded-oracle";
    }

    void cmd_enumerate(Outcome& o, dsl::SpecDocument const& doc, std::string const& theory,
                       std::string const& object, std::size_t max_points) {
      auto p = doc.theory(theory);
      if (!p) {
        throw Usage("no theory named '" + theory + "'");
      }
      auto c = doc.carrier(object);
      if (!c) {
        throw Usage("no set or space named '" + object + "'");
      }
      SearchBounds bounds;
      bounds.max_carrier = max_points;
      o.text << "enumerate " << theory << " on " << object << '\n';
      std::vector<dsl::StructureDecl> found;
      auto collect = [&](auto const& structures) {
        for (auto const& s : structures) {
          dsl::StructureDecl decl{theory + "_" + std::to_string(found.size()), theory, object, {}};
          for (auto const& f : s.interpretation) {
            decl.tables.push_back(f.image);
          }
          found.push_back(std::move(decl));
        }
      };
      if (c->space) {
        collect(enumerate_structures(*p, *c->space, FinTop{}, bounds));
      } else {
        collect(enumerate_structures(*p, c->points->size(), FinSet{}, bounds));
      }
      for (auto const& d : found) {
        auto text = dsl::print_structure(d, p->signature(), *c->points);
        o.text << '\n' << text;
        o.witnesses.push_back(text);
      }
      o.text << "\ncount: " << found.size() << '\n';
      o.counts["structures"] = found.size();
      o.status               = "ok";
    }

    int code_for(Errc e) {
      switch (e) {
        case Errc::oracle_unsound:
        case Errc::not_product_preserving:
        case Errc::invalid_structure:
        case Errc::domain_error: return exit_failure;
        default: return exit_usage;
      }
    }

    constexpr char const* dsl_help = R"(Input files are written in a small language:

  theory Monoid { op m/2; op e/0; eq m(e,x) = x; }
  set Two { elements a b; }
  space S { points a b; order a<=b; }
  structure Or : Monoid on S { m(a,a) = a; m(a,b) = b; m(b,a) = b; m(b,b) = b; e = a; }

Comments start with '#'.  In an 'eq' line every name that is not an
operation is a variable; variables are numbered x0, x1, ... in order of
first occurrence, left side first.  Built-in theories (monoid, comm-monoid,
group, abelian-group, ring, pointed-set, magma) can be named directly.
Exit codes: 0 success, 1 mathematical failure, 2 usage or input error.)";
  }  // namespace

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Transport of algebraic structures along adjunctions of finite categories"};
    app.name("structura");
    app.footer(dsl_help);
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print a machine-readable summary");

    std::string file, name;
    auto*       validate = app.add_subcommand("validate", "Check a structure against its theory");
    validate->add_option("file", file, "Input file, or - for standard input")->required();
    validate->add_option("structure", name, "Structure to check")->required();
    validate->add_flag("--json", as_json, "Print a machine-readable summary");

    TransportRequest treq;
    auto* transport = app.add_subcommand("transport", "Ascend or descend a structure along an adjunction");
    transport->add_option("file", file, "Input file, or - for standard input")->required();
    transport->add_option("structure", name, "Structure to transport")->required();
    transport->add_option("--adjunction", treq.adjunction, "beta, discrete or identity")
        ->required()
        ->check(CLI::IsMember({"beta", "discrete", "identity"}));
    transport->add_option("--direction", treq.direction, "ascend or descend")
        ->required()
        ->check(CLI::IsMember({"ascend", "descend"}));
    transport->add_flag("--verify-unique", treq.verify, "Run the brute-force uniqueness sweep");
    transport->add_flag("--json", as_json, "Print a machine-readable summary");

    TheoryRequest            qreq;
    std::vector<std::size_t> hom;
    auto* theory = app.add_subcommand("theory", "List normal forms of a hom-set of a Lawvere theory");
    theory->add_option("file", file, "Input file, or - for standard input")->required();
    theory->add_option("theory", qreq.name, "Declared or built-in theory")->required();
    theory->add_option("--hom", hom, "Source and target objects M N")->required()->expected(2);
    theory->add_option("--max-size", qreq.max_size, "Largest term size listed")->capture_default_str();
    theory->add_option("--oracle", qreq.oracle,
                       "free, monoid, comm-monoid, group, abelian-group, ring or bounded-semantic");
    theory->add_flag("--allow-bounded-oracle", qreq.allow_bounded,
                     "Fall back to equality in all models with at most 3 elements");
    theory->add_flag("--json", as_json, "Print a machine-readable summary");

    std::string object;
    std::size_t max_points = 4;
    auto*       enumerate  = app.add_subcommand("enumerate", "Every structure of a theory on a set or space");
    enumerate->add_option("file", file, "Input file, or - for standard input")->required();
    enumerate->add_option("theory", qreq.name, "Declared or built-in theory")->required();
    enumerate->add_option("object", object, "Set or space")->required();
    enumerate->add_option("--max-points", max_points, "Refuse larger carriers")->capture_default_str();
    enumerate->add_flag("--json", as_json, "Print a machine-readable summary");

    std::string command;
    Outcome     o;
    try {
      std::reverse(args.begin(), args.end());
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      auto code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }
    try {
      if (validate->parsed()) {
        command = "validate";
        cmd_validate(o, load(file, in), name);
      } else if (transport->parsed()) {
        command = "transport";
        cmd_transport(o, load(file, in), name, treq);
      } else if (theory->parsed()) {
        command = "theory";
        qreq.m  = hom[0];
        qreq.n  = hom[1];
        cmd_theory(o, load(file, in), qreq);
      } else {
        command = "enumerate";
        cmd_enumerate(o, load(file, in), qreq.name, object, max_points);
      }
    } catch (dsl::ParseError const& e) {
      o.code   = exit_usage;
      o.status = "parse-error";
      o.text.str("");
      for (auto const& d : e.diagnostics()) {
        o.text << file << ':' << to_string(d) << '\n';
        o.witnesses.push_back(file + ":" + to_string(d));
      }
    } catch (Usage const& e) {
      o.code   = exit_usage;
      o.status = "usage-error";
      o.text.str("");
      o.text << "error: " << e.what() << '\n';
      o.witnesses.push_back(e.what());
    } catch (Error const& e) {
      o.code   = code_for(e.code());
      o.status = o.code == exit_failure ? "failed" : "error";
      o.text.str("");
      o.text << "error: " << e.what() << '\n';
      o.witnesses.push_back(e.what());
    }
    if (as_json) {
      json j{{"command", command}, {"status", o.status}, {"counts", o.counts},
             {"witnesses", o.witnesses}};
      out << j.dump(2) << '\n';
    } else if (o.code == exit_usage) {
      err << o.text.str();
    } else {
      out << o.text.str();
    }
    return o.code;
  }

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    return run(std::move(args), out, err, std::cin);
  }

}  // namespace structura::cli
