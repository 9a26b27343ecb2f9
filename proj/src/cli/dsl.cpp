#include "structura/cli/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "structura/equational/algebra.hpp"
#include "structura/lawvere/builtins.hpp"

namespace structura::dsl {

  std::string_view to_string(DiagKind kind) noexcept {
    switch (kind) {
      case DiagKind::syntax_error: return "SyntaxError";
      case DiagKind::unknown_name: return "UnknownName";
      case DiagKind::arity_mismatch: return "ArityMismatch";
      case DiagKind::duplicate_name: return "DuplicateName";
      case DiagKind::incomplete_table: return "IncompleteTable";
      case DiagKind::invalid_value: return "InvalidValue";
    }
    return "Unknown";
  }

  std::string to_string(Diagnostic const& d) {
    return std::to_string(d.line) + ":" + std::to_string(d.column) + ": "
           + std::string(to_string(d.kind)) + ": " + d.message;
  }

  namespace {
    std::string join_diagnostics(std::vector<Diagnostic> const& ds) {
      std::string s;
      for (auto const& d : ds) {
        s += (s.empty() ? "" : "\n") + to_string(d);
      }
      return s;
    }
  }  // namespace

  ParseError::ParseError(std::vector<Diagnostic> diagnostics)
      : std::runtime_error(join_diagnostics(diagnostics)),
        _diagnostics(std::move(diagnostics)) {}

  std::optional<Presentation> SpecDocument::theory(std::string_view name) const {
    for (auto const& t : theories) {
      if (t.name == name) {
        return t.presentation;
      }
    }
    return find_builtin_presentation(name);
  }

  std::optional<CarrierRef> SpecDocument::carrier(std::string_view name) const {
    for (auto const& s : sets) {
      if (s.name == name) {
        return CarrierRef{&s.name, &s.elements, std::nullopt};
      }
    }
    for (auto const& s : spaces) {
      if (s.name == name) {
        return CarrierRef{&s.name, &s.points, s.space};
      }
    }
    return std::nullopt;
  }

  StructureDecl const* SpecDocument::structure(std::string_view name) const {
    for (auto const& s : structures) {
      if (s.name == name) {
        return &s;
      }
    }
    return nullptr;
  }

  namespace {
    enum class Tok { ident, number, punct, end };

    struct Token {
      Tok         kind;
      std::string text;
      std::size_t line;
      std::size_t column;
    };

    bool ident_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
    }

    struct SyntaxFailure {
      Diagnostic diagnostic;
    };

    std::vector<Token> lex(std::string_view text, std::vector<Diagnostic>& diags) {
      std::vector<Token> out;
      std::size_t        line = 1, col = 1;
      for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (c == '\n') {
          ++line, col = 1, ++i;
          continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++col, ++i;
          continue;
        }
        if (c == '#') {
          while (i < text.size() && text[i] != '\n') {
            ++i;
          }
          continue;
        }
        if (ident_char(c)) {
          std::size_t j      = i;
          bool        digits = true;
          while (j < text.size() && ident_char(text[j])) {
            digits = digits && std::isdigit(static_cast<unsigned char>(text[j]));
            ++j;
          }
          out.push_back({digits ? Tok::number : Tok::ident, std::string(text.substr(i, j - i)), line, col});
          col += j - i;
          i = j;
          continue;
        }
        if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') {
          out.push_back({Tok::punct, "<=", line, col});
          col += 2, i += 2;
          continue;
        }
        if (std::string_view("{}(),;=/:").find(c) != std::string_view::npos) {
          out.push_back({Tok::punct, std::string(1, c), line, col});
          ++col, ++i;
          continue;
        }
        diags.push_back({DiagKind::syntax_error, line, col,
                         "unexpected character '" + std::string(1, c) + "'"});
        ++col, ++i;
      }
      out.push_back({Tok::end, "", line, col});
      return out;
    }

    struct TermAst {
      std::string          name;
      std::size_t          line, column;
      bool                 call = false;
      std::vector<TermAst> args;
    };

    struct OpAst {
      Token       name;
      std::size_t arity;
    };

    struct TheoryAst {
      Token                                   name;
      std::vector<OpAst>                      ops;
      std::vector<std::pair<TermAst, TermAst>> eqs;
    };

    struct CarrierAst {
      Token                              name;
      bool                               space;
      std::vector<Token>                 points;
      std::vector<std::pair<Token, Token>> order;
    };

    struct EntryAst {
      Token              symbol;
      bool               call;
      std::vector<Token> inputs;
      Token              value;
    };

    struct StructureAst {
      Token                 name, theory, carrier;
      std::vector<EntryAst> entries;
    };

    class Parser {
     public:
      explicit Parser(std::vector<Token> tokens) : _t(std::move(tokens)) {}

      void run(std::vector<Diagnostic>& diags) {
        while (peek().kind != Tok::end) {
          std::size_t const start = _i;
          try {
            declaration();
          } catch (SyntaxFailure const& f) {
            diags.push_back(f.diagnostic);
            recover(start);
          }
        }
      }

      std::vector<TheoryAst>    theories;
      std::vector<CarrierAst>   carriers;
      std::vector<StructureAst> structures;

     private:
      Token const& peek() const {
        return _t[_i];
      }
      Token next() {
        auto t = _t[_i];
        if (t.kind != Tok::end) {
          ++_i;
        }
        return t;
      }
      [[noreturn]] void fail(Token const& at, std::string const& what) const {
        std::string got = at.kind == Tok::end ? "end of input" : "'" + at.text + "'";
        throw SyntaxFailure{{DiagKind::syntax_error, at.line, at.column,
                             "expected " + what + ", found " + got}};
      }
      bool at_punct(std::string_view p) const {
        return peek().kind == Tok::punct && peek().text == p;
      }
      Token punct(std::string_view p) {
        if (!at_punct(p)) {
          fail(peek(), "'" + std::string(p) + "'");
        }
        return next();
      }
      Token ident(std::string const& what) {
        if (peek().kind != Tok::ident && peek().kind != Tok::number) {
          fail(peek(), what);
        }
        return next();
      }
      Token keyword(std::string_view k) {
        if (peek().kind != Tok::ident || peek().text != k) {
          fail(peek(), "'" + std::string(k) + "'");
        }
        return next();
      }

      // Skips past the block the failed declaration was in.
      void recover(std::size_t start) {
        _i = std::max(_i, start + 1);
        int depth = 0;
        for (std::size_t j = start; j < _i; ++j) {
          if (_t[j].kind == Tok::punct) {
            depth += _t[j].text == "{" ? 1 : _t[j].text == "}" ? -1 : 0;
          }
        }
        while (peek().kind != Tok::end) {
          auto t = next();
          if (t.kind == Tok::punct && t.text == "{") {
            ++depth;
          } else if (t.kind == Tok::punct && t.text == "}" && --depth <= 0) {
            return;
          }
        }
      }

      void declaration() {
        auto const& k = peek();
        if (k.kind == Tok::ident && k.text == "theory") {
          theory();
        } else if (k.kind == Tok::ident && (k.text == "set" || k.text == "space")) {
          carrier();
        } else if (k.kind == Tok::ident && k.text == "structure") {
          structure();
        } else {
          fail(k, "'theory', 'set', 'space' or 'structure'");
        }
      }

      void theory() {
        next();
        TheoryAst th{ident("a theory name"), {}, {}};
        punct("{");
        while (!at_punct("}")) {
          auto k = peek();
          if (k.kind == Tok::ident && k.text == "op") {
            next();
            auto name = ident("an operation name");
            punct("/");
            if (peek().kind != Tok::number) {
              fail(peek(), "an arity");
            }
            auto n = std::stoul(next().text);
            punct(";");
            th.ops.push_back({name, n});
          } else if (k.kind == Tok::ident && k.text == "eq") {
            next();
            auto lhs = term();
            punct("=");
            auto rhs = term();
            punct(";");
            th.eqs.emplace_back(std::move(lhs), std::move(rhs));
          } else {
            fail(k, "'op', 'eq' or '}'");
          }
        }
        punct("}");
        theories.push_back(std::move(th));
      }

      TermAst term() {
        auto    name = ident("a term");
        TermAst t{name.text, name.line, name.column, false, {}};
        if (at_punct("(")) {
          next();
          t.call = true;
          if (!at_punct(")")) {
            t.args.push_back(term());
            while (at_punct(",")) {
              next();
              t.args.push_back(term());
            }
          }
          punct(")");
        }
        return t;
      }

      void carrier() {
        bool const space = next().text == "space";
        CarrierAst c{ident(space ? "a space name" : "a set name"), space, {}, {}};
        punct("{");
        keyword(space ? "points" : "elements");
        while (!at_punct(";")) {
          c.points.push_back(ident("a point name or ';'"));
        }
        punct(";");
        while (space && peek().kind == Tok::ident && peek().text == "order") {
          next();
          do {
            if (at_punct(",")) {
              next();
            }
            auto a = ident("a point name");
            punct("<=");
            auto b = ident("a point name");
            c.order.emplace_back(a, b);
          } while (at_punct(","));
          punct(";");
        }
        punct("}");
        carriers.push_back(std::move(c));
      }

      void structure() {
        next();
        StructureAst s;
        s.name = ident("a structure name");
        punct(":");
        s.theory = ident("a theory name");
        keyword("on");
        s.carrier = ident("a set or space name");
        punct("{");
        while (!at_punct("}")) {
          EntryAst e{ident("an operation name"), false, {}, {}};
          if (at_punct("(")) {
            next();
            e.call = true;
            if (!at_punct(")")) {
              e.inputs.push_back(ident("a point name"));
              while (at_punct(",")) {
                next();
                e.inputs.push_back(ident("a point name"));
              }
            }
            punct(")");
          }
          punct("=");
          e.value = ident("a point name");
          punct(";");
          s.entries.push_back(std::move(e));
        }
        punct("}");
        structures.push_back(std::move(s));
      }

      std::vector<Token> _t;
      std::size_t        _i = 0;
    };

    class Elaborator {
     public:
      Elaborator(Parser const& ast, std::vector<Diagnostic>& diags) : _ast(ast), _d(diags) {}

      SpecDocument run() {
        SpecDocument doc;
        std::map<std::string, Token> seen;
        auto claim = [&](Token const& name) {
          auto [it, fresh] = seen.emplace(name.text, name);
          if (!fresh) {
            report(DiagKind::duplicate_name, name,
                   "'" + name.text + "' is already declared at line "
                       + std::to_string(it->second.line));
          }
          return fresh;
        };
        for (auto const& th : _ast.theories) {
          if (claim(th.name)) {
            if (auto t = theory(th)) {
              doc.theories.push_back(std::move(*t));
            }
          }
        }
        for (auto const& c : _ast.carriers) {
          if (!claim(c.name)) {
            continue;
          }
          auto points = point_names(c);
          if (!c.space) {
            doc.sets.push_back({c.name.text, points});
            continue;
          }
          std::vector<std::pair<Point, Point>> gens;
          for (auto const& [a, b] : c.order) {
            auto pa = index_of(points, a), pb = index_of(points, b);
            if (pa && pb) {
              gens.emplace_back(*pa, *pb);
            }
          }
          doc.spaces.push_back({c.name.text, points, Space::from_order(points.size(), gens)});
        }
        for (auto const& s : _ast.structures) {
          if (claim(s.name)) {
            if (auto st = structure(doc, s)) {
              doc.structures.push_back(std::move(*st));
            }
          }
        }
        return doc;
      }

     private:
      void report(DiagKind kind, Token const& at, std::string message) {
        _d.push_back({kind, at.line, at.column, std::move(message)});
      }

      std::vector<std::string> point_names(CarrierAst const& c) {
        std::vector<std::string> names;
        for (auto const& p : c.points) {
          if (std::find(names.begin(), names.end(), p.text) != names.end()) {
            report(DiagKind::duplicate_name, p, "point '" + p.text + "' listed twice");
          } else {
            names.push_back(p.text);
          }
        }
        return names;
      }

      std::optional<std::size_t> index_of(std::vector<std::string> const& names, Token const& t) {
        auto it = std::find(names.begin(), names.end(), t.text);
        if (it == names.end()) {
          report(DiagKind::unknown_name, t, "no point named '" + t.text + "'");
          return std::nullopt;
        }
        return static_cast<std::size_t>(it - names.begin());
      }

      std::optional<TheoryDecl> theory(TheoryAst const& th) {
        auto const            before = _d.size();
        std::vector<OpSymbol> ops;
        for (auto const& op : th.ops) {
          bool dup = std::any_of(ops.begin(), ops.end(), [&](auto const& o) { return o.name == op.name.text; });
          if (dup) {
            report(DiagKind::duplicate_name, op.name, "operation '" + op.name.text + "' declared twice");
          } else {
            ops.push_back({op.name.text, op.arity});
          }
        }
        Signature             sig(ops);
        std::vector<Identity> ids;
        TheoryDecl            decl{th.name.text, {}, {}};
        for (auto const& [lhs, rhs] : th.eqs) {
          std::vector<std::string> vars;
          auto l = term(lhs, sig, vars);
          auto r = term(rhs, sig, vars);
          if (l && r) {
            ids.emplace_back(vars.size(), *l, *r);
            decl.variables.push_back(vars);
          }
        }
        if (_d.size() != before) {
          return std::nullopt;
        }
        decl.presentation = Presentation(th.name.text, sig, ids);
        return decl;
      }

      std::optional<Term> term(TermAst const& t, Signature const& sig, std::vector<std::string>& vars) {
        Token at{Tok::ident, t.name, t.line, t.column};
        auto  sym = sig.find(t.name);
        if (!sym) {
          if (t.call) {
            report(DiagKind::unknown_name, at, "no operation named '" + t.name + "'");
            return std::nullopt;
          }
          auto it = std::find(vars.begin(), vars.end(), t.name);
          if (it == vars.end()) {
            vars.push_back(t.name);
            it = vars.end() - 1;
          }
          return Term::var(static_cast<std::size_t>(it - vars.begin()));
        }
        auto const arity = sig.symbols()[*sym].arity;
        if (t.args.size() != arity) {
          report(DiagKind::arity_mismatch, at,
                 "'" + t.name + "' takes " + std::to_string(arity) + " argument"
                     + (arity == 1 ? "" : "s") + ", given " + std::to_string(t.args.size()));
          return std::nullopt;
        }
        std::vector<Term> args;
        bool              ok = true;
        for (auto const& a : t.args) {
          auto e = term(a, sig, vars);
          ok     = ok && e.has_value();
          if (e) {
            args.push_back(*e);
          }
        }
        if (!ok) {
          return std::nullopt;
        }
        return Term::app(t.name, std::move(args));
      }

      std::optional<StructureDecl> structure(SpecDocument const& doc, StructureAst const& s) {
        auto const before = _d.size();
        auto       p      = doc.theory(s.theory.text);
        auto       c      = doc.carrier(s.carrier.text);
        if (!p) {
          report(DiagKind::unknown_name, s.theory, "no theory named '" + s.theory.text + "'");
        }
        if (!c) {
          report(DiagKind::unknown_name, s.carrier, "no set or space named '" + s.carrier.text + "'");
        }
        if (!p || !c) {
          return std::nullopt;
        }
        auto const& sig    = p->signature();
        auto const& points = *c->points;
        auto const  n      = points.size();
        constexpr std::size_t unset = static_cast<std::size_t>(-1);
        std::vector<std::vector<std::size_t>> tables;
        for (auto const& op : sig.symbols()) {
          tables.emplace_back(power(n, op.arity), unset);
        }
        for (auto const& e : s.entries) {
          auto sym = sig.find(e.symbol.text);
          if (!sym) {
            report(DiagKind::unknown_name, e.symbol,
                   "'" + s.theory.text + "' has no operation '" + e.symbol.text + "'");
            continue;
          }
          auto const arity = sig.symbols()[*sym].arity;
          if (e.inputs.size() != arity) {
            report(DiagKind::arity_mismatch, e.symbol,
                   "'" + e.symbol.text + "' takes " + std::to_string(arity) + " argument"
                       + (arity == 1 ? "" : "s") + ", given " + std::to_string(e.inputs.size()));
            continue;
          }
          std::vector<std::size_t> in;
          bool                     ok = true;
          for (auto const& t : e.inputs) {
            auto k = index_of(points, t);
            ok     = ok && k.has_value();
            in.push_back(k.value_or(0));
          }
          auto v = index_of(points, e.value);
          if (!ok) {
            continue;
          }
          auto& slot = tables[*sym][tuple_index(in, n)];
          if (!v) {
            slot = 0;  // already diagnosed; not also missing
            continue;
          }
          if (slot != unset) {
            report(DiagKind::duplicate_name, e.symbol, "entry for " + e.symbol.text + " given twice");
            continue;
          }
          slot = *v;
        }
        for (std::size_t k = 0; k < sig.size(); ++k) {
          auto it = std::find(tables[k].begin(), tables[k].end(), unset);
          if (it != tables[k].end()) {
            auto        args = tuple_at(static_cast<std::size_t>(it - tables[k].begin()), sig.symbols()[k].arity, n);
            std::string input;
            for (auto a : args) {
              input += (input.empty() ? "" : ",") + points[a];
            }
            report(DiagKind::incomplete_table, s.name,
                   "no entry for " + sig.symbols()[k].name
                       + (sig.symbols()[k].arity ? "(" + input + ")" : ""));
          }
        }
        if (_d.size() != before) {
          return std::nullopt;
        }
        return StructureDecl{s.name.text, s.theory.text, s.carrier.text, std::move(tables)};
      }

      Parser const&            _ast;
      std::vector<Diagnostic>& _d;
    };

    void print_term(std::ostream& os, Term const& t, std::vector<std::string> const& vars) {
      if (t.is_var()) {
        os << vars[t.var_index()];
        return;
      }
      os << t.symbol();
      if (t.args().empty()) {
        return;
      }
      os << '(';
      for (std::size_t j = 0; j < t.args().size(); ++j) {
        os << (j ? "," : "");
        print_term(os, t.args()[j], vars);
      }
      os << ')';
    }
  }  // namespace

  SpecDocument parse_spec(std::string_view text) {
    std::vector<Diagnostic> diags;
    Parser                  parser(lex(text, diags));
    parser.run(diags);
    auto doc = Elaborator(parser, diags).run();
    if (!diags.empty()) {
      std::stable_sort(diags.begin(), diags.end(), [](auto const& a, auto const& b) {
        return a.line != b.line ? a.line < b.line : a.column < b.column;
      });
      throw ParseError(std::move(diags));
    }
    return doc;
  }

  std::string print_spec(SpecDocument const& doc) {
    std::ostringstream os;
    bool               first = true;
    auto               gap   = [&] {
      if (!first) {
        os << '\n';
      }
      first = false;
    };
    for (auto const& t : doc.theories) {
      gap();
      os << "theory " << t.name << " {\n";
      for (auto const& op : t.presentation.signature().symbols()) {
        os << "  op " << op.name << '/' << op.arity << ";\n";
      }
      for (std::size_t k = 0; k < t.presentation.identities().size(); ++k) {
        auto const& id = t.presentation.identities()[k];
        os << "  eq ";
        print_term(os, id.lhs(), t.variables[k]);
        os << " = ";
        print_term(os, id.rhs(), t.variables[k]);
        os << ";\n";
      }
      os << "}\n";
    }
    for (auto const& s : doc.sets) {
      gap();
      os << print_carrier(s.name, s.elements, std::nullopt);
    }
    for (auto const& s : doc.spaces) {
      gap();
      os << print_carrier(s.name, s.points, s.space);
    }
    for (auto const& s : doc.structures) {
      gap();
      os << print_structure(s, doc.theory(s.theory)->signature(), *doc.carrier(s.carrier)->points);
    }
    return os.str();
  }

  std::string print_carrier(std::string const&              name,
                            std::vector<std::string> const& points,
                            std::optional<Space> const&     space) {
    std::ostringstream os;
    os << (space ? "space " : "set ") << name << " {\n  " << (space ? "points" : "elements");
    for (auto const& p : points) {
      os << ' ' << p;
    }
    os << ";\n";
    if (space && !space->strict_pairs().empty()) {
      auto const strict = space->strict_pairs();
      os << "  order";
      for (std::size_t k = 0; k < strict.size(); ++k) {
        os << (k ? ", " : " ") << points[strict[k].first] << "<=" << points[strict[k].second];
      }
      os << ";\n";
    }
    os << "}\n";
    return os.str();
  }

  std::string print_structure(StructureDecl const&            s,
                              Signature const&                sig,
                              std::vector<std::string> const& names) {
    std::ostringstream os;
    os << "structure " << s.name << " : " << s.theory << " on " << s.carrier << " {\n";
    for (std::size_t k = 0; k < s.tables.size(); ++k) {
      auto const& op = sig.symbols()[k];
      for (std::size_t i = 0; i < s.tables[k].size(); ++i) {
        os << "  " << op.name;
        if (op.arity > 0) {
          auto args = tuple_at(i, op.arity, names.size());
          os << '(';
          for (std::size_t j = 0; j < args.size(); ++j) {
            os << (j ? "," : "") << names[args[j]];
          }
          os << ')';
        }
        os << " = " << names[s.tables[k][i]] << ";\n";
      }
    }
    os << "}\n";
    return os.str();
  }

}  // namespace structura::dsl
