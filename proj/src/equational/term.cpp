#include "structura/equational/term.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <variant>

#include "structura/error.hpp"

namespace structura {

  struct Term::Node {
    bool              is_var;
    std::size_t       index;
    std::string       symbol;
    std::vector<Term> args;
    std::size_t       size;
    std::size_t       nodes;
    std::size_t       bound;
  };

  Term Term::var(std::size_t index) {
    return Term(std::make_shared<Node const>(
        Node{true, index, {}, {}, 1, 1, index + 1}));
  }

  Term Term::app(std::string symbol, std::vector<Term> args) {
    std::size_t size  = args.size() == 1 ? 1 : 0;
    std::size_t nodes = 1;
    std::size_t bound = 0;
    if (args.empty()) {
      size = 1;
    }
    for (auto const& a : args) {
      size += a.size();
      nodes += a.node_count();
      bound = std::max(bound, a.variable_bound());
    }
    return Term(std::make_shared<Node const>(
        Node{false, 0, std::move(symbol), std::move(args), size, nodes, bound}));
  }

  bool Term::is_var() const noexcept {
    return _node->is_var;
  }

  std::size_t Term::var_index() const {
    if (!is_var()) {
      raise(Errc::invalid_argument, "var_index() called on an application");
    }
    return _node->index;
  }

  std::string const& Term::symbol() const {
    if (is_var()) {
      raise(Errc::invalid_argument, "symbol() called on a variable");
    }
    return _node->symbol;
  }

  std::vector<Term> const& Term::args() const {
    return _node->args;
  }

  std::size_t Term::size() const noexcept {
    return _node->size;
  }

  std::size_t Term::node_count() const noexcept {
    return _node->nodes;
  }

  std::size_t Term::variable_bound() const noexcept {
    return _node->bound;
  }

  bool operator==(Term const& lhs, Term const& rhs) noexcept {
    return (lhs <=> rhs) == std::strong_ordering::equal;
  }

  std::strong_ordering operator<=>(Term const& lhs, Term const& rhs) noexcept {
    if (lhs._node == rhs._node) {
      return std::strong_ordering::equal;
    }
    auto const& a = *lhs._node;
    auto const& b = *rhs._node;
    if (a.is_var != b.is_var) {
      // variables sort before applications
      return a.is_var ? std::strong_ordering::less
                      : std::strong_ordering::greater;
    }
    if (a.is_var) {
      return a.index <=> b.index;
    }
    if (auto c = a.symbol <=> b.symbol; c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        a.args.begin(), a.args.end(), b.args.begin(), b.args.end());
  }

  namespace {
    void print(std::ostream& os, Term const& t) {
      if (t.is_var()) {
        os << 'x' << t.var_index();
        return;
      }
      os << t.symbol();
      if (t.args().empty()) {
        return;
      }
      os << '(';
      bool first = true;
      for (auto const& a : t.args()) {
        if (!first) {
          os << ',';
        }
        first = false;
        print(os, a);
      }
      os << ')';
    }
  }  // namespace

  std::string to_string(Term const& t) {
    std::ostringstream os;
    print(os, t);
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, Term const& t) {
    print(os, t);
    return os;
  }

  Term substitute(Term const& t, std::span<Term const> env) {
    if (t.is_var()) {
      if (t.var_index() >= env.size()) {
        raise(Errc::unbound_variable,
              "variable x" + std::to_string(t.var_index())
                  + " has no image under the substitution");
      }
      return env[t.var_index()];
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (auto const& a : t.args()) {
      args.push_back(substitute(a, env));
    }
    return Term::app(t.symbol(), std::move(args));
  }

  Term shift_variables(Term const& t, std::size_t shift) {
    if (t.is_var()) {
      return Term::var(t.var_index() + shift);
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (auto const& a : t.args()) {
      args.push_back(shift_variables(a, shift));
    }
    return Term::app(t.symbol(), std::move(args));
  }

}  // namespace structura
