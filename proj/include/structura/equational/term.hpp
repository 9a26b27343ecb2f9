#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace structura {

  // A finitely branching tree of operation symbols over numbered variables.
  // Variables are positional: Var(i) is the i-th variable of whatever context
  // the term is read in.  Nodes are shared and immutable, so copies are cheap.
  class Term {
   public:
    static Term var(std::size_t index);
    static Term app(std::string symbol, std::vector<Term> args = {});

    bool is_var() const noexcept;
    bool is_app() const noexcept {
      return !is_var();
    }

    // Preconditions: is_var() / is_app() respectively.
    std::size_t              var_index() const;
    std::string const&       symbol() const;
    std::vector<Term> const& args() const;

    // Leaves (variables and constants) plus unary applications.  Nodes of
    // arity >= 2 are free, so a monoid word of length k has size k and the
    // number of terms of a given size is finite for every signature.
    std::size_t size() const noexcept;
    std::size_t node_count() const noexcept;

    // One more than the largest variable index occurring, 0 for closed terms.
    std::size_t variable_bound() const noexcept;

    friend bool operator==(Term const& lhs, Term const& rhs) noexcept;
    friend std::strong_ordering operator<=>(Term const& lhs,
                                            Term const& rhs) noexcept;

   private:
    struct Node;
    explicit Term(std::shared_ptr<Node const> node) : _node(std::move(node)) {}
    std::shared_ptr<Node const> _node;
  };

  // x0, m(x0,e), i(x1): variables print as x<i>, constants without parens.
  std::string   to_string(Term const& t);
  std::ostream& operator<<(std::ostream& os, Term const& t);

  // Replaces every Var(i) by env[i]; throws UnboundVariable if i is outside
  // env.
  Term substitute(Term const& t, std::span<Term const> env);

  // Renames variables: Var(i) becomes Var(shift + i).
  Term shift_variables(Term const& t, std::size_t shift);

}  // namespace structura
