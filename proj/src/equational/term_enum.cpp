#include "structura/equational/term_enum.hpp"

#include <algorithm>
#include <map>

#include "structura/error.hpp"

namespace structura {

  namespace {
    class Enumerator {
     public:
      Enumerator(Signature const& sig, std::size_t variables)
          : _sig(sig), _variables(variables) {}

      std::vector<Term> const& of_size(std::size_t size) {
        if (auto it = _memo.find(size); it != _memo.end()) {
          return it->second;
        }
        std::vector<Term> result;
        if (size == 1) {
          for (std::size_t i = 0; i < _variables; ++i) {
            result.push_back(Term::var(i));
          }
        }
        for (auto const& op : _sig.symbols()) {
          if (op.arity == 0) {
            if (size == 1) {
              result.push_back(Term::app(op.name));
            }
          } else if (op.arity == 1) {
            if (size >= 2) {
              for (auto const& a : of_size(size - 1)) {
                result.push_back(Term::app(op.name, {a}));
              }
            }
          } else if (size >= op.arity) {
            std::vector<Term> args;
            spread(op, size, args, result);
          }
        }
        std::sort(result.begin(), result.end());
        return _memo.emplace(size, std::move(result)).first->second;
      }

     private:
      // Distributes `left` size units over the remaining arguments.
      void spread(OpSymbol const& op,
                  std::size_t     left,
                  std::vector<Term>& args,
                  std::vector<Term>& out) {
        auto const remaining = op.arity - args.size();
        if (remaining == 1) {
          for (auto const& a : of_size(left)) {
            args.push_back(a);
            out.push_back(Term::app(op.name, args));
            args.pop_back();
          }
          return;
        }
        for (std::size_t s = 1; s + (remaining - 1) <= left; ++s) {
          for (auto const& a : of_size(s)) {
            args.push_back(a);
            spread(op, left - s, args, out);
            args.pop_back();
          }
        }
      }

      Signature const&                           _sig;
      std::size_t                                _variables;
      std::map<std::size_t, std::vector<Term>>   _memo;
    };
  }  // namespace

  std::vector<Term> terms_of_size(Signature const& sig,
                                  std::size_t      variables,
                                  std::size_t      size) {
    if (size == 0) {
      return {};
    }
    return Enumerator(sig, variables).of_size(size);
  }

  std::vector<Term> terms_up_to(Signature const& sig,
                                std::size_t      variables,
                                std::size_t      max_size) {
    Enumerator        e(sig, variables);
    std::vector<Term> result;
    for (std::size_t s = 1; s <= max_size; ++s) {
      auto const& layer = e.of_size(s);
      result.insert(result.end(), layer.begin(), layer.end());
    }
    return result;
  }

  Term random_term(Signature const& sig,
                   std::size_t      variables,
                   std::size_t      max_size,
                   std::mt19937&    rng) {
    std::vector<OpSymbol> leaves, inner;
    for (auto const& op : sig.symbols()) {
      (op.arity == 0 ? leaves : inner).push_back(op);
    }
    if (variables == 0 && leaves.empty()) {
      raise(Errc::invalid_argument, "no closed terms and no variables to build from");
    }
    auto leaf = [&]() {
      std::uniform_int_distribution<std::size_t> pick(0, variables + leaves.size() - 1);
      auto k = pick(rng);
      return k < variables ? Term::var(k) : Term::app(leaves[k - variables].name);
    };
    auto grow = [&](auto& self, std::size_t budget) -> Term {
      std::vector<OpSymbol const*> fits;
      for (auto const& op : inner) {
        if ((op.arity == 1 && budget >= 2) || (op.arity >= 2 && budget >= op.arity)) {
          fits.push_back(&op);
        }
      }
      std::bernoulli_distribution stop(fits.empty() ? 1.0 : 0.35);
      if (budget <= 1 || stop(rng)) {
        return leaf();
      }
      std::uniform_int_distribution<std::size_t> which(0, fits.size() - 1);
      auto const& op = *fits[which(rng)];
      if (op.arity == 1) {
        return Term::app(op.name, {self(self, budget - 1)});
      }
      // split the budget: each argument gets at least one unit
      std::vector<std::size_t> share(op.arity, 1);
      std::uniform_int_distribution<std::size_t> slot(0, op.arity - 1);
      std::uniform_int_distribution<std::size_t> extra(0, budget - op.arity);
      for (auto k = extra(rng); k > 0; --k) {
        ++share[slot(rng)];
      }
      std::vector<Term> args;
      for (auto s : share) {
        args.push_back(self(self, s));
      }
      return Term::app(op.name, std::move(args));
    };
    return grow(grow, max_size);
  }

}  // namespace structura
