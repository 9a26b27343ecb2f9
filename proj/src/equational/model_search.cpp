#include "structura/equational/model_search.hpp"

#include <algorithm>
#include <numeric>

#include "structura/error.hpp"

namespace structura {

  namespace {
    constexpr int undefined = -1;

    struct Compiled {
      int                   var = -1;  // >= 0 for variables
      std::size_t           symbol = 0;
      std::vector<Compiled> args;
    };

    Compiled compile(Term const& t, Signature const& sig) {
      Compiled c;
      if (t.is_var()) {
        c.var = static_cast<int>(t.var_index());
        return c;
      }
      c.symbol = sig.index(t.symbol());
      for (auto const& a : t.args()) {
        c.args.push_back(compile(a, sig));
      }
      return c;
    }

    struct Instance {
      Compiled const*  lhs;
      Compiled const*  rhs;
      std::vector<int> assignment;
    };

    struct Entry {
      std::size_t symbol;
      std::size_t input;
    };

    class Search {
     public:
      Search(Presentation const&      p,
             std::size_t              n,
             std::vector<bool> const* order,
             SearchBounds const&      bounds)
          : _p(p), _n(n), _order(order), _bounds(bounds) {
        auto const& symbols = p.signature().symbols();
        _tables.resize(symbols.size());
        for (std::size_t s = 0; s < symbols.size(); ++s) {
          _tables[s].assign(power(n, symbols[s].arity), undefined);
        }
        std::vector<std::size_t> by_arity(symbols.size());
        std::iota(by_arity.begin(), by_arity.end(), 0);
        std::stable_sort(by_arity.begin(), by_arity.end(), [&](auto a, auto b) {
          return symbols[a].arity < symbols[b].arity;
        });
        for (auto s : by_arity) {
          for (std::size_t k = 0; k < _tables[s].size(); ++k) {
            _entries.push_back({s, k});
          }
        }
        for (auto const& id : p.identities()) {
          _sides.push_back(compile(id.lhs(), p.signature()));
          _sides.push_back(compile(id.rhs(), p.signature()));
        }
        for (std::size_t i = 0; i < p.identities().size(); ++i) {
          auto const m     = p.identities()[i].context();
          auto const total = power(n, m);
          for (std::size_t k = 0; k < total && n > 0; ++k) {
            auto asg = tuple_at(k, m, n);
            _instances.push_back({&_sides[2 * i],
                                  &_sides[2 * i + 1],
                                  std::vector<int>(asg.begin(), asg.end())});
          }
        }
        if (order != nullptr) {
          build_order_pairs();
        }
      }

      std::vector<FinAlgebra> run() {
        descend(0);
        return std::move(_results);
      }

     private:
      bool leq(std::size_t a, std::size_t b) const {
        return (*_order)[a * _n + b];
      }

      // For entry e, the earlier entries of the same symbol that are
      // comparable with it, tagged with the direction of comparison.
      void build_order_pairs() {
        _comparable.resize(_entries.size());
        std::vector<std::size_t> first_of(_tables.size(), 0);
        for (std::size_t e = _entries.size(); e-- > 0;) {
          first_of[_entries[e].symbol] = e;
        }
        for (std::size_t e = 0; e < _entries.size(); ++e) {
          auto const sym   = _entries[e].symbol;
          auto const arity = _p.signature().symbols()[sym].arity;
          auto const v     = tuple_at(_entries[e].input, arity, _n);
          for (std::size_t f = first_of[sym]; f < e; ++f) {
            auto const u  = tuple_at(_entries[f].input, arity, _n);
            bool       le = true, ge = true;
            for (std::size_t j = 0; j < arity; ++j) {
              le = le && leq(u[j], v[j]);
              ge = ge && leq(v[j], u[j]);
            }
            if (le) {
              _comparable[e].push_back({f, true});
            }
            if (ge) {
              _comparable[e].push_back({f, false});
            }
          }
        }
      }

      int eval(Compiled const& c, std::vector<int> const& asg) const {
        if (c.var >= 0) {
          return asg[c.var];
        }
        std::size_t index = 0;
        for (auto const& a : c.args) {
          int v = eval(a, asg);
          if (v == undefined) {
            return undefined;
          }
          index = index * _n + static_cast<std::size_t>(v);
        }
        return _tables[c.symbol][index];
      }

      bool consistent(std::size_t e) const {
        if (_order != nullptr) {
          auto const value = static_cast<std::size_t>(
              _tables[_entries[e].symbol][_entries[e].input]);
          for (auto const& [f, below] : _comparable[e]) {
            auto other = static_cast<std::size_t>(
                _tables[_entries[f].symbol][_entries[f].input]);
            if (below ? !leq(other, value) : !leq(value, other)) {
              return false;
            }
          }
        }
        for (auto const& inst : _instances) {
          int l = eval(*inst.lhs, inst.assignment);
          if (l == undefined) {
            continue;
          }
          int r = eval(*inst.rhs, inst.assignment);
          if (r != undefined && l != r) {
            return false;
          }
        }
        return true;
      }

      void descend(std::size_t e) {
        if (_bounds.max_nodes != 0 && ++_nodes > _bounds.max_nodes) {
          raise(Errc::bound_exceeded,
                "model search for '" + _p.name() + "' on "
                    + std::to_string(_n) + " points exceeded "
                    + std::to_string(_bounds.max_nodes) + " nodes");
        }
        if (e == _entries.size()) {
          std::vector<std::vector<std::size_t>> tables;
          for (auto const& t : _tables) {
            tables.emplace_back(t.begin(), t.end());
          }
          _results.emplace_back(_p.signature(), _n, std::move(tables));
          return;
        }
        auto& slot = _tables[_entries[e].symbol][_entries[e].input];
        for (std::size_t v = 0; v < _n; ++v) {
          slot = static_cast<int>(v);
          if (consistent(e)) {
            descend(e + 1);
          }
        }
        slot = undefined;
      }

      Presentation const&                           _p;
      std::size_t                                   _n;
      std::vector<bool> const*                      _order;
      SearchBounds                                  _bounds;
      std::vector<std::vector<int>>                 _tables;
      std::vector<Entry>                            _entries;
      std::vector<Compiled>                         _sides;
      std::vector<Instance>                         _instances;
      std::vector<std::vector<std::pair<std::size_t, bool>>> _comparable;
      std::vector<FinAlgebra>                       _results;
      std::size_t                                   _nodes = 0;
    };
  }  // namespace

  std::vector<FinAlgebra> enumerate_algebras(Presentation const&      p,
                                             std::size_t              carrier,
                                             std::vector<bool> const* order,
                                             SearchBounds const&      bounds) {
    if (carrier > bounds.max_carrier) {
      raise(Errc::bound_exceeded,
            "carrier of " + std::to_string(carrier) + " points exceeds the bound "
                + std::to_string(bounds.max_carrier));
    }
    if (p.signature().max_arity() > bounds.max_arity) {
      raise(Errc::bound_exceeded,
            "arity " + std::to_string(p.signature().max_arity())
                + " exceeds the enumeration bound "
                + std::to_string(bounds.max_arity));
    }
    if (p.max_context() > bounds.max_variables) {
      raise(Errc::bound_exceeded,
            "identity with " + std::to_string(p.max_context())
                + " variables exceeds the enumeration bound "
                + std::to_string(bounds.max_variables));
    }
    if (order != nullptr && order->size() != carrier * carrier) {
      raise(Errc::invalid_argument, "order relation has the wrong size");
    }
    if (carrier == 0 && p.signature().has_constants()) {
      return {};
    }
    return Search(p, carrier, order, bounds).run();
  }

  std::vector<FinAlgebra> enumerate_models(Presentation const& p,
                                           std::size_t         max_carrier,
                                           SearchBounds const& bounds) {
    std::vector<FinAlgebra> result;
    std::size_t const       first = p.signature().has_constants() ? 1 : 0;
    for (std::size_t n = first; n <= max_carrier; ++n) {
      auto models = enumerate_algebras(p, n, nullptr, bounds);
      result.insert(result.end(),
                    std::make_move_iterator(models.begin()),
                    std::make_move_iterator(models.end()));
    }
    return result;
  }

}  // namespace structura
