#include "structura/lawvere/term_eq.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "structura/equational/algebra.hpp"
#include "structura/equational/model_search.hpp"
#include "structura/equational/term_enum.hpp"
#include "structura/error.hpp"

namespace structura {

  namespace {
    [[noreturn]] void foreign(std::string const& oracle, Term const& t) {
      raise(Errc::unknown_symbol,
            "the " + oracle + " oracle does not know '" + t.symbol() + "'");
    }

    void expect_arity(std::string const& oracle, Term const& t, std::size_t n) {
      if (t.args().size() != n) {
        raise(Errc::signature_mismatch,
              oracle + " oracle: '" + t.symbol() + "' applied to "
                  + std::to_string(t.args().size()) + " arguments");
      }
    }

    // x_a, m(x_a, m(x_b, ...)), or e.
    Term right_nested(std::string const&       m,
                      std::string const&       e,
                      std::vector<Term> const& letters) {
      if (letters.empty()) {
        return Term::app(e);
      }
      Term t = letters.back();
      for (auto i = letters.size() - 1; i-- > 0;) {
        t = Term::app(m, {letters[i], t});
      }
      return t;
    }

    class FreeEq final : public TermEq {
     public:
      std::string name() const override {
        return "free";
      }
      Term normalize(Term const& t) const override {
        return t;
      }
    };

    class MonoidEq final : public TermEq {
     public:
      MonoidEq(std::string m, std::string e, bool commutative)
          : _m(std::move(m)), _e(std::move(e)), _commutative(commutative) {}

      std::string name() const override {
        return _commutative ? "comm-monoid" : "monoid";
      }

      Term normalize(Term const& t) const override {
        std::vector<std::size_t> w;
        word(t, w);
        if (_commutative) {
          std::sort(w.begin(), w.end());
        }
        std::vector<Term> letters;
        for (auto v : w) {
          letters.push_back(Term::var(v));
        }
        return right_nested(_m, _e, letters);
      }

     private:
      void word(Term const& t, std::vector<std::size_t>& out) const {
        if (t.is_var()) {
          out.push_back(t.var_index());
        } else if (t.symbol() == _e) {
          expect_arity(name(), t, 0);
        } else if (t.symbol() == _m) {
          expect_arity(name(), t, 2);
          word(t.args()[0], out);
          word(t.args()[1], out);
        } else {
          foreign(name(), t);
        }
      }

      std::string _m, _e;
      bool        _commutative;
    };

    // A letter is a variable index with a sign.
    struct Letter {
      std::size_t var;
      bool        inverse;
      friend bool operator==(Letter const&, Letter const&) = default;
    };

    class GroupEq final : public TermEq {
     public:
      GroupEq(std::string m, std::string e, std::string i, bool abelian)
          : _m(std::move(m)), _e(std::move(e)), _i(std::move(i)), _abelian(abelian) {}

      std::string name() const override {
        return _abelian ? "abelian-group" : "group";
      }

      Term normalize(Term const& t) const override {
        auto w = word(t);
        if (_abelian) {
          std::map<std::size_t, long long> exponent;
          for (auto const& l : w) {
            exponent[l.var] += l.inverse ? -1 : 1;
          }
          w.clear();
          for (auto [v, k] : exponent) {
            for (long long j = 0; j < (k < 0 ? -k : k); ++j) {
              w.push_back({v, k < 0});
            }
          }
        }
        std::vector<Term> letters;
        for (auto const& l : w) {
          auto x = Term::var(l.var);
          letters.push_back(l.inverse ? Term::app(_i, {x}) : x);
        }
        return right_nested(_m, _e, letters);
      }

     private:
      static void append_reduced(std::vector<Letter>& w, Letter l) {
        if (!w.empty() && w.back().var == l.var && w.back().inverse != l.inverse) {
          w.pop_back();
        } else {
          w.push_back(l);
        }
      }

      std::vector<Letter> word(Term const& t) const {
        if (t.is_var()) {
          return {{t.var_index(), false}};
        }
        if (t.symbol() == _e) {
          expect_arity(name(), t, 0);
          return {};
        }
        if (t.symbol() == _m) {
          expect_arity(name(), t, 2);
          auto w = word(t.args()[0]);
          for (auto const& l : word(t.args()[1])) {
            append_reduced(w, l);
          }
          return w;
        }
        if (t.symbol() == _i) {
          expect_arity(name(), t, 1);
          auto w = word(t.args()[0]);
          std::reverse(w.begin(), w.end());
          for (auto& l : w) {
            l.inverse = !l.inverse;
          }
          return w;
        }
        foreign(name(), t);
      }

      std::string _m, _e, _i;
      bool        _abelian;
    };

    using Monomial   = std::vector<std::size_t>;
    struct GradedLex {
      bool operator()(Monomial const& a, Monomial const& b) const {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      }
    };
    using Polynomial = std::map<Monomial, long long, GradedLex>;

    class RingEq final : public TermEq {
     public:
      RingEq(std::string add, std::string mul, std::string neg, std::string zero, std::string one)
          : _add(std::move(add)),
            _mul(std::move(mul)),
            _neg(std::move(neg)),
            _zero(std::move(zero)),
            _one(std::move(one)) {}

      std::string name() const override {
        return "ring";
      }

      Term normalize(Term const& t) const override {
        std::vector<Term> summands;
        for (auto const& [w, c] : poly(t)) {
          std::vector<Term> letters;
          for (auto v : w) {
            letters.push_back(Term::var(v));
          }
          auto const         word = right_nested(_mul, _one, letters);
          std::vector<Term>  copies(static_cast<std::size_t>(c < 0 ? -c : c), word);
          Term               sum = right_nested(_add, _zero, copies);
          summands.push_back(c < 0 ? Term::app(_neg, {sum}) : sum);
        }
        return right_nested(_add, _zero, summands);
      }

     private:
      static void prune(Polynomial& p) {
        std::erase_if(p, [](auto const& kv) { return kv.second == 0; });
      }

      Polynomial poly(Term const& t) const {
        if (t.is_var()) {
          return {{{t.var_index()}, 1}};
        }
        auto const& s = t.symbol();
        if (s == _zero) {
          expect_arity(name(), t, 0);
          return {};
        }
        if (s == _one) {
          expect_arity(name(), t, 0);
          return {{{}, 1}};
        }
        if (s == _neg) {
          expect_arity(name(), t, 1);
          auto p = poly(t.args()[0]);
          for (auto& kv : p) {
            kv.second = -kv.second;
          }
          return p;
        }
        if (s == _add) {
          expect_arity(name(), t, 2);
          auto p = poly(t.args()[0]);
          for (auto const& [w, c] : poly(t.args()[1])) {
            p[w] += c;
          }
          prune(p);
          return p;
        }
        if (s == _mul) {
          expect_arity(name(), t, 2);
          auto const a = poly(t.args()[0]);
          auto const b = poly(t.args()[1]);
          Polynomial p;
          for (auto const& [u, c] : a) {
            for (auto const& [v, d] : b) {
              Monomial w = u;
              w.insert(w.end(), v.begin(), v.end());
              p[w] += c * d;
            }
          }
          prune(p);
          return p;
        }
        foreign(name(), t);
      }

      std::string _add, _mul, _neg, _zero, _one;
    };

    class BoundedSemanticEq final : public TermEq {
     public:
      BoundedSemanticEq(Presentation p, std::size_t max_carrier)
          : _p(std::move(p)) {
        for (auto& a : enumerate_models(_p, max_carrier)) {
          if (a.carrier() > 0) {
            _models.push_back(std::move(a));
          }
        }
      }

      std::string name() const override {
        return "bounded-semantic";
      }
      bool complete() const override {
        return false;
      }

      Term normalize(Term const& t) const override {
        _p.signature().check(t);
        std::lock_guard lock(_mutex);
        if (auto it = _normal.find(t); it != _normal.end()) {
          return it->second;
        }
        auto const k      = t.variable_bound();
        auto const target = fingerprint(t, k);
        Term       best   = t;
        for (std::size_t s = 1; s <= t.size(); ++s) {
          auto const& layer = candidates(k, s);
          auto it = std::find_if(layer.begin(), layer.end(), [&](auto const& c) {
            return c.second == target;
          });
          if (it != layer.end()) {
            best = it->first;
            break;
          }
        }
        _normal.emplace(t, best);
        return best;
      }

     private:
      using Fingerprint = std::vector<std::size_t>;

      Fingerprint fingerprint(Term const& t, std::size_t k) const {
        Fingerprint fp;
        for (auto const& a : _models) {
          auto const total = power(a.carrier(), k);
          for (std::size_t j = 0; j < total; ++j) {
            auto asg = tuple_at(j, k, a.carrier());
            fp.push_back(evaluate(t, a, asg));
          }
        }
        return fp;
      }

      std::vector<std::pair<Term, Fingerprint>> const& candidates(std::size_t k,
                                                                  std::size_t s) const {
        auto key = std::pair{k, s};
        if (auto it = _layers.find(key); it != _layers.end()) {
          return it->second;
        }
        std::vector<std::pair<Term, Fingerprint>> layer;
        for (auto const& c : terms_of_size(_p.signature(), k, s)) {
          layer.emplace_back(c, fingerprint(c, k));
        }
        return _layers.emplace(key, std::move(layer)).first->second;
      }

      Presentation            _p;
      std::vector<FinAlgebra> _models;
      mutable std::mutex      _mutex;
      mutable std::map<Term, Term> _normal;
      mutable std::map<std::pair<std::size_t, std::size_t>,
                       std::vector<std::pair<Term, Fingerprint>>>
          _layers;
    };
  }  // namespace

  TermEqPtr free_term_eq() {
    return std::make_shared<FreeEq>();
  }
  TermEqPtr monoid_term_eq(std::string m, std::string e) {
    return std::make_shared<MonoidEq>(std::move(m), std::move(e), false);
  }
  TermEqPtr comm_monoid_term_eq(std::string m, std::string e) {
    return std::make_shared<MonoidEq>(std::move(m), std::move(e), true);
  }
  TermEqPtr group_term_eq(std::string m, std::string e, std::string i) {
    return std::make_shared<GroupEq>(std::move(m), std::move(e), std::move(i), false);
  }
  TermEqPtr abelian_group_term_eq(std::string m, std::string e, std::string i) {
    return std::make_shared<GroupEq>(std::move(m), std::move(e), std::move(i), true);
  }
  TermEqPtr ring_term_eq(std::string add,
                         std::string mul,
                         std::string neg,
                         std::string zero,
                         std::string one) {
    return std::make_shared<RingEq>(std::move(add), std::move(mul), std::move(neg),
                                    std::move(zero), std::move(one));
  }
  TermEqPtr bounded_semantic_term_eq(Presentation p, std::size_t max_carrier) {
    return std::make_shared<BoundedSemanticEq>(std::move(p), max_carrier);
  }

}  // namespace structura
