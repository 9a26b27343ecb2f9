#include "structura/fincat/space.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "structura/error.hpp"

namespace structura {

  namespace {
    bool is_preorder(std::size_t n, std::vector<bool> const& rel) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!rel[a * n + a]) {
          return false;
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (!rel[a * n + b]) {
            continue;
          }
          for (std::size_t c = 0; c < n; ++c) {
            if (rel[b * n + c] && !rel[a * n + c]) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  Space::Space() : _data(std::make_shared<Data const>(Data{0, {}})) {}

  Space Space::discrete(std::size_t n) {
    std::vector<bool> rel(n * n, false);
    for (std::size_t a = 0; a < n; ++a) {
      rel[a * n + a] = true;
    }
    return Space(std::make_shared<Data const>(Data{n, std::move(rel)}));
  }

  Space Space::from_order(std::size_t                              n,
                          std::span<std::pair<Point, Point> const> generators) {
    std::vector<bool> rel(n * n, false);
    for (std::size_t a = 0; a < n; ++a) {
      rel[a * n + a] = true;
    }
    for (auto [a, b] : generators) {
      if (a >= n || b >= n) {
        raise(Errc::invalid_argument, "order pair refers to a missing point");
      }
      rel[a * n + b] = true;
    }
    // Warshall
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t a = 0; a < n; ++a) {
        if (!rel[a * n + k]) {
          continue;
        }
        for (std::size_t b = 0; b < n; ++b) {
          if (rel[k * n + b]) {
            rel[a * n + b] = true;
          }
        }
      }
    }
    return Space(std::make_shared<Data const>(Data{n, std::move(rel)}));
  }

  Space Space::from_relation(std::size_t n, std::vector<bool> relation) {
    if (relation.size() != n * n || !is_preorder(n, relation)) {
      raise(Errc::invalid_argument,
            "relation is not a preorder on " + std::to_string(n) + " points");
    }
    return Space(std::make_shared<Data const>(Data{n, std::move(relation)}));
  }

  std::size_t Space::size() const noexcept {
    return _data->n;
  }

  bool Space::leq(Point a, Point b) const {
    return _data->rel[a * _data->n + b];
  }

  bool Space::is_discrete() const noexcept {
    return relation_pairs() == _data->n;
  }

  std::size_t Space::relation_pairs() const noexcept {
    return static_cast<std::size_t>(
        std::count(_data->rel.begin(), _data->rel.end(), true));
  }

  std::vector<bool> const& Space::relation() const noexcept {
    return _data->rel;
  }

  std::vector<std::pair<Point, Point>> Space::strict_pairs() const {
    std::vector<std::pair<Point, Point>> result;
    for (Point a = 0; a < size(); ++a) {
      for (Point b = 0; b < size(); ++b) {
        if (a != b && leq(a, b)) {
          result.emplace_back(a, b);
        }
      }
    }
    return result;
  }

  bool operator==(Space const& lhs, Space const& rhs) noexcept {
    return lhs._data == rhs._data
           || (lhs._data->n == rhs._data->n && lhs._data->rel == rhs._data->rel);
  }

  std::strong_ordering operator<=>(Space const& lhs, Space const& rhs) noexcept {
    if (auto c = lhs._data->n <=> rhs._data->n; c != 0) {
      return c;
    }
    auto const& a = lhs._data->rel;
    auto const& b = rhs._data->rel;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) {
        return a[i] ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string to_string(Space const& s) {
    std::ostringstream os;
    os << "Space(" << s.size();
    bool first = true;
    for (auto [a, b] : s.strict_pairs()) {
      os << (first ? "; " : ",") << a << "<=" << b;
      first = false;
    }
    os << ')';
    return os.str();
  }

  Space product_space(std::span<Space const> factors) {
    std::size_t n = 1;
    for (auto const& f : factors) {
      n *= f.size();
    }
    auto coords = [&](std::size_t p) {
      std::vector<Point> c(factors.size());
      for (std::size_t i = factors.size(); i-- > 0;) {
        c[i] = p % factors[i].size();
        p /= factors[i].size();
      }
      return c;
    };
    std::vector<std::vector<Point>> all(n);
    for (std::size_t p = 0; p < n; ++p) {
      all[p] = coords(p);
    }
    std::vector<bool> rel(n * n, false);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        bool le = true;
        for (std::size_t i = 0; i < factors.size() && le; ++i) {
          le = factors[i].leq(all[p][i], all[q][i]);
        }
        rel[p * n + q] = le;
      }
    }
    return Space::from_relation(n, std::move(rel));
  }

  std::vector<std::size_t> component_index(Space const& s) {
    auto const               n = s.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (Point a = 0; a < n; ++a) {
      for (Point b = 0; b < n; ++b) {
        if (s.leq(a, b)) {
          auto ra = find(a), rb = find(b);
          if (ra != rb) {
            parent[std::max(ra, rb)] = std::min(ra, rb);
          }
        }
      }
    }
    std::vector<std::size_t> result(n);
    std::vector<std::size_t> number(n, n);
    std::size_t              next = 0;
    for (Point a = 0; a < n; ++a) {
      auto r = find(a);
      if (number[r] == n) {
        number[r] = next++;
      }
      result[a] = number[r];
    }
    return result;
  }

  std::vector<std::vector<Point>> pi0(Space const& s) {
    auto                            index = component_index(s);
    std::vector<std::vector<Point>> result;
    for (Point a = 0; a < s.size(); ++a) {
      if (index[a] == result.size()) {
        result.emplace_back();
      }
      result[index[a]].push_back(a);
    }
    return result;
  }

  std::vector<Space> all_spaces(std::size_t n) {
    std::vector<std::pair<Point, Point>> off;
    for (Point a = 0; a < n; ++a) {
      for (Point b = 0; b < n; ++b) {
        if (a != b) {
          off.emplace_back(a, b);
        }
      }
    }
    if (off.size() > 20) {
      raise(Errc::bound_exceeded,
            "refusing to enumerate preorders on " + std::to_string(n) + " points");
    }
    std::vector<Space> result;
    for (std::size_t mask = 0; mask < (std::size_t(1) << off.size()); ++mask) {
      std::vector<bool> rel(n * n, false);
      for (Point a = 0; a < n; ++a) {
        rel[a * n + a] = true;
      }
      for (std::size_t k = 0; k < off.size(); ++k) {
        if (mask >> k & 1) {
          rel[off[k].first * n + off[k].second] = true;
        }
      }
      if (is_preorder(n, rel)) {
        result.push_back(Space::from_relation(n, std::move(rel)));
      }
    }
    return result;
  }

}  // namespace structura
