#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace structura {

  using Point = std::size_t;

  // A finite topological space, stored as its specialization preorder:
  // opens are the up-sets, continuity is monotonicity.  Antisymmetry is not
  // required, so non-T0 spaces are representable.  Immutable and shared.
  class Space {
   public:
    Space();

    static Space discrete(std::size_t n);
    // Reflexive-transitive closure of the generating pairs (a <= b).
    static Space from_order(std::size_t                            n,
                            std::span<std::pair<Point, Point> const> generators);
    // `relation` is n x n row-major; throws InvalidArgument unless it is
    // reflexive and transitive.
    static Space from_relation(std::size_t n, std::vector<bool> relation);

    std::size_t size() const noexcept;
    bool        leq(Point a, Point b) const;
    bool        is_discrete() const noexcept;
    // Number of pairs (a, b) with a <= b, reflexive ones included.
    std::size_t relation_pairs() const noexcept;

    std::vector<bool> const& relation() const noexcept;
    // Pairs a <= b with a != b.
    std::vector<std::pair<Point, Point>> strict_pairs() const;

    friend bool operator==(Space const& lhs, Space const& rhs) noexcept;
    friend std::strong_ordering operator<=>(Space const& lhs,
                                            Space const& rhs) noexcept;

   private:
    struct Data {
      std::size_t       n;
      std::vector<bool> rel;
    };
    explicit Space(std::shared_ptr<Data const> data) : _data(std::move(data)) {}
    std::shared_ptr<Data const> _data;
  };

  std::string to_string(Space const& s);

  // Product space with the componentwise order; point index is row-major in
  // the factors (the last factor varies fastest).
  Space product_space(std::span<Space const> factors);

  // Connected components of the comparability graph, each sorted, ordered by
  // least member.
  std::vector<std::vector<Point>> pi0(Space const& s);
  // Component number of every point, numbering as in pi0.
  std::vector<std::size_t> component_index(Space const& s);

  // Every preorder on n labelled points, in increasing order of the
  // off-diagonal relation bits.
  std::vector<Space> all_spaces(std::size_t n);

}  // namespace structura
