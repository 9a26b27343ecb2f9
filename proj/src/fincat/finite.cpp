#include "structura/fincat/finite.hpp"

namespace structura {

  std::vector<FinSet::Object> FinSet::objects(std::size_t max_points) const {
    std::vector<Object> result;
    for (std::size_t n = 0; n <= max_points; ++n) {
      result.push_back(n);
    }
    return result;
  }

  std::vector<FinTop::Object> FinTop::objects(std::size_t max_points) const {
    std::vector<Object> result;
    for (std::size_t n = 0; n <= max_points; ++n) {
      auto spaces = all_spaces(n);
      result.insert(result.end(), spaces.begin(), spaces.end());
    }
    return result;
  }

  std::vector<FinDisc::Object> FinDisc::objects(std::size_t max_points) const {
    std::vector<Object> result;
    for (std::size_t n = 0; n <= max_points; ++n) {
      result.push_back(Space::discrete(n));
    }
    return result;
  }

}  // namespace structura
