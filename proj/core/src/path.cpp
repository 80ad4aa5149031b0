#include "sphereworld/path.hpp"

#include <stdexcept>

namespace sphereworld {

const Configuration& PiecewisePath::start() const {
  if (segments.empty() || segments.front().samples.empty()) {
    throw std::logic_error("empty path has no start");
  }
  return segments.front().samples.front();
}

const Configuration& PiecewisePath::end() const {
  if (segments.empty() || segments.back().samples.empty()) {
    throw std::logic_error("empty path has no end");
  }
  return segments.back().samples.back();
}

std::size_t PiecewisePath::total_samples() const {
  std::size_t n = 0;
  for (const PathSegment& s : segments) n += s.samples.size();
  return n;
}

}  // namespace sphereworld
