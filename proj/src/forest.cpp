#include "siso/forest.hpp"

#include "siso/errors.hpp"

namespace siso {

const MetricTree& Forest::tree(int c) const {
  require(c >= 0 && c < size(), Errc::bad_index, "component id out of range");
  return trees[c];
}

const std::string& Forest::name(int c) const {
  require(c >= 0 && c < static_cast<int>(names.size()), Errc::bad_index,
          "component id out of range");
  return names[c];
}

Scalar Forest::total_length() const {
  Scalar s;
  for (const MetricTree& t : trees) s += t.total_length();
  return s;
}

std::string Loc::str() const {
  return "c" + std::to_string(component) + ":" + p.str();
}

}  // namespace siso
