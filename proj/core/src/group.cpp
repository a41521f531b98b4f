#include "diagramma/group.hpp"

#include <charconv>

#include "diagramma/error.hpp"

namespace diagramma {

std::string Group::format(Element g) const { return std::to_string(g); }

Element Group::parse(std::string_view text) const {
  Element value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    raise(ErrorCode::invalid_element, "cannot parse '" + std::string(text) + "' in " + name());
  }
  if (!contains(value)) {
    raise(ErrorCode::invalid_element, std::string(text) + " is not an element of " + name());
  }
  return value;
}

Element IntegerGroup::multiply(Element g, Element h) const {
  Element out = 0;
  if (__builtin_add_overflow(g, h, &out)) raise(ErrorCode::overflow, "integer label overflow");
  return out;
}

Element IntegerGroup::invert(Element g) const {
  if (g == INT64_MIN) raise(ErrorCode::overflow, "integer label overflow");
  return -g;
}

bool IntegerGroup::contains(Element g) const { return g != INT64_MIN; }

CyclicGroup::CyclicGroup(std::int64_t order) : order_(order) {
  if (order < 1) raise(ErrorCode::invalid_element, "cyclic group order must be positive");
}

Element CyclicGroup::multiply(Element g, Element h) const {
  return h >= order_ - g ? h - (order_ - g) : g + h;
}

Element CyclicGroup::invert(Element g) const { return g == 0 ? 0 : order_ - g; }

GroupPtr integer_group() {
  static const GroupPtr z = std::make_shared<IntegerGroup>();
  return z;
}

GroupPtr cyclic_group(std::int64_t order) { return std::make_shared<CyclicGroup>(order); }

GroupPtr trivial_group() {
  static const GroupPtr one = std::make_shared<TrivialGroup>();
  return one;
}

GroupAssignment::GroupAssignment(std::vector<GroupPtr> groups) : groups_(std::move(groups)) {
  for (const auto& g : groups_) {
    if (!g) raise(ErrorCode::invalid_element, "null group in assignment");
  }
}

GroupAssignment GroupAssignment::uniform(std::size_t letters, GroupPtr group) {
  return GroupAssignment(std::vector<GroupPtr>(letters, std::move(group)));
}

bool operator==(const GroupAssignment& a, const GroupAssignment& b) {
  if (a.groups_.size() != b.groups_.size()) return false;
  for (std::size_t i = 0; i < a.groups_.size(); ++i) {
    if (a.groups_[i] != b.groups_[i] && a.groups_[i]->name() != b.groups_[i]->name()) return false;
  }
  return true;
}

}  // namespace diagramma
