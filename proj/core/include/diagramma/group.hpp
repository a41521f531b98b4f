#pragma once

// Groups attached to the letters of a presentation. Elements are 64-bit
// integers interpreted by the owning group.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "diagramma/diagram.hpp"

namespace diagramma {

class Group {
 public:
  virtual ~Group() = default;

  /// Short identifier used for compatibility checks, e.g. "Z", "Z/5", "1".
  virtual std::string name() const = 0;

  virtual Element identity() const = 0;
  virtual Element multiply(Element g, Element h) const = 0;
  virtual Element invert(Element g) const = 0;
  virtual bool contains(Element g) const = 0;

  bool equals(Element g, Element h) const { return g == h; }
  bool is_identity(Element g) const { return g == identity(); }

  virtual std::string format(Element g) const;
  /// Throws InvalidElement.
  virtual Element parse(std::string_view text) const;
};

using GroupPtr = std::shared_ptr<const Group>;

/// (Z, +); multiplication throws Overflow instead of wrapping.
class IntegerGroup final : public Group {
 public:
  std::string name() const override { return "Z"; }
  Element identity() const override { return 0; }
  Element multiply(Element g, Element h) const override;
  Element invert(Element g) const override;
  bool contains(Element g) const override;
};

/// Z/m with representatives 0..m-1.
class CyclicGroup final : public Group {
 public:
  explicit CyclicGroup(std::int64_t order);

  std::int64_t order() const noexcept { return order_; }
  std::string name() const override { return "Z/" + std::to_string(order_); }
  Element identity() const override { return 0; }
  Element multiply(Element g, Element h) const override;
  Element invert(Element g) const override;
  bool contains(Element g) const override { return g >= 0 && g < order_; }

 private:
  std::int64_t order_;
};

class TrivialGroup final : public Group {
 public:
  std::string name() const override { return "1"; }
  Element identity() const override { return 0; }
  Element multiply(Element, Element) const override { return 0; }
  Element invert(Element) const override { return 0; }
  bool contains(Element g) const override { return g == 0; }
};

GroupPtr integer_group();
GroupPtr cyclic_group(std::int64_t order);
GroupPtr trivial_group();

/// One group per letter of a presentation.
class GroupAssignment final : public LabelAlgebra {
 public:
  GroupAssignment() = default;
  explicit GroupAssignment(std::vector<GroupPtr> groups);
  static GroupAssignment uniform(std::size_t letters, GroupPtr group);

  std::size_t size() const noexcept { return groups_.size(); }
  const Group& group(Letter letter) const { return *groups_.at(letter); }
  const GroupPtr& group_ptr(Letter letter) const { return groups_.at(letter); }

  Element multiply(Letter letter, Element upper, Element lower) const override {
    return group(letter).multiply(upper, lower);
  }
  Element invert(Letter letter, Element e) const override { return group(letter).invert(e); }
  bool is_identity(Letter letter, Element e) const override {
    return group(letter).is_identity(e);
  }

  /// Same group names letter by letter.
  friend bool operator==(const GroupAssignment& a, const GroupAssignment& b);

 private:
  std::vector<GroupPtr> groups_;
};

}  // namespace diagramma
