#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace stochstab {

/// A non-empty set of original state names, kept sorted and duplicate-free
/// so that equality and ordering are structural.
class StateSet {
 public:
  explicit StateSet(std::string name);
  explicit StateSet(std::vector<std::string> names);
  StateSet(std::initializer_list<std::string> names) : StateSet(std::vector<std::string>(names)) {}

  /// Disjoint union; throws std::invalid_argument on overlap or empty input.
  static StateSet merge(std::span<const StateSet> parts);

  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }
  bool contains(const std::string& name) const;

  /// "x" for singletons, "{x,y}" otherwise.
  std::string label() const;

  friend bool operator==(const StateSet&, const StateSet&) = default;
  friend auto operator<=>(const StateSet&, const StateSet&) = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace stochstab
