#include "stochstab/state_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace stochstab {

StateSet::StateSet(std::string name) {
  names_.push_back(std::move(name));
}

StateSet::StateSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("empty state set");
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
}

StateSet StateSet::merge(std::span<const StateSet> parts) {
  std::vector<std::string> all;
  for (const auto& p : parts) all.insert(all.end(), p.names_.begin(), p.names_.end());
  const std::size_t total = all.size();
  StateSet out(std::move(all));
  if (out.size() != total) throw std::invalid_argument("merging overlapping state sets");
  return out;
}

bool StateSet::contains(const std::string& name) const {
  return std::binary_search(names_.begin(), names_.end(), name);
}

std::string StateSet::label() const {
  if (names_.size() == 1) return names_.front();
  std::string out = "{";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ',';
    out += names_[i];
  }
  return out + "}";
}

}  // namespace stochstab
