#include "doxa/alphabet.hpp"

#include "doxa/error.hpp"

namespace doxa {

bool Alphabet::valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name.substr(1)) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return name != "true" && name != "false";
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_identifier(names_[i]))
      throw AlphabetError("invalid variable name '" + names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw AlphabetError("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> Alphabet::index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace doxa
