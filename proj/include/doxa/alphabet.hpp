#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace doxa {

// Model enumeration walks all 2^n assignments; beyond this many variables it
// is refused unless the caller raises the bound explicitly.
inline constexpr std::size_t kDefaultEnumerationBound = 20;

// An ordered list of distinct propositional variables.  The position of a
// name is its index everywhere else: in formulas, models and Horn clauses.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  // [a-z][a-z0-9_]*, not "true"/"false"
  static bool valid_identifier(std::string_view name);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_[index]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace doxa
