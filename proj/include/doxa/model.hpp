#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "doxa/alphabet.hpp"

namespace doxa {

// A total truth assignment over the first `width` variables of an alphabet,
// packed into a word: bit v set means variable v is true.
class Model {
 public:
  Model(std::uint32_t bits, int width);

  bool test(std::size_t var) const { return (bits_ >> var) & 1u; }
  std::uint32_t bits() const { return bits_; }
  int width() const { return width_; }

  // "{a,c}" with true variables in alphabet order, "{}" when all-false
  std::string to_string(const Alphabet& alphabet) const;

  friend auto operator<=>(const Model&, const Model&) = default;

 private:
  std::uint32_t bits_;
  int width_;
};

// Parses a model literal such as "{a,c}" or "{}".
Model parse_model(std::string_view text, const Alphabet& alphabet);

// A set of assignments of fixed width, stored as sorted codes.  Iteration
// order is ascending numeric, which fixes all rendering orders downstream.
class ModelSet {
 public:
  ModelSet() : width_(0) {}
  explicit ModelSet(int width) : width_(width) {}
  ModelSet(int width, std::vector<std::uint32_t> codes);

  static ModelSet full(int width);

  int width() const { return width_; }
  bool empty() const { return codes_.empty(); }
  std::size_t size() const { return codes_.size(); }
  bool contains(std::uint32_t code) const;
  bool contains(const Model& m) const { return contains(m.bits()); }
  const std::vector<std::uint32_t>& codes() const { return codes_; }
  Model model(std::size_t i) const { return Model(codes_[i], width_); }

  ModelSet complement() const;

  friend bool operator==(const ModelSet&, const ModelSet&) = default;

 private:
  int width_;
  std::vector<std::uint32_t> codes_;
};

ModelSet intersection(const ModelSet& a, const ModelSet& b);
ModelSet difference(const ModelSet& a, const ModelSet& b);
ModelSet set_union(const ModelSet& a, const ModelSet& b);
bool subset(const ModelSet& a, const ModelSet& b);

}  // namespace doxa
