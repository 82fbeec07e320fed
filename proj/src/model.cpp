#include "doxa/model.hpp"

#include <algorithm>
#include <cassert>

#include "doxa/error.hpp"

namespace doxa {

Model::Model(std::uint32_t bits, int width) : bits_(bits), width_(width) {
  assert(width >= 0 && width < 31);
  assert(width == 31 || bits < (std::uint32_t{1} << width));
}

std::string Model::to_string(const Alphabet& alphabet) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t v = 0; v < static_cast<std::size_t>(width_); ++v) {
    if (!test(v)) continue;
    if (!first) out += ",";
    out += alphabet.name(v);
    first = false;
  }
  out += "}";
  return out;
}

Model parse_model(std::string_view text, const Alphabet& alphabet) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto fail = [&](const std::string& message) -> Model {
    throw ParseError(message, 1, pos + 1);
  };

  skip_space();
  if (pos >= text.size() || text[pos] != '{') return fail("expected '{'");
  ++pos;
  std::uint32_t bits = 0;
  skip_space();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    for (;;) {
      skip_space();
      std::size_t start = pos;
      while (pos < text.size() &&
             ((text[pos] >= 'a' && text[pos] <= 'z') ||
              (text[pos] >= '0' && text[pos] <= '9') || text[pos] == '_'))
        ++pos;
      if (pos == start) return fail("expected variable name");
      std::string_view name = text.substr(start, pos - start);
      auto index = alphabet.index(name);
      if (!index) throw UnknownVariableError(std::string(name), 1, start + 1);
      bits |= std::uint32_t{1} << *index;
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      return fail("expected ',' or '}'");
    }
  }
  skip_space();
  if (pos != text.size()) return fail("trailing characters after model");
  return Model(bits, static_cast<int>(alphabet.size()));
}

ModelSet::ModelSet(int width, std::vector<std::uint32_t> codes)
    : width_(width), codes_(std::move(codes)) {
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
  assert(width_ >= 0 && width_ < 31);
  assert(codes_.empty() || codes_.back() < (std::uint32_t{1} << width_));
}

ModelSet ModelSet::full(int width) {
  assert(width >= 0 && width < 31);
  std::vector<std::uint32_t> codes(std::size_t{1} << width);
  for (std::size_t i = 0; i < codes.size(); ++i) codes[i] = static_cast<std::uint32_t>(i);
  return ModelSet(width, std::move(codes));
}

bool ModelSet::contains(std::uint32_t code) const {
  return std::binary_search(codes_.begin(), codes_.end(), code);
}

ModelSet ModelSet::complement() const {
  ModelSet out(width_);
  out.codes_.reserve((std::size_t{1} << width_) - codes_.size());
  std::size_t k = 0;
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << width_); ++code) {
    if (k < codes_.size() && codes_[k] == code) {
      ++k;
    } else {
      out.codes_.push_back(code);
    }
  }
  return out;
}

ModelSet intersection(const ModelSet& a, const ModelSet& b) {
  assert(a.width() == b.width());
  std::vector<std::uint32_t> codes;
  std::set_intersection(a.codes().begin(), a.codes().end(), b.codes().begin(),
                        b.codes().end(), std::back_inserter(codes));
  return ModelSet(a.width(), std::move(codes));
}

ModelSet difference(const ModelSet& a, const ModelSet& b) {
  assert(a.width() == b.width());
  std::vector<std::uint32_t> codes;
  std::set_difference(a.codes().begin(), a.codes().end(), b.codes().begin(),
                      b.codes().end(), std::back_inserter(codes));
  return ModelSet(a.width(), std::move(codes));
}

ModelSet set_union(const ModelSet& a, const ModelSet& b) {
  assert(a.width() == b.width());
  std::vector<std::uint32_t> codes;
  std::set_union(a.codes().begin(), a.codes().end(), b.codes().begin(),
                 b.codes().end(), std::back_inserter(codes));
  return ModelSet(a.width(), std::move(codes));
}

bool subset(const ModelSet& a, const ModelSet& b) {
  assert(a.width() == b.width());
  return std::includes(b.codes().begin(), b.codes().end(), a.codes().begin(),
                       a.codes().end());
}

}  // namespace doxa
