#include "doxa/state.hpp"

#include <algorithm>
#include <cassert>

#include "doxa/error.hpp"

namespace doxa {

const char* comparison_name(Comparison c) {
  switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Equal: return "equal";
    case Comparison::Greater: return "greater";
  }
  return "";
}

DoxasticState DoxasticState::flat(const Alphabet& alphabet, std::size_t enum_bound) {
  if (alphabet.size() > enum_bound)
    throw EnumerationBoundExceeded(alphabet.size(), enum_bound);
  const int width = static_cast<int>(alphabet.size());
  return DoxasticState(width, {ModelSet::full(width)});
}

DoxasticState DoxasticState::from_formula(const Formula& f, const Alphabet& alphabet,
                                          std::size_t enum_bound) {
  ModelSet inside = models(f, alphabet, enum_bound);
  ModelSet outside = inside.complement();
  return from_classes(static_cast<int>(alphabet.size()),
                      {std::move(inside), std::move(outside)});
}

DoxasticState DoxasticState::from_classes(int width, std::vector<ModelSet> classes) {
  std::erase_if(classes, [](const ModelSet& c) { return c.empty(); });
  std::size_t total = 0;
  std::vector<std::uint32_t> all;
  for (const ModelSet& c : classes) {
    if (c.width() != width) throw Error("class width does not match the state");
    total += c.size();
    all.insert(all.end(), c.codes().begin(), c.codes().end());
  }
  if (total != (std::size_t{1} << width))
    throw Error("classes do not cover every assignment exactly once");
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != i) throw Error("classes do not cover every assignment exactly once");
  return DoxasticState(width, std::move(classes));
}

std::size_t DoxasticState::class_of(const Model& m) const {
  assert(m.width() == width_);
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].contains(m)) return i;
  assert(false);  // partition invariant
  return classes_.size();
}

Comparison DoxasticState::compare(const Model& i, const Model& j) const {
  const std::size_t ci = class_of(i);
  const std::size_t cj = class_of(j);
  if (ci < cj) return Comparison::Less;
  if (ci > cj) return Comparison::Greater;
  return Comparison::Equal;
}

std::size_t DoxasticState::imin(const ModelSet& a) const {
  assert(a.width() == width_);
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (!intersection(classes_[i], a).empty()) return i;
  throw InconsistentRevision();
}

std::size_t DoxasticState::imax(const ModelSet& a) const {
  assert(a.width() == width_);
  for (std::size_t i = classes_.size(); i-- > 0;)
    if (!intersection(classes_[i], a).empty()) return i;
  throw InconsistentRevision();
}

ModelSet DoxasticState::min_models(const ModelSet& a) const {
  return intersection(classes_[imin(a)], a);
}

ModelSet DoxasticState::max_models(const ModelSet& a) const {
  return intersection(classes_[imax(a)], a);
}

ModelSet DoxasticState::min_models(const Formula& a, const Alphabet& alphabet,
                                   std::size_t enum_bound) const {
  return min_models(models(a, alphabet, enum_bound));
}

ModelSet DoxasticState::max_models(const Formula& a, const Alphabet& alphabet,
                                   std::size_t enum_bound) const {
  return max_models(models(a, alphabet, enum_bound));
}

std::string DoxasticState::to_string(const Alphabet& alphabet) const {
  std::string out = "[ ";
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i > 0) out += " | ";
    for (std::size_t k = 0; k < classes_[i].size(); ++k) {
      if (k > 0) out += ",";
      out += classes_[i].model(k).to_string(alphabet);
    }
  }
  out += " ]";
  return out;
}

}  // namespace doxa
