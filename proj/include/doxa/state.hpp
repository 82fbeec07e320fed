#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "doxa/alphabet.hpp"
#include "doxa/formula.hpp"
#include "doxa/model.hpp"

namespace doxa {

enum class Comparison { Less, Equal, Greater };

const char* comparison_name(Comparison c);

// A connected plausibility preorder over all assignments, stored as the
// ordered partition of its equivalence classes, most plausible first.
// Classes are disjoint, jointly exhaustive, and never empty; states compare
// equal exactly when their class lists match position by position.
class DoxasticState {
 public:
  // the flat state over the empty alphabet
  DoxasticState() : width_(0), classes_{ModelSet::full(0)} {}

  // single class holding every assignment
  static DoxasticState flat(const Alphabet& alphabet,
                            std::size_t enum_bound = kDefaultEnumerationBound);

  // [models(f), rest] for consistent non-valid f; flat when f is valid or
  // unsatisfiable (one of the two classes would be empty and is dropped)
  static DoxasticState from_formula(const Formula& f, const Alphabet& alphabet,
                                    std::size_t enum_bound = kDefaultEnumerationBound);

  // validates the partition after dropping empty entries
  static DoxasticState from_classes(int width, std::vector<ModelSet> classes);

  int width() const { return width_; }
  const std::vector<ModelSet>& classes() const { return classes_; }

  std::size_t class_of(const Model& m) const;
  Comparison compare(const Model& i, const Model& j) const;

  // Index of the most (least) plausible class meeting a, and the meet
  // itself.  Throws InconsistentRevision when a is empty.
  std::size_t imin(const ModelSet& a) const;
  std::size_t imax(const ModelSet& a) const;
  ModelSet min_models(const ModelSet& a) const;
  ModelSet max_models(const ModelSet& a) const;

  ModelSet min_models(const Formula& a, const Alphabet& alphabet,
                      std::size_t enum_bound = kDefaultEnumerationBound) const;
  ModelSet max_models(const Formula& a, const Alphabet& alphabet,
                      std::size_t enum_bound = kDefaultEnumerationBound) const;

  // "[ {a},{a,b} | {},{b} ]": classes most plausible first, the models of a
  // class ascending by assignment code
  std::string to_string(const Alphabet& alphabet) const;

  friend bool operator==(const DoxasticState&, const DoxasticState&) = default;

 private:
  DoxasticState(int width, std::vector<ModelSet> classes)
      : width_(width), classes_(std::move(classes)) {}

  int width_ = 0;
  std::vector<ModelSet> classes_;
};

}  // namespace doxa
