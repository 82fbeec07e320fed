#include "doxa/revision.hpp"

#include <cassert>

#include "doxa/error.hpp"

namespace doxa {

const char* operator_name(Operator op) {
  switch (op) {
    case Operator::Lexicographic: return "lex";
    case Operator::Natural: return "nat";
    case Operator::Severe: return "sev";
    case Operator::ModerateSevere: return "msev";
    case Operator::DeepSevere: return "dsev";
    case Operator::Restrained: return "res";
    case Operator::VeryRadical: return "vrad";
    case Operator::Full: return "full";
  }
  return "";
}

std::optional<Operator> operator_from_name(std::string_view name) {
  if (name == "lex") return Operator::Lexicographic;
  if (name == "nat") return Operator::Natural;
  if (name == "sev") return Operator::Severe;
  if (name == "msev") return Operator::ModerateSevere;
  if (name == "dsev") return Operator::DeepSevere;
  if (name == "res") return Operator::Restrained;
  if (name == "vrad") return Operator::VeryRadical;
  if (name == "full") return Operator::Full;
  return std::nullopt;
}

// Each operator below spells out its class list verbatim; empty classes are
// dropped by from_classes.  C(0..m) are the old classes, A the new models,
// imin/imax the first/last class index meeting A, min = C(imin) n A.

namespace {

using Classes = std::vector<ModelSet>;

Classes lex_classes(const Classes& c, const ModelSet& a) {
  Classes out;
  for (const ModelSet& ci : c) out.push_back(intersection(ci, a));
  for (const ModelSet& ci : c) out.push_back(difference(ci, a));
  return out;
}

Classes nat_classes(const Classes& c, const ModelSet& a, std::size_t imin) {
  Classes out;
  out.push_back(intersection(c[imin], a));
  for (std::size_t i = 0; i < imin; ++i) out.push_back(c[i]);
  out.push_back(difference(c[imin], a));
  for (std::size_t i = imin + 1; i < c.size(); ++i) out.push_back(c[i]);
  return out;
}

Classes sev_classes(const Classes& c, const ModelSet& a, std::size_t imin) {
  Classes out;
  out.push_back(intersection(c[imin], a));
  ModelSet merged(c[0].width());
  for (std::size_t i = 0; i <= imin; ++i) merged = set_union(merged, c[i]);
  out.push_back(difference(merged, a));
  for (std::size_t i = imin + 1; i < c.size(); ++i) out.push_back(c[i]);
  return out;
}

Classes msev_classes(const Classes& c, const ModelSet& a, std::size_t imin,
                     std::size_t imax) {
  Classes out;
  for (std::size_t i = imin; i <= imax; ++i) out.push_back(intersection(c[i], a));
  ModelSet merged(c[0].width());
  for (std::size_t i = 0; i <= imin; ++i) merged = set_union(merged, c[i]);
  out.push_back(difference(merged, a));
  for (std::size_t i = imin + 1; i < c.size(); ++i) out.push_back(difference(c[i], a));
  return out;
}

Classes dsev_classes(const Classes& c, const ModelSet& a, std::size_t imax) {
  Classes out;
  for (const ModelSet& ci : c) out.push_back(intersection(ci, a));
  ModelSet merged(c[0].width());
  for (std::size_t i = 0; i <= imax; ++i) merged = set_union(merged, c[i]);
  out.push_back(difference(merged, a));
  for (std::size_t i = imax + 1; i < c.size(); ++i) out.push_back(c[i]);
  return out;
}

Classes res_classes(const Classes& c, const ModelSet& a, const ModelSet& min) {
  Classes out;
  out.push_back(min);
  for (const ModelSet& ci : c) {
    out.push_back(difference(intersection(ci, a), min));
    out.push_back(difference(ci, a));
  }
  return out;
}

Classes vrad_classes(const Classes& c, const ModelSet& a, std::size_t imin,
                     std::size_t imax) {
  Classes out;
  for (std::size_t i = imin; i <= imax; ++i) out.push_back(intersection(c[i], a));
  out.push_back(difference(ModelSet::full(c[0].width()), a));
  return out;
}

Classes full_classes(const Classes& c, const ModelSet& min) {
  Classes out;
  out.push_back(min);
  out.push_back(difference(ModelSet::full(c[0].width()), min));
  return out;
}

}  // namespace

DoxasticState revise(const DoxasticState& state, Operator op, const ModelSet& a) {
  assert(a.width() == state.width());
  if (a.empty()) throw InconsistentRevision();
  const Classes& c = state.classes();
  Classes out;
  switch (op) {
    case Operator::Lexicographic:
      out = lex_classes(c, a);
      break;
    case Operator::Natural:
      out = nat_classes(c, a, state.imin(a));
      break;
    case Operator::Severe:
      out = sev_classes(c, a, state.imin(a));
      break;
    case Operator::ModerateSevere:
      out = msev_classes(c, a, state.imin(a), state.imax(a));
      break;
    case Operator::DeepSevere:
      out = dsev_classes(c, a, state.imax(a));
      break;
    case Operator::Restrained:
      out = res_classes(c, a, state.min_models(a));
      break;
    case Operator::VeryRadical:
      out = vrad_classes(c, a, state.imin(a), state.imax(a));
      break;
    case Operator::Full:
      out = full_classes(c, state.min_models(a));
      break;
  }
  return DoxasticState::from_classes(state.width(), std::move(out));
}

DoxasticState revise(const DoxasticState& state, Operator op, const Formula& payload,
                     const Alphabet& alphabet, std::size_t enum_bound) {
  return revise(state, op, models(payload, alphabet, enum_bound));
}

DoxasticState apply_sequence(const DoxasticState& state, const RevisionSequence& steps,
                             const Alphabet& alphabet, std::size_t enum_bound) {
  DoxasticState current = state;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    ModelSet a = models(steps[i].payload, alphabet, enum_bound);
    if (a.empty()) throw InconsistentRevision(static_cast<std::ptrdiff_t>(i));
    current = revise(current, steps[i].op, a);
  }
  return current;
}

}  // namespace doxa
