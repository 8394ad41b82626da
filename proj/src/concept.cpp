#include "bcr/concept.hpp"

#include <map>

namespace bcr {

const std::vector<ConceptKind>& all_concepts() {
  static const std::vector<ConceptKind> all = {
      ConceptKind::KPlanar,          ConceptKind::KVertexPlanar,     ConceptKind::IC,
      ConceptKind::NIC,              ConceptKind::NNIC,              ConceptKind::KFanCrossingFree,
      ConceptKind::AdjacencyCrossing, ConceptKind::FanCrossing,      ConceptKind::WeakFanPlanar,
      ConceptKind::StrongFanPlanar,  ConceptKind::KEdgeCrossing,     ConceptKind::KGapPlanar,
      ConceptKind::KApex,            ConceptKind::Skewness};
  return all;
}

std::string short_name(ConceptKind c) {
  switch (c) {
    case ConceptKind::KPlanar: return "kpl";
    case ConceptKind::KVertexPlanar: return "kvp";
    case ConceptKind::IC: return "ic";
    case ConceptKind::NIC: return "nic";
    case ConceptKind::NNIC: return "nnic";
    case ConceptKind::KFanCrossingFree: return "kfcf";
    case ConceptKind::AdjacencyCrossing: return "ac";
    case ConceptKind::FanCrossing: return "fc";
    case ConceptKind::WeakFanPlanar: return "wfp";
    case ConceptKind::StrongFanPlanar: return "sfp";
    case ConceptKind::KEdgeCrossing: return "kecr";
    case ConceptKind::KGapPlanar: return "kgap";
    case ConceptKind::KApex: return "kapex";
    case ConceptKind::Skewness: return "skew";
  }
  return "?";
}

ConceptKind parse_concept(const std::string& name) {
  for (auto c : all_concepts())
    if (short_name(c) == name) return c;
  throw ParameterError("unknown concept '" + name + "'");
}

bool has_parameter(ConceptKind c) {
  switch (c) {
    case ConceptKind::KPlanar:
    case ConceptKind::KVertexPlanar:
    case ConceptKind::KFanCrossingFree:
    case ConceptKind::KEdgeCrossing:
    case ConceptKind::KGapPlanar:
    case ConceptKind::KApex:
    case ConceptKind::Skewness:
      return true;
    default:
      return false;
  }
}

bool uses_alternate_frame(ConceptKind c) {
  return c == ConceptKind::KGapPlanar || c == ConceptKind::KApex || c == ConceptKind::Skewness;
}

bool is_fan_variant(ConceptKind c) {
  return c == ConceptKind::AdjacencyCrossing || c == ConceptKind::FanCrossing ||
         c == ConceptKind::WeakFanPlanar || c == ConceptKind::StrongFanPlanar;
}

int min_k(ConceptKind c) {
  if (c == ConceptKind::KFanCrossingFree || c == ConceptKind::KEdgeCrossing) return 2;
  return 1;
}

int ell_threshold(ConceptKind c, int k) {
  switch (c) {
    case ConceptKind::KPlanar: return 41;
    case ConceptKind::KVertexPlanar: return 11;
    case ConceptKind::IC: return 2;
    case ConceptKind::NIC: return 4;
    case ConceptKind::NNIC:
    case ConceptKind::KFanCrossingFree: return 109;
    case ConceptKind::KGapPlanar: return 5;
    case ConceptKind::Skewness: return k + 1;
    default: return 1;
  }
}

FigureParams figure_params(ConceptKind c) {
  switch (c) {
    case ConceptKind::KPlanar: return {3, 2};
    case ConceptKind::KVertexPlanar: return {2, 2};
    case ConceptKind::IC: return {2, 1};
    case ConceptKind::NIC: return {4, 1};
    case ConceptKind::NNIC: return {2, 2};
    case ConceptKind::KFanCrossingFree: return {2, 2};
    case ConceptKind::KEdgeCrossing: return {2, 4};
    case ConceptKind::KGapPlanar: return {5, 1};
    case ConceptKind::KApex: return {2, 2};
    case ConceptKind::Skewness: return {3, 2};
    default: return {3, 1};
  }
}

std::string concept_label(const Concept& c) {
  if (has_parameter(c.kind)) return short_name(c.kind) + "(" + std::to_string(c.k) + ")";
  return short_name(c.kind);
}

}  // namespace bcr
