#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bcr {

enum class ConceptKind {
  KPlanar,
  KVertexPlanar,
  IC,
  NIC,
  NNIC,
  KFanCrossingFree,
  AdjacencyCrossing,
  FanCrossing,
  WeakFanPlanar,
  StrongFanPlanar,
  KEdgeCrossing,
  KGapPlanar,
  KApex,
  Skewness,
};

struct Concept {
  ConceptKind kind;
  int k = 0;
};

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const std::vector<ConceptKind>& all_concepts();

// short names: kpl kvp ic nic nnic kfcf ac fc wfp sfp kecr kgap kapex skew
std::string short_name(ConceptKind c);
ConceptKind parse_concept(const std::string& name);

bool has_parameter(ConceptKind c);
bool uses_alternate_frame(ConceptKind c);
bool is_fan_variant(ConceptKind c);
int min_k(ConceptKind c);

// smallest l for which the theorem's constants apply
int ell_threshold(ConceptKind c, int k);

// parameters of the paper's figure for this concept
struct FigureParams {
  int ell;
  int k;
};
FigureParams figure_params(ConceptKind c);

std::string concept_label(const Concept& c);

}  // namespace bcr
