#include "internal.hpp"
#include "semibetti/closed_forms.hpp"

namespace semibetti {

std::string_view to_string(FourIrreducibleClass c) {
  switch (c) {
    case FourIrreducibleClass::Exceptional1: return "exceptional_1";
    case FourIrreducibleClass::Exceptional2: return "exceptional_2";
    case FourIrreducibleClass::Irreducible: return "irreducible";
    case FourIrreducibleClass::NotFourIrreducible: return "not_4_irreducible";
  }
  return "unknown";
}

FourIrreducibleReport classify_4_irreducible(const NumericalSemigroup& s) {
  const ClassificationRecord cls = classify(s, Int{4});
  static const std::vector<Int> kOrdinary{4, 5, 6, 7};
  static const std::vector<Int> kOrdinaryButF{4, 6, 7, 9};

  FourIrreducibleReport report;
  if (s.generators() == kOrdinary) {
    report.classification = FourIrreducibleClass::Exceptional1;
  } else if (s.generators() == kOrdinaryButF) {
    report.classification = FourIrreducibleClass::Exceptional2;
  } else if (cls.irreducible) {
    report.classification = FourIrreducibleClass::Irreducible;
  } else {
    report.classification = FourIrreducibleClass::NotFourIrreducible;
  }

  if (report.classification == FourIrreducibleClass::Irreducible) {
    if (const auto order = telescopic_ordering(s)) {
      report.table = ci_graded_betti(telescopic_relation_degrees(*order), s.embedding_dim());
      report.table.degree_bound = betti_degree_bound(s);
      report.method = "complete-intersection";
      return report;
    }
    if (s.embedding_dim() == 3 && cls.pseudo_symmetric) {
      report.table = herzog_betti(s);
      report.table.degree_bound = betti_degree_bound(s);
      report.method = "herzog";
      return report;
    }
    report.note = "irreducible but neither telescopic nor 3-generated pseudo-symmetric; computed by the oracle";
  } else if (report.classification == FourIrreducibleClass::NotFourIrreducible) {
    report.note = "not 4-irreducible; computed by the oracle";
  }
  report.table = graded_betti(s);
  report.method = "oracle";
  return report;
}

}  // namespace semibetti
