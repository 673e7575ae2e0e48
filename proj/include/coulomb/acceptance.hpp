#pragma once

#include <string>
#include <vector>

namespace coulomb::acceptance {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  // The criterion cannot be met as stated; its failure is analysed in the
  // README and does not make the suite exit nonzero.
  bool known_unattainable = false;
  std::vector<std::string> notes;  // flagged expected discrepancies, measured values
};

// Parameter grid shared by the grid-based criteria.
inline const std::vector<double> kGridL{-0.4, 0.0, 0.5, 1.0, 2.5};
inline const std::vector<double> kGridEta{-2.0, -1.0, -0.25, 0.0};
inline const std::vector<double> kGridBeta{0.0, 0.5};

std::vector<CriterionResult> run_all();

// One criterion by id (1..12).
CriterionResult run(int id);

// "PASS", "FAIL" or "FAIL (known)".
std::string status_label(const CriterionResult& result);

// True when every criterion not marked known_unattainable passed.
bool suite_ok(const std::vector<CriterionResult>& results);

}  // namespace coulomb::acceptance
