#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nestsub/error.hpp"
#include "nestsub/families.hpp"
#include "nestsub/poly.hpp"

namespace nestsub {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s);

// Theorem tags used in reports.
inline constexpr int kTheoremRecursiveNested = 1;   // S̃ = R^b r S̄
inline constexpr int kTheoremNestedReduced = 2;     // S̃ = (R̂ B̂)^J B̂ Ŝ
inline constexpr int kProportionality = 0;           // Ŝ ~ recursive PRS element

struct Multiple {
  int k = 0;
  int j = 0;
  Rat factor;   // Ŝ_{k,j} = factor * P
  bool ok = false;
};

// Outcome of one mechanical check on one instance. status == Pass exactly
// when the witness (lhs - predicted_factor * rhs) is the zero polynomial.
struct VerifyReport {
  std::string f;
  std::string g;
  std::optional<std::uint64_t> seed;
  int theorem = 0;
  int k = 0;
  int j = 0;
  Rat predicted_factor = 1;
  Status status = Status::Skipped;
  std::string reason;  // SINGULAR_U, DEFECTIVE_PRS, ... for skipped reports
  Poly lhs;
  Poly rhs;
  Poly witness;
  std::vector<Multiple> multiples;  // proportionality reports only
};

// Skip code for a construction error.
std::string reason_code(const Error& e);

VerifyReport verify_thm1(const Instance& inst, int k, int j, bool strict_layout = false);
VerifyReport verify_thm1(const Poly& f, const Poly& g, int k, int j, bool strict_layout = false);
VerifyReport verify_thm2(const Instance& inst, int k, int j);
VerifyReport verify_thm2(const Poly& f, const Poly& g, int k, int j);

// Every (k, j) with k in [k_min, k_max] (clamped to the chain) and j in the
// stage range.
std::vector<VerifyReport> verify_thm1_all(const Instance& inst, int k_min, int k_max,
                                          bool strict_layout = false);
std::vector<VerifyReport> verify_thm2_all(const Instance& inst, int k_min, int k_max);

// For each stage k and each degree j <= j_{k-1} - 2 (j < n at k = 1) of an
// element P of the stage-k PRS, Ŝ_{k,j} is a nonzero rational multiple of P.
VerifyReport proportionality_check(const Instance& inst);
VerifyReport proportionality_check(const Poly& f, const Poly& g);

struct SuiteSummary {
  int theorem = 0;
  int trials = 0;
  int checks = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  std::vector<VerifyReport> reports;
};

// Randomized run over `trials` instances from random_gcd_chain_pair. theorem 1
// checks stage 2 only (the recursive matrices grow multiplicatively with k),
// theorem 2 and proportionality check every stage.
SuiteSummary run_suite(int theorem, int trials, int max_deg, std::uint64_t seed);

}  // namespace nestsub
