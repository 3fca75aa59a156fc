#pragma once

#include "hdrr/solver.hpp"

namespace hdrr {

// Quantified 3-CNF with strict exists/forall alternation starting and ending
// existentially: blocks X1, Y1, X2, ..., X_{m+1}. Variables are 1-based
// numbers; clause literals use DIMACS signs.
struct QaeFormula {
  std::vector<std::vector<int>> blocks;
  std::vector<std::array<int, 3>> clauses;

  std::size_t stage_count() const { return blocks.size() / 2; }
};

// Exact truth value by exhaustive alternating evaluation.
bool eval_qbf(const QaeFormula& f, std::size_t var_cap = 24);

enum class QaeEncoding : std::uint8_t { Xor, Gamma };

// The exists-forall-exists to HDRR-3SAT construction with xor-dependency
// scenarios (three blocks).
RobustInstance reduce_qae_xor(const QaeFormula& f,
                              Measure measure = Measure::AdditionsOnly);

// Same skeleton with gamma-set scenarios and the s-variable escape.
RobustInstance reduce_qae_gamma(const QaeFormula& f,
                                Measure measure = Measure::AdditionsOnly);

// Stage-by-stage generalization for (exists forall)^m exists formulas.
RobustInstance reduce_qae_multistage(const QaeFormula& f, std::size_t m,
                                     QaeEncoding encoding,
                                     Measure measure = Measure::AdditionsOnly);

}  // namespace hdrr
