#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hitsvocab/weighting.hpp"

namespace hitsvocab {

enum class Norm { L2, L1 };

std::string to_string(Norm norm);

// Settings for the power iteration. The defaults run exactly 300
// iterations from a uniform start with L2 normalization; tolerance-based
// early stopping is opt-in.
struct HitsConfig {
    std::uint32_t iterations = 300;
    std::optional<std::vector<double>> initial_hubness;  // nullopt: uniform
    Norm norm = Norm::L2;
    std::optional<double> tolerance;
};

// Hubness and authority score per indexed word, both unit-norm.
struct HitsScores {
    std::shared_ptr<const WordIndex> index;
    std::vector<double> hubness;
    std::vector<double> authority;
    std::uint32_t iterations_run = 0;
};

// Power iteration over the adjacency matrix:
//
//   i <- i0
//   for t = 1..iterations:  p <- A' i;  i <- A p;  normalize i and p
//
// A is symmetric, so A' i and A p share one kernel. If a tolerance is set,
// iteration stops as soon as both vectors move less than the tolerance
// (norm of the difference) between consecutive iterations; iterations_run
// records the count. Deterministic for fixed inputs.
//
// Throws DegenerateMatrixError when the adjacency has no nonzero entries,
// ShapeError on a wrong-length start vector, and NumericalError when a
// zero (or negative) vector is hit during normalization.
HitsScores run_hits(const WeightedAdjacency& adjacency, const HitsConfig& config = {});

// Norm of the difference between scores.hubness and the hubness vector
// after one more full update (p <- A' i; i <- A p; normalize). Zero at a
// fixed point. Throws ShapeError if dimensions do not match.
double hits_residual(const WeightedAdjacency& adjacency, const HitsScores& scores,
                     Norm norm = Norm::L2);

// TSV dump: header "#iterations=<n>", then "word<TAB>hubness<TAB>authority"
// sorted by descending hubness (ties by word), scores to 8 significant
// digits.
void write_scores_tsv(const HitsScores& scores, std::ostream& out);

// Formats a score the way the TSV dumps do (8 significant digits).
std::string format_score(double value);

}  // namespace hitsvocab
