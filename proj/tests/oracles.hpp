#pragma once

// Independent reference implementations the tests check the library
// against: a quadratic brute-force co-occurrence counter, dense PMI/PPMI
// evaluation, a dense power iteration, and a literal transcription of the
// scoring loop. Deliberately simple, dense, and slow.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Corpus = std::vector<std::vector<std::string>>;
using Dense = std::vector<std::vector<double>>;

struct CoocTable {
    std::map<std::pair<std::string, std::string>, std::uint64_t> counts;  // ordered pairs
    std::map<std::string, std::uint64_t> row_marginals;
    std::uint64_t total = 0;
};

// For every sentence and every ordered position pair (i, j), i != j,
// |i - j| <= window, the pair (w_i, w_j) counts 1, provided neither word
// is a corpus singleton. include_diagonal=false drops same-word pairs.
CoocTable brute_force_cooc(const Corpus& corpus, std::uint32_t window,
                           bool include_diagonal = true);

// PPMI weights over a dense count matrix with the given marginals and
// total: max(0, log2(M c / (r_x r_y)) + log2 c) per nonzero cell.
Dense dense_ppmi(const Dense& counts, const std::vector<double>& row_marginals,
                 double total);

// Marginals and total derived from the counts themselves.
Dense dense_ppmi(const Dense& counts);

struct PowerIterationResult {
    std::vector<double> vector;  // unit (L2) principal eigenvector estimate
    double eigenvalue = 0.0;
    std::uint32_t iterations = 0;
};

// Plain power iteration x <- Ax / ||Ax|| from a uniform start, stopping
// when the iterate moves less than `tolerance` or at max_iterations.
PowerIterationResult dense_power_iteration(const Dense& matrix,
                                           std::uint32_t max_iterations,
                                           double tolerance);

struct TraceStep {
    std::vector<double> authority;
    std::vector<double> hubness;
};

// Literal transcription of the scoring loop over a dense matrix: per
// iteration p <- A^T i (transpose written out), i <- A p with the raw p,
// then L2-normalize both. Returns the post-normalization snapshots.
std::vector<TraceStep> trace_hits(const Dense& matrix, std::uint32_t iterations);

}  // namespace oracle
