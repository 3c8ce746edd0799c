#include "hitsvocab/hits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace hitsvocab {

std::string to_string(Norm norm) {
    return norm == Norm::L2 ? "l2" : "l1";
}

namespace {

double vector_norm(const std::vector<double>& v, Norm norm) {
    double acc = 0.0;
    if (norm == Norm::L2) {
        for (double x : v) acc += x * x;
        return std::sqrt(acc);
    }
    for (double x : v) acc += std::abs(x);
    return acc;
}

void normalize(std::vector<double>* v, Norm norm) {
    const double n = vector_norm(*v, norm);
    if (!(n > 0.0)) throw NumericalError("zero vector encountered during normalization");
    for (double& x : *v) x /= n;
}

double difference_norm(const std::vector<double>& a, const std::vector<double>& b,
                       Norm norm) {
    double acc = 0.0;
    if (norm == Norm::L2) {
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double d = a[k] - b[k];
            acc += d * d;
        }
        return std::sqrt(acc);
    }
    for (std::size_t k = 0; k < a.size(); ++k) acc += std::abs(a[k] - b[k]);
    return acc;
}

// out = A * in, row by row in index order so repeated runs sum in the
// same order and agree bit for bit.
void multiply(const WeightedAdjacency& adjacency, const std::vector<double>& in,
              std::vector<double>* out) {
    const std::size_t n = adjacency.size();
    out->assign(n, 0.0);
    for (WordId x = 0; x < n; ++x) {
        auto cols = adjacency.row_cols(x);
        auto values = adjacency.row_values(x);
        double sum = 0.0;
        for (std::size_t k = 0; k < cols.size(); ++k) sum += values[k] * in[cols[k]];
        (*out)[x] = sum;
    }
}

}  // namespace

HitsScores run_hits(const WeightedAdjacency& adjacency, const HitsConfig& config) {
    const std::size_t n = adjacency.size();
    if (config.iterations < 1) throw DomainError("iteration count must be at least 1");
    if (adjacency.nonzero_count() == 0) {
        throw DegenerateMatrixError("adjacency matrix has no nonzero entries");
    }

    std::vector<double> hubness;
    if (config.initial_hubness) {
        if (config.initial_hubness->size() != n)
            throw ShapeError("initial hubness vector length mismatch");
        for (double x : *config.initial_hubness) {
            if (!(x >= 0.0)) throw NumericalError("initial hubness must be nonnegative");
        }
        hubness = *config.initial_hubness;
    } else {
        hubness.assign(n, 1.0);
    }
    normalize(&hubness, config.norm);

    std::vector<double> authority(n, 0.0);
    std::vector<double> previous_hubness;
    std::vector<double> previous_authority;
    std::vector<double> next(n, 0.0);

    std::uint32_t iterations_run = 0;
    for (std::uint32_t t = 1; t <= config.iterations; ++t) {
        if (config.tolerance) {
            previous_hubness = hubness;
            previous_authority = authority;
        }
        multiply(adjacency, hubness, &next);   // p <- A' i  (A symmetric)
        authority.swap(next);
        multiply(adjacency, authority, &next);  // i <- A p
        hubness.swap(next);
        normalize(&hubness, config.norm);
        normalize(&authority, config.norm);
        iterations_run = t;
        if (config.tolerance && t > 1 &&
            difference_norm(hubness, previous_hubness, config.norm) < *config.tolerance &&
            difference_norm(authority, previous_authority, config.norm) < *config.tolerance) {
            break;
        }
    }

    HitsScores scores;
    scores.index = adjacency.shared_index();
    scores.hubness = std::move(hubness);
    scores.authority = std::move(authority);
    scores.iterations_run = iterations_run;
    return scores;
}

double hits_residual(const WeightedAdjacency& adjacency, const HitsScores& scores,
                     Norm norm) {
    const std::size_t n = adjacency.size();
    if (scores.hubness.size() != n || scores.authority.size() != n)
        throw ShapeError("score vector length does not match adjacency size");
    if (adjacency.nonzero_count() == 0)
        throw DegenerateMatrixError("adjacency matrix has no nonzero entries");

    std::vector<double> p(n, 0.0);
    std::vector<double> i(n, 0.0);
    multiply(adjacency, scores.hubness, &p);
    multiply(adjacency, p, &i);
    normalize(&i, norm);
    return difference_norm(i, scores.hubness, norm);
}

std::string format_score(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.8g", value);
    return buffer;
}

void write_scores_tsv(const HitsScores& scores, std::ostream& out) {
    out << "#iterations=" << scores.iterations_run << '\n';
    std::vector<WordId> order(scores.hubness.size());
    for (WordId k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](WordId a, WordId b) {
        if (scores.hubness[a] != scores.hubness[b])
            return scores.hubness[a] > scores.hubness[b];
        return scores.index->word_of(a) < scores.index->word_of(b);
    });
    for (WordId id : order) {
        out << scores.index->word_of(id) << '\t' << format_score(scores.hubness[id])
            << '\t' << format_score(scores.authority[id]) << '\n';
    }
}

}  // namespace hitsvocab
