#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "hitsvocab/hits.hpp"
#include "hitsvocab/weighting.hpp"

namespace hitsvocab {

// Pipeline settings. The defaults are the reference configuration:
// window 2, count-1 pairs pruned, PPMI weights, 300 iterations, L2
// normalization, diagonal included. Every operation is deterministic;
// there is no RNG to seed.
struct RunConfig {
    std::uint32_t window = 2;
    std::uint64_t min_pair_count = 2;
    WeightScheme scheme = WeightScheme::Ppmi;
    std::uint32_t iterations = 300;
    std::optional<std::uint32_t> vocab_size;
    bool include_diagonal = true;
    Norm norm = Norm::L2;

    bool operator==(const RunConfig&) const = default;
};

// Reads a flat key=value config file. Blank lines and lines starting with
// '#' are skipped. Keys: window, min_pair_count, scheme (freq|ppmi),
// iterations, vocab_size, include_diagonal (true|false|1|0), norm (l2|l1).
// Unknown keys or bad values throw ParseError with the line number.
RunConfig load_run_config(const std::filesystem::path& path);
RunConfig load_run_config(std::istream& in, const std::string& name);

void write_run_config(const RunConfig& config, std::ostream& out);

WeightScheme parse_scheme(const std::string& text);  // throws DomainError
Norm parse_norm(const std::string& text);            // throws DomainError

}  // namespace hitsvocab
