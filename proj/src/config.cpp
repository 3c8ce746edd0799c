#include "hitsvocab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace hitsvocab {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

template <typename Int>
Int parse_positive(const std::string& text, const std::string& where) {
    Int value{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
        throw ParseError(where + ": expected a positive integer, got \"" + text + "\"");
    }
    return value;
}

bool parse_bool(const std::string& text, const std::string& where) {
    const std::string v = lowercase(text);
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw ParseError(where + ": expected true/false, got \"" + text + "\"");
}

}  // namespace

WeightScheme parse_scheme(const std::string& text) {
    const std::string v = lowercase(text);
    if (v == "freq") return WeightScheme::Freq;
    if (v == "ppmi") return WeightScheme::Ppmi;
    throw DomainError("unknown weighting scheme \"" + text + "\" (expected freq or ppmi)");
}

Norm parse_norm(const std::string& text) {
    const std::string v = lowercase(text);
    if (v == "l2") return Norm::L2;
    if (v == "l1") return Norm::L1;
    throw DomainError("unknown norm \"" + text + "\" (expected l2 or l1)");
}

RunConfig load_run_config(std::istream& in, const std::string& name) {
    RunConfig config;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string where = name + ":" + std::to_string(line_number);
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) {
            throw ParseError(where + ": expected key=value, got \"" + text + "\"");
        }
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key == "window") {
            config.window = parse_positive<std::uint32_t>(value, where);
        } else if (key == "min_pair_count") {
            config.min_pair_count = parse_positive<std::uint64_t>(value, where);
        } else if (key == "scheme") {
            try {
                config.scheme = parse_scheme(value);
            } catch (const DomainError& e) {
                throw ParseError(where + ": " + e.what());
            }
        } else if (key == "iterations") {
            config.iterations = parse_positive<std::uint32_t>(value, where);
        } else if (key == "vocab_size") {
            config.vocab_size = parse_positive<std::uint32_t>(value, where);
        } else if (key == "include_diagonal") {
            config.include_diagonal = parse_bool(value, where);
        } else if (key == "norm") {
            try {
                config.norm = parse_norm(value);
            } catch (const DomainError& e) {
                throw ParseError(where + ": " + e.what());
            }
        } else {
            throw ParseError(where + ": unknown config key \"" + key + "\"");
        }
    }
    if (in.bad()) throw IoError("failed while reading " + name);
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path.string());
    return load_run_config(in, path.string());
}

void write_run_config(const RunConfig& config, std::ostream& out) {
    out << "window=" << config.window << '\n'
        << "min_pair_count=" << config.min_pair_count << '\n'
        << "scheme=" << to_string(config.scheme) << '\n'
        << "iterations=" << config.iterations << '\n';
    if (config.vocab_size) out << "vocab_size=" << *config.vocab_size << '\n';
    out << "include_diagonal=" << (config.include_diagonal ? "true" : "false") << '\n'
        << "norm=" << to_string(config.norm) << '\n';
}

}  // namespace hitsvocab
