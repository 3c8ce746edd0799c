#include "hitsvocab/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace hitsvocab {

std::size_t TokenizedCorpus::token_count() const {
    std::size_t n = 0;
    for (const auto& sentence : sentences) n += sentence.size();
    return n;
}

bool is_valid_utf8(std::string_view text) {
    const auto* p = reinterpret_cast<const unsigned char*>(text.data());
    std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        unsigned char b = p[i];
        if (b < 0x80) {
            ++i;
        } else if ((b & 0xE0) == 0xC0) {
            // Two bytes; C0/C1 would be overlong encodings.
            if (b < 0xC2 || i + 1 >= n || (p[i + 1] & 0xC0) != 0x80) return false;
            i += 2;
        } else if ((b & 0xF0) == 0xE0) {
            if (i + 2 >= n || (p[i + 1] & 0xC0) != 0x80 || (p[i + 2] & 0xC0) != 0x80)
                return false;
            if (b == 0xE0 && p[i + 1] < 0xA0) return false;  // overlong
            if (b == 0xED && p[i + 1] >= 0xA0) return false;  // surrogate
            i += 3;
        } else if ((b & 0xF8) == 0xF0) {
            if (b > 0xF4 || i + 3 >= n || (p[i + 1] & 0xC0) != 0x80 ||
                (p[i + 2] & 0xC0) != 0x80 || (p[i + 3] & 0xC0) != 0x80)
                return false;
            if (b == 0xF0 && p[i + 1] < 0x90) return false;  // overlong
            if (b == 0xF4 && p[i + 1] >= 0x90) return false;  // above U+10FFFF
            i += 4;
        } else {
            return false;
        }
    }
    return true;
}

namespace {

void split_tokens(std::string_view line, Sentence* out) {
    out->clear();
    std::size_t i = 0;
    const std::size_t n = line.size();
    while (i < n) {
        while (i < n && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < n && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out->emplace_back(line.substr(start, i - start));
    }
}

}  // namespace

TokenizedCorpus read_corpus(std::istream& in, const std::string& name,
                            std::optional<std::size_t> max_sentence_length) {
    TokenizedCorpus corpus;
    std::string line;
    Sentence tokens;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!is_valid_utf8(line)) {
            throw ParseError(name + ":" + std::to_string(line_number) +
                             ": invalid UTF-8 byte sequence");
        }
        split_tokens(line, &tokens);
        if (tokens.empty()) continue;
        if (max_sentence_length && tokens.size() > *max_sentence_length) continue;
        corpus.sentences.push_back(tokens);
    }
    if (in.bad()) throw IoError("failed while reading " + name);
    return corpus;
}

TokenizedCorpus read_corpus(const std::filesystem::path& path,
                            std::optional<std::size_t> max_sentence_length) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + path.string());
    return read_corpus(in, path.string(), max_sentence_length);
}

CorpusStats corpus_stats(const TokenizedCorpus& corpus) {
    CorpusStats stats;
    stats.sentence_count = corpus.sentences.size();
    for (const auto& sentence : corpus.sentences) {
        stats.token_count += sentence.size();
        for (const auto& token : sentence) ++stats.type_frequencies[token];
    }
    return stats;
}

void write_corpus(const TokenizedCorpus& corpus, std::ostream& out) {
    for (const auto& sentence : corpus.sentences) {
        for (std::size_t i = 0; i < sentence.size(); ++i) {
            if (i > 0) out << ' ';
            out << sentence[i];
        }
        out << '\n';
    }
}

void write_corpus(const TokenizedCorpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path.string());
    write_corpus(corpus, out);
    out.flush();
    if (!out) throw IoError("failed while writing " + path.string());
}

}  // namespace hitsvocab
