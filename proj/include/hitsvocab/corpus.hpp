#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hitsvocab/errors.hpp"

namespace hitsvocab {

using Sentence = std::vector<std::string>;

// A whitespace-tokenized corpus: sentences in input order, each a list of
// tokens. Tokens are never empty and never contain whitespace.
struct TokenizedCorpus {
    std::vector<Sentence> sentences;

    std::size_t sentence_count() const { return sentences.size(); }
    std::size_t token_count() const;

    bool operator==(const TokenizedCorpus&) const = default;
};

// Token/type bookkeeping for a corpus.
struct CorpusStats {
    std::size_t sentence_count = 0;
    std::size_t token_count = 0;
    std::unordered_map<std::string, std::uint64_t> type_frequencies;

    std::size_t type_count() const { return type_frequencies.size(); }
};

// Reads a UTF-8 corpus file, one sentence per line, tokens separated by
// spaces. Runs of spaces/tabs count as one separator, blank lines are
// dropped, and a trailing "\r" is stripped. If max_sentence_length is set,
// sentences with more tokens than the limit are dropped.
// Throws IoError if the file cannot be opened and ParseError (with a line
// number) on malformed UTF-8.
TokenizedCorpus read_corpus(const std::filesystem::path& path,
                            std::optional<std::size_t> max_sentence_length = std::nullopt);

// Same contract, reading from an already-open stream. `name` is used in
// error messages.
TokenizedCorpus read_corpus(std::istream& in, const std::string& name,
                            std::optional<std::size_t> max_sentence_length = std::nullopt);

// Exact sentence/token/type counts.
CorpusStats corpus_stats(const TokenizedCorpus& corpus);

// Writes each sentence as its tokens joined by single spaces plus "\n".
// Reading the result back (with no length limit) reproduces the corpus.
void write_corpus(const TokenizedCorpus& corpus, const std::filesystem::path& path);
void write_corpus(const TokenizedCorpus& corpus, std::ostream& out);

// Validates one line of UTF-8 (RFC 3629: no overlongs, no surrogates,
// nothing above U+10FFFF). Returns false on the first bad sequence.
bool is_valid_utf8(std::string_view text);

}  // namespace hitsvocab
