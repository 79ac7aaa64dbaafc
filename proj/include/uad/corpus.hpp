#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "uad/util.hpp"

namespace uad {

// One tokenized sentence. Offsets index into `text`, so the original sentence
// is recoverable: every non-token character between offsets is whitespace.
struct Sentence {
  std::string text;
  std::vector<std::string> tokens;
  std::vector<std::pair<std::size_t, std::size_t>> char_offsets;  // [start, end)
};

struct Document {
  std::string doc_id;
  std::vector<Sentence> sentences;
};

// Splits one sentence into tokens. Parentheses, commas and terminal
// punctuation become single-character tokens; hyphens, periods and
// apostrophes between alphanumerics stay inside the word, and a trailing
// period is kept when the word already contains one ("U.S.A." stays whole).
Sentence tokenize(std::string_view sentence_text);

// Rule-based sentence splitter: terminal punctuation followed by whitespace
// and an upper-case/digit start, with an exception list for abbreviation
// periods ("Dr.", "e.g.", initials, dotted tokens like "U.S.A.").
std::vector<Sentence> split_sentences(std::string_view raw_text);

// Reads documents from a plain-text file. Documents are separated by blank
// lines; a line "#DOC <id>" starts a new document with that id. Documents
// without a header get "<file-stem>:<n>".
std::vector<Document> read_documents(const std::filesystem::path& path);

// read_documents over several files; doc_ids must stay unique across the run.
std::vector<Document> read_corpus(const std::vector<std::filesystem::path>& paths);

}  // namespace uad
