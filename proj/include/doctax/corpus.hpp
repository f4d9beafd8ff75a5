#ifndef DOCTAX_CORPUS_HPP
#define DOCTAX_CORPUS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "doctax/types.hpp"

namespace doctax {

enum class InputFormat { Plain, Html };

struct IngestReport {
  int utf8_replacements = 0;
  int markup_warnings = 0;
};

// Decodes raw input into a DocumentUnit. For HTML, text inside
// code/pre/tt/samp/kbd/var is kept verbatim and recorded in code_spans;
// all other tags are stripped and entities decoded. Unbalanced markup is
// recovered, not rejected (counted in report). Throws EmptyInput when no
// non-whitespace content remains.
DocumentUnit ingest(std::string_view bytes, InputFormat format, std::string id = "u0",
                    std::string source = {}, IngestReport* report = nullptr);

// Fills tokens and sentences. Identifier-like chunks (underscores, internal
// dots, camel case, "()"), and everything inside code_spans, become single
// CODE tokens. Sentence boundaries at . ! ? followed by whitespace and a
// capital, never inside code spans; "e.g." / "i.e." / "etc." suppress splits.
void tokenize_and_segment(DocumentUnit& unit);

// Rule-based lemmatizer: exception table first, then suffix rules per PoS.
// CODE tokens are returned unchanged; everything else is lowercased.
std::string lemmatize(std::string_view surface, PosTag pos);

// Sets token lemmas from (surface, pos). Run after PoS tagging.
void apply_lemmas(DocumentUnit& unit);

bool is_content_token(const Token& t);

// Ordered lemmas with stop words and punctuation removed; duplicates kept.
std::vector<std::string> content_words(const DocumentUnit& unit);

}  // namespace doctax

#endif
