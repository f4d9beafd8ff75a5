#ifndef DOCTAX_RESOURCES_HPP
#define DOCTAX_RESOURCES_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "doctax/types.hpp"

namespace doctax::resources {

// Raw embedded copies of the bundled data files (see data/ in the source
// tree). The binary is self-contained; the files remain the editable source
// of truth and can be overridden per call site where a loader takes a path.
std::string_view stopwords_text();
std::string_view lemma_exceptions_text();
std::string_view pos_lexicon_text();
std::string_view task_deps_text();
std::string_view directives_text();
std::string_view domain_tags_text();
std::string_view vc_seeds_text();

// Line-list parser: one entry per line, "#" comments and blanks skipped.
std::vector<std::string> parse_line_list(std::string_view text);

// word<TAB>tag lines; first occurrence of a word wins.
std::unordered_map<std::string, PosTag> parse_lexicon(std::string_view text);

struct LemmaKey {
  std::string surface;
  PosTag pos;  // PosTag::Other encodes the "*" wildcard row
  bool operator==(const LemmaKey&) const = default;
};

struct LemmaKeyHash {
  std::size_t operator()(const LemmaKey& k) const {
    return std::hash<std::string>()(k.surface) * 31 + static_cast<std::size_t>(k.pos);
  }
};

using LemmaExceptions = std::unordered_map<LemmaKey, std::string, LemmaKeyHash>;

// surface<TAB>lemma<TAB>pos rows (pos: NOUN/VERB/ADJ/ADV or *).
LemmaExceptions parse_lemma_exceptions(std::string_view text);

// Parsed singletons over the embedded data (built once, immutable).
const std::unordered_set<std::string>& stopword_set();
const LemmaExceptions& lemma_exceptions();
const std::unordered_map<std::string, PosTag>& pos_lexicon();
const std::vector<std::string>& task_dep_labels();

}  // namespace doctax::resources

#endif
