#ifndef DOCTAX_TYPES_HPP
#define DOCTAX_TYPES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace doctax {

// Coarse part-of-speech set used throughout the pipeline.
enum class PosTag : std::uint8_t {
  Noun,
  ProperNoun,
  Verb,
  Adj,
  Adv,
  Pron,
  Prep,
  Det,
  Conj,
  Num,
  Punct,
  Code,
  Other,
};

std::string_view to_string(PosTag tag);

// The 12 knowledge classes, fixed order C1..C12. C12 (NonInformation) has no
// trained model; it is assigned by exclusion.
enum class KnowledgeClass : std::uint8_t {
  FunctionalityAndBehavior = 0,
  Concepts,
  Directives,
  PurposeAndRationale,
  QualityAttributesAndInternal,
  ControlFlow,
  Structure,
  Patterns,
  CodeExamples,
  Environment,
  References,
  NonInformation,
};

inline constexpr int kNumClasses = 12;
inline constexpr int kNumTrainedClasses = 11;

std::string_view to_string(KnowledgeClass c);
std::optional<KnowledgeClass> knowledge_class_from_string(std::string_view name);

// Key-phrase categories, fixed order (drives feature layout).
enum class PhraseCategory : std::uint8_t {
  Task = 0,
  Concept,
  CodeElement,
  VersionControl,
  Directive,
  DomainTag,
};

inline constexpr int kNumCategories = 6;

std::string_view to_string(PhraseCategory c);
std::optional<PhraseCategory> phrase_category_from_string(std::string_view name);

struct Token {
  std::string surface;
  std::string lemma;
  PosTag pos = PosTag::Other;
  std::size_t char_start = 0;  // offsets into DocumentUnit::raw_text, [start,end)
  std::size_t char_end = 0;
  bool is_stopword = false;
  bool is_code_like = false;
};

// Token index range [begin,end) into the owning unit's token list.
struct Sentence {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

// One classifiable fragment of documentation.
struct DocumentUnit {
  std::string id;
  std::string source;  // file path + byte range, informational
  std::string raw_text;
  std::vector<Token> tokens;
  std::vector<Sentence> sentences;
  std::vector<CharSpan> code_spans;  // char ranges in raw_text from markup
  std::optional<KnowledgeClass> gold_label;
};

// An extracted phrase: contiguous token index range within one sentence.
struct KeyPhrase {
  PhraseCategory category;
  std::string unit_id;
  std::size_t token_begin = 0;  // [begin,end) into unit tokens
  std::size_t token_end = 0;
  std::size_t sentence_index = 0;
  std::string surface;
};

}  // namespace doctax

#endif
