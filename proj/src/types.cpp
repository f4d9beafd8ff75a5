#include "doctax/types.hpp"

namespace doctax {

std::string_view to_string(PosTag tag) {
  switch (tag) {
    case PosTag::Noun: return "NOUN";
    case PosTag::ProperNoun: return "PROPER_NOUN";
    case PosTag::Verb: return "VERB";
    case PosTag::Adj: return "ADJ";
    case PosTag::Adv: return "ADV";
    case PosTag::Pron: return "PRON";
    case PosTag::Prep: return "PREP";
    case PosTag::Det: return "DET";
    case PosTag::Conj: return "CONJ";
    case PosTag::Num: return "NUM";
    case PosTag::Punct: return "PUNCT";
    case PosTag::Code: return "CODE";
    case PosTag::Other: return "OTHER";
  }
  return "OTHER";
}

namespace {
constexpr std::string_view kClassNames[kNumClasses] = {
    "FunctionalityAndBehavior",
    "Concepts",
    "Directives",
    "PurposeAndRationale",
    "QualityAttributesAndInternal",
    "ControlFlow",
    "Structure",
    "Patterns",
    "CodeExamples",
    "Environment",
    "References",
    "NonInformation",
};

constexpr std::string_view kCategoryNames[kNumCategories] = {
    "Task", "Concept", "CodeElement", "VersionControl", "Directive", "DomainTag",
};
}  // namespace

std::string_view to_string(KnowledgeClass c) {
  return kClassNames[static_cast<int>(c)];
}

std::optional<KnowledgeClass> knowledge_class_from_string(std::string_view name) {
  for (int i = 0; i < kNumClasses; ++i)
    if (kClassNames[i] == name) return static_cast<KnowledgeClass>(i);
  return std::nullopt;
}

std::string_view to_string(PhraseCategory c) {
  return kCategoryNames[static_cast<int>(c)];
}

std::optional<PhraseCategory> phrase_category_from_string(std::string_view name) {
  for (int i = 0; i < kNumCategories; ++i)
    if (kCategoryNames[i] == name) return static_cast<PhraseCategory>(i);
  return std::nullopt;
}

}  // namespace doctax
