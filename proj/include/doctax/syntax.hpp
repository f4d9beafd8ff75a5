#ifndef DOCTAX_SYNTAX_HPP
#define DOCTAX_SYNTAX_HPP

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "doctax/types.hpp"

namespace doctax {

enum class DepLabel : std::uint8_t {
  Subj,
  Dobj,
  Prep,
  Pobj,
  Amod,
  Nn,
  Advmod,
  Conj,
  Xcomp,
  RootAttach,
};

std::string_view to_string(DepLabel label);
std::optional<DepLabel> dep_label_from_string(std::string_view name);

struct DepEdge {
  std::size_t head;  // token index into the unit
  std::size_t dep;
  DepLabel label;
};

// Per-sentence graph: acyclic, each non-root token has at most one head.
struct DependencyGraph {
  std::size_t token_begin = 0;
  std::size_t token_end = 0;
  std::vector<DepEdge> edges;
};

// Deterministic tagger: closed/open-class lexicon, suffix rules, capitalized
// unknown (non sentence-initial) -> PROPER_NOUN, two context repairs.
// CODE/PUNCT/NUM tokens keep their tags; every token gets exactly one tag.
void pos_tag(DocumentUnit& unit);

// Chunk NPs/VPs/PPs over the tagged sentence and attach with the fixed rule
// set (subj, dobj, prep+pobj, amod, nn, advmod, xcomp, conj).
DependencyGraph build_dependencies(const DocumentUnit& unit, const Sentence& sentence);
std::vector<DependencyGraph> build_all_dependencies(const DocumentUnit& unit);

// Shortest undirected path length between two tokens; nullopt when
// unreachable (different sentences or disconnected).
std::optional<int> dep_path_len(std::span<const DependencyGraph> graphs, std::size_t t1,
                                std::size_t t2);

}  // namespace doctax

#endif
