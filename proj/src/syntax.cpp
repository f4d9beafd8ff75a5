#include "doctax/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>

#include "doctax/resources.hpp"

namespace doctax {

namespace {

constexpr std::string_view kDepNames[] = {
    "subj", "dobj", "prep", "pobj", "amod", "nn", "advmod", "conj", "xcomp", "root-attach"};

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string_view to_string(DepLabel label) {
  return kDepNames[static_cast<int>(label)];
}

std::optional<DepLabel> dep_label_from_string(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(DepLabel::RootAttach); ++i)
    if (kDepNames[i] == name) return static_cast<DepLabel>(i);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Tagger.

namespace {

bool has_open_class_suffix(const std::string& lower) {
  return ends_with(lower, "tion") || ends_with(lower, "ment") ||
         ends_with(lower, "ness") || ends_with(lower, "ize") || ends_with(lower, "ify") ||
         ends_with(lower, "ous") || ends_with(lower, "ful") || ends_with(lower, "able") ||
         ends_with(lower, "ly");
}

PosTag suffix_tag(const std::string& lower) {
  if (ends_with(lower, "tion") || ends_with(lower, "ment") || ends_with(lower, "ness"))
    return PosTag::Noun;
  if (ends_with(lower, "ize") || ends_with(lower, "ify")) return PosTag::Verb;
  if (ends_with(lower, "ous") || ends_with(lower, "ful") || ends_with(lower, "able"))
    return PosTag::Adj;
  if (ends_with(lower, "ly")) return PosTag::Adv;
  return PosTag::Noun;  // open-class default
}

void tag_sentence(DocumentUnit& unit, const Sentence& s) {
  const auto& lexicon = resources::pos_lexicon();
  std::vector<bool> defaulted(s.end - s.begin, false);

  for (std::size_t i = s.begin; i < s.end; ++i) {
    Token& t = unit.tokens[i];
    if (t.pos == PosTag::Code || t.pos == PosTag::Punct || t.pos == PosTag::Num)
      continue;
    if (t.pos == PosTag::Other && t.surface.find('.') != std::string::npos)
      continue;  // abbreviations keep OTHER
    std::string lower = to_lower(t.surface);
    if (auto it = lexicon.find(lower); it != lexicon.end()) {
      t.pos = it->second;
      continue;
    }
    bool capitalized = std::isupper(static_cast<unsigned char>(t.surface[0])) != 0;
    if (capitalized && i != s.begin) {
      t.pos = PosTag::ProperNoun;
      continue;
    }
    t.pos = suffix_tag(lower);
    defaulted[i - s.begin] = !has_open_class_suffix(lower);
  }

  // Context repairs. The infinitive repair only touches bare defaults; the
  // lexicon and explicit suffixes are trusted.
  for (std::size_t i = s.begin + 1; i < s.end; ++i) {
    Token& t = unit.tokens[i];
    const Token& prev = unit.tokens[i - 1];
    if (prev.pos == PosTag::Det && t.pos == PosTag::Verb) t.pos = PosTag::Noun;
    if (to_lower(prev.surface) == "to" && t.pos == PosTag::Noun &&
        defaulted[i - s.begin] && !t.is_code_like)
      t.pos = PosTag::Verb;
  }
}

}  // namespace

void pos_tag(DocumentUnit& unit) {
  for (const Sentence& s : unit.sentences) tag_sentence(unit, s);
}

// ---------------------------------------------------------------------------
// Chunk-attachment dependency approximation.

namespace {

struct Chunk {
  enum Kind { NP, VP, PP } kind;
  std::size_t begin, end;  // token range [begin,end)
  std::size_t head;        // token index of the head
  std::size_t np_head = 0; // for PP: head of the inner NP (valid if has_np)
  bool has_np = false;
};

bool np_word(PosTag t) {
  return t == PosTag::Noun || t == PosTag::ProperNoun || t == PosTag::Adj ||
         t == PosTag::Code;
}

}  // namespace

DependencyGraph build_dependencies(const DocumentUnit& unit, const Sentence& sentence) {
  DependencyGraph g;
  g.token_begin = sentence.begin;
  g.token_end = sentence.end;
  const auto& toks = unit.tokens;

  // Chunk pass: NPs (optional DET + {ADJ|NOUN|PROPER|CODE}+, or bare PRON),
  // VPs (runs of verbs, head = last), PPs (PREP + following NP).
  std::vector<Chunk> chunks;
  std::size_t i = sentence.begin;
  while (i < sentence.end) {
    PosTag tag = toks[i].pos;
    if (tag == PosTag::Pron) {
      chunks.push_back({Chunk::NP, i, i + 1, i});
      ++i;
      continue;
    }
    if (tag == PosTag::Det || np_word(tag)) {
      std::size_t start = i;
      if (tag == PosTag::Det) ++i;
      std::size_t words = 0;
      while (i < sentence.end && np_word(toks[i].pos)) {
        ++i;
        ++words;
      }
      if (words > 0) {
        chunks.push_back({Chunk::NP, start, i, i - 1});
      } else {
        i = start + 1;  // lone determiner
      }
      continue;
    }
    if (tag == PosTag::Verb) {
      std::size_t start = i;
      std::size_t last_verb = i;
      while (i < sentence.end &&
             (toks[i].pos == PosTag::Verb || toks[i].pos == PosTag::Adv)) {
        if (toks[i].pos == PosTag::Verb) last_verb = i;
        ++i;
      }
      // Trailing adverbs stay outside the VP run.
      chunks.push_back({Chunk::VP, start, last_verb + 1, last_verb});
      i = last_verb + 1;
      continue;
    }
    if (tag == PosTag::Prep) {
      chunks.push_back({Chunk::PP, i, i + 1, i});
      ++i;
      continue;
    }
    ++i;
  }

  // Fold the NP following each PP into it.
  for (std::size_t c = 0; c + 1 < chunks.size(); ++c) {
    if (chunks[c].kind == Chunk::PP && chunks[c + 1].kind == Chunk::NP &&
        chunks[c + 1].begin == chunks[c].end) {
      chunks[c].np_head = chunks[c + 1].head;
      chunks[c].has_np = true;
    }
  }

  std::vector<bool> has_head(toks.size(), false);
  auto add_edge = [&](std::size_t head, std::size_t dep, DepLabel label) {
    if (head == dep || has_head[dep]) return;
    g.edges.push_back({head, dep, label});
    has_head[dep] = true;
  };

  // Intra-NP edges: adjectives -> amod, non-head nominals -> nn.
  for (const Chunk& c : chunks) {
    if (c.kind != Chunk::NP) continue;
    for (std::size_t t = c.begin; t < c.end; ++t) {
      if (t == c.head) continue;
      if (toks[t].pos == PosTag::Adj) add_edge(c.head, t, DepLabel::Amod);
      else if (np_word(toks[t].pos)) add_edge(c.head, t, DepLabel::Nn);
    }
  }

  // Clause attachment. PP heads attach to the most recent verb when one
  // precedes, otherwise to the most recent NP head.
  std::size_t last_vp_head = 0;
  bool seen_vp = false;
  std::size_t last_np_head = 0;
  bool seen_np = false;
  for (std::size_t c = 0; c < chunks.size(); ++c) {
    const Chunk& ch = chunks[c];
    if (ch.kind == Chunk::VP) {
      // subj: nearest unattached NP before the verb.
      for (std::size_t b = c; b-- > 0;) {
        if (chunks[b].kind == Chunk::VP) break;
        if (chunks[b].kind == Chunk::NP && !has_head[chunks[b].head]) {
          add_edge(ch.head, chunks[b].head, DepLabel::Subj);
          break;
        }
      }
      // dobj: first NP after the verb before any PP/VP.
      for (std::size_t a = c + 1; a < chunks.size(); ++a) {
        if (chunks[a].kind != Chunk::NP) break;
        add_edge(ch.head, chunks[a].head, DepLabel::Dobj);
        break;
      }
      // xcomp: "to" + verb following an earlier verb.
      if (seen_vp && ch.begin > sentence.begin &&
          to_lower(toks[ch.begin - 1].surface) == "to")
        add_edge(last_vp_head, ch.head, DepLabel::Xcomp);
      last_vp_head = ch.head;
      seen_vp = true;
      continue;
    }
    if (ch.kind == Chunk::PP) {
      std::size_t attach = 0;
      bool have_attach = false;
      if (seen_vp) {
        attach = last_vp_head;
        have_attach = true;
      } else if (seen_np) {
        attach = last_np_head;
        have_attach = true;
      }
      if (have_attach) add_edge(attach, ch.head, DepLabel::Prep);
      if (ch.has_np) add_edge(ch.head, ch.np_head, DepLabel::Pobj);
      if (ch.has_np) {
        last_np_head = ch.np_head;
        seen_np = true;
      }
      continue;
    }
    last_np_head = ch.head;
    seen_np = true;
  }

  // advmod: adverbs adjacent to a verb.
  for (std::size_t t = sentence.begin; t < sentence.end; ++t) {
    if (toks[t].pos != PosTag::Adv) continue;
    if (t + 1 < sentence.end && toks[t + 1].pos == PosTag::Verb)
      add_edge(t + 1, t, DepLabel::Advmod);
    else if (t > sentence.begin && toks[t - 1].pos == PosTag::Verb)
      add_edge(t - 1, t, DepLabel::Advmod);
  }

  // conj: for each conjunction token, pair the first head after it with the
  // nearest preceding head of the same kind (skipping chunks of other kinds,
  // so "find X and return Y" coordinates the two verbs).
  auto chunk_kind = [&](const Chunk& c) {
    return c.kind == Chunk::PP ? Chunk::NP : c.kind;
  };
  auto chunk_head = [&](const Chunk& c) {
    return c.kind == Chunk::PP && c.has_np ? c.np_head : c.head;
  };
  for (std::size_t t = sentence.begin; t < sentence.end; ++t) {
    if (toks[t].pos != PosTag::Conj) continue;
    const Chunk* right = nullptr;
    for (const Chunk& c : chunks) {
      if (c.begin > t && (c.kind != Chunk::PP || c.has_np)) {
        right = &c;
        break;
      }
    }
    if (!right) continue;
    for (std::size_t c = chunks.size(); c-- > 0;) {
      if (chunks[c].end > t) continue;
      if (chunk_kind(chunks[c]) != chunk_kind(*right)) continue;
      add_edge(chunk_head(chunks[c]), chunk_head(*right), DepLabel::Conj);
      break;
    }
  }

  return g;
}

std::vector<DependencyGraph> build_all_dependencies(const DocumentUnit& unit) {
  std::vector<DependencyGraph> out;
  out.reserve(unit.sentences.size());
  for (const Sentence& s : unit.sentences) out.push_back(build_dependencies(unit, s));
  return out;
}

std::optional<int> dep_path_len(std::span<const DependencyGraph> graphs, std::size_t t1,
                                std::size_t t2) {
  if (t1 == t2) return 0;
  const DependencyGraph* g = nullptr;
  for (const auto& cand : graphs) {
    bool in1 = t1 >= cand.token_begin && t1 < cand.token_end;
    bool in2 = t2 >= cand.token_begin && t2 < cand.token_end;
    if (in1 != in2) return std::nullopt;  // different sentences
    if (in1 && in2) {
      g = &cand;
      break;
    }
  }
  if (!g) return std::nullopt;

  std::unordered_map<std::size_t, std::vector<std::size_t>> adj;
  for (const DepEdge& e : g->edges) {
    adj[e.head].push_back(e.dep);
    adj[e.dep].push_back(e.head);
  }
  std::unordered_map<std::size_t, int> dist;
  std::deque<std::size_t> queue{t1};
  dist[t1] = 0;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    if (cur == t2) return dist[cur];
    auto it = adj.find(cur);
    if (it == adj.end()) continue;
    for (std::size_t nxt : it->second) {
      if (dist.contains(nxt)) continue;
      dist[nxt] = dist[cur] + 1;
      queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

}  // namespace doctax
