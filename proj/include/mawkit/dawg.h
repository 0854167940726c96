#ifndef MAWKIT_DAWG_H_
#define MAWKIT_DAWG_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mawkit/label_set.h"
#include "mawkit/symbols.h"

namespace mawkit {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
  Symbol symbol;
  NodeId target;
};

// One occurrence of a node's longest member: it ends at position `end` of
// document `doc` (both 1-based).
struct Occurrence {
  std::uint32_t doc = 0;
  std::uint32_t end = 0;
};

// Suffix automaton of a single text with edge-sorted CSR adjacency. This is
// the intermediate product of the concatenate-and-prune construction.
struct SuffixAutomaton {
  std::vector<std::uint32_t> longest;
  std::vector<NodeId> link;
  // 1-based text position where the node's longest member ends.
  std::vector<std::uint32_t> first_end;
  std::vector<std::uint32_t> edge_begin;  // num_nodes() + 1 entries
  std::vector<Edge> edges;
  // spine[p] is the node of text[1..p]; spine[0] is the source.
  std::vector<NodeId> spine;

  std::size_t num_nodes() const { return longest.size(); }
  std::size_t num_edges() const { return edges.size(); }
  std::span<const Edge> out(NodeId v) const {
    return {edges.data() + edge_begin[v], edges.data() + edge_begin[v + 1]};
  }
};

// Online construction over `text` with hashed transitions, followed by a
// counting sort that materializes sorted adjacency. `text` must be nonempty.
SuffixAutomaton BuildConcatDawg(std::span<const Symbol> text);

// The DAWG of a document collection. Node 0 is the source. Immutable after
// construction; safe for concurrent readers.
class Dawg {
 public:
  std::size_t num_nodes() const { return longest_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t k() const { return sinks_.size(); }
  std::size_t sigma() const { return sigma_; }
  std::size_t text_length() const { return text_.size(); }

  NodeId source() const { return 0; }
  // sinks()[i-1] is the sink of document i.
  std::span<const NodeId> sinks() const { return sinks_; }

  std::uint32_t longest(NodeId v) const { return longest_[v]; }
  std::uint32_t shortest(NodeId v) const {
    return v == source() ? 0 : longest_[link_[v]] + 1;
  }
  NodeId suffix_link(NodeId v) const { return link_[v]; }

  std::span<const Edge> edges(NodeId v) const {
    return {edges_.data() + edge_begin_[v], edges_.data() + edge_begin_[v + 1]};
  }
  // Out-edges on regular (non-sentinel) symbols; a prefix of edges(v).
  std::span<const Edge> regular_edges(NodeId v) const {
    return {edges_.data() + edge_begin_[v], edges_.data() + regular_end_[v]};
  }
  NodeId child(NodeId v, Symbol c) const;

  bool labeled() const { return !labels_.empty(); }
  std::size_t label_words() const { return WordsFor(k()); }
  LabelView label(NodeId v) const {
    return {labels_.data() + static_cast<std::size_t>(v) * label_words(),
            label_words()};
  }

  Occurrence sample(NodeId v) const { return sample_[v]; }
  // Symbol at 1-based `pos` of document `doc` (1-based, sentinel included).
  Symbol at(std::uint32_t doc, std::uint32_t pos) const {
    return text_[doc_begin_[doc - 1] + pos - 1];
  }
  std::uint32_t doc_length(std::uint32_t doc) const {
    return doc_begin_[doc] - doc_begin_[doc - 1];
  }

  // Follows `word` from the source; kNoNode when it leaves the automaton.
  NodeId Walk(std::span<const Symbol> word) const;

 private:
  friend Dawg PruneToMulti(SuffixAutomaton, std::span<const Symbol>,
                           std::span<const std::uint32_t>, std::size_t);
  friend void ComputeLabels(Dawg&);

  std::size_t sigma_ = 0;
  std::vector<std::uint32_t> longest_;
  std::vector<NodeId> link_;
  std::vector<std::uint32_t> edge_begin_;
  std::vector<std::uint32_t> regular_end_;
  std::vector<Edge> edges_;
  std::vector<Occurrence> sample_;
  std::vector<Word> labels_;
  std::vector<NodeId> sinks_;
  std::vector<Symbol> text_;
  std::vector<std::uint32_t> doc_begin_;  // k+1 prefix offsets into text_
};

// Turns the automaton of S1#1...Sk#k into the automaton of the collection.
// Spine edges are cut at boundaries L_{k-1}, ..., L_1; spine nodes left
// without in-edges are deleted and survivors get their longest length
// rebased to the owning document. `boundaries` are L_1 < ... < L_k = |text|
// and every text[L_i] must be the i-th sentinel (sigma + i - 1); throws
// std::invalid_argument otherwise.
Dawg PruneToMulti(SuffixAutomaton automaton, std::span<const Symbol> text,
                  std::span<const std::uint32_t> boundaries, std::size_t sigma);

// Document-membership labels: sink i is seeded with {i} and every other node
// takes the union of its children, in one pass by decreasing longest length.
void ComputeLabels(Dawg& dawg);

// BuildConcatDawg + PruneToMulti + ComputeLabels.
Dawg BuildDawg(const DocumentCollection& collection);

// Graphviz dump for debugging: node id, longest length and label bits; edges
// carry external symbols (sentinel i printed as #i).
std::string ToDot(const Dawg& dawg, const SymbolTable& table);

}  // namespace mawkit

#endif  // MAWKIT_DAWG_H_
