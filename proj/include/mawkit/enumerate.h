#ifndef MAWKIT_ENUMERATE_H_
#define MAWKIT_ENUMERATE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mawkit/dawg.h"
#include "mawkit/label_set.h"
#include "mawkit/symbols.h"

namespace mawkit {

// Constant-space encoding of a MAW a·u·b: `first` is the rank of a and
// positions start..end (1-based, inclusive) of document `doc` (1-based) spell
// u·b. A length-1 MAW has an empty range, start == end + 1.
struct MawRef {
  Symbol first = 0;
  std::uint32_t doc = 0;
  std::uint32_t start = 0;
  std::uint32_t end = 0;

  std::size_t length() const { return std::size_t{end} + 2 - start; }
  friend bool operator==(const MawRef&, const MawRef&) = default;
};

// Membership pattern B over the k documents. Never all-zero.
class QueryMask {
 public:
  // Throws std::invalid_argument if `bits` is empty (all zero).
  explicit QueryMask(LabelSet bits);
  // Parses a bit string such as "10"; checks the length against `k`.
  static QueryMask Parse(std::string_view bits, std::size_t k);

  std::size_t k() const { return bits_.k(); }
  const LabelSet& bits() const { return bits_; }
  LabelView view() const { return bits_.view(); }

 private:
  LabelSet bits_;
};

// aub reached by an existing edge au -> aub is in MAW(S_B) iff, per word,
// Label(au) & Label(ub) & ~Label(aub) == B.
inline bool CandidatePresent(LabelView au, LabelView ub, LabelView aub,
                             LabelView mask) {
  for (std::size_t w = 0; w < mask.size(); ++w) {
    if ((au[w] & ub[w] & ~aub[w]) != mask[w]) return false;
  }
  return true;
}

// aub absent from every document is in MAW(S_B) iff
// Label(au) & Label(ub) == B.
inline bool CandidateAbsent(LabelView au, LabelView ub, LabelView mask) {
  for (std::size_t w = 0; w < mask.size(); ++w) {
    if ((au[w] & ub[w]) != mask[w]) return false;
  }
  return true;
}

// Per node u, the sorted regular out-edges of u whose target label passes a
// filter. For a query mask the filter is Label(ub) ⊇ B.
class SkipIndex {
 public:
  template <class Keep>
  SkipIndex(const Dawg& dawg, Keep keep) : begin_(dawg.num_nodes() + 1, 0) {
    for (NodeId v = 0; v < dawg.num_nodes(); ++v) {
      for (const Edge& e : dawg.regular_edges(v)) {
        if (keep(dawg.label(e.target))) entries_.push_back(e);
      }
      begin_[v + 1] = static_cast<std::uint32_t>(entries_.size());
    }
  }

  std::span<const Edge> list(NodeId u) const {
    return {entries_.data() + begin_[u], entries_.data() + begin_[u + 1]};
  }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<std::uint32_t> begin_;
  std::vector<Edge> entries_;
};

SkipIndex BuildSkipIndex(const Dawg& dawg, const QueryMask& mask);

// Instrumentation for the output-sensitivity checks.
struct ScanStats {
  std::uint64_t comparisons = 0;     // merge steps between the two cursors
  std::uint64_t label_word_ops = 0;  // words touched by label predicates
  std::uint64_t nodes_scanned = 0;   // nodes that passed the prefilter
  std::uint64_t emitted = 0;

  ScanStats& operator+=(const ScanStats& o) {
    comparisons += o.comparisons;
    label_word_ops += o.label_word_ops;
    nodes_scanned += o.nodes_scanned;
    emitted += o.emitted;
    return *this;
  }
};

using MawSink = std::function<void(const MawRef&)>;

// Streams MAW(S_B) in node order: length-1 MAWs first, then every longer MAW
// exactly once. Requires a labeled automaton and mask.k() == dawg.k().
std::size_t EnumerateMaws(const Dawg& dawg, const QueryMask& mask,
                          const MawSink& sink, ScanStats* stats = nullptr);

// Same output as EnumerateMaws, with the node range split across `threads`
// workers. Emission order is unspecified.
std::vector<MawRef> EnumerateMawsParallel(const Dawg& dawg, const QueryMask& mask,
                                          unsigned threads,
                                          ScanStats* stats = nullptr);

enum class SetOp { kIntersection, kUnion, kSymmetricDifference };

// MAW(S1) ∩ MAW(S2), ∪, or △ for a two-document automaton, as a union of
// disjoint mask queries. Throws std::invalid_argument when k != 2.
std::size_t EnumerateSetOp(const Dawg& dawg, SetOp op, const MawSink& sink,
                           ScanStats* stats = nullptr);

// Strings aub (length >= 2) absent from every document with au and ub each
// present in some document.
std::size_t EnumerateMawPrime(const Dawg& dawg, const MawSink& sink,
                              ScanStats* stats = nullptr);

// MAW(R) ∩ Substr(T) where R and T are disjoint nonempty sets of 1-based
// document ids; documents in neither set are ignored.
std::size_t EnumerateSpecific(const Dawg& dawg,
                              std::span<const std::uint32_t> target_docs,
                              std::span<const std::uint32_t> ref_docs,
                              const MawSink& sink, ScanStats* stats = nullptr);

// External bytes of a MAW. Throws std::logic_error if the reference does not
// fit the collection.
std::string DecodeMaw(const MawRef& ref, const DocumentCollection& collection);

}  // namespace mawkit

#endif  // MAWKIT_ENUMERATE_H_
