#include "mawkit/enumerate.h"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <utility>

namespace mawkit {
namespace {

void RequireLabels(const Dawg& dawg) {
  if (!dawg.labeled()) throw std::invalid_argument("automaton has no labels");
}

// First symbol of the shortest member of x. The shortest member is the
// suffix of length longest(link(x)) + 1 of the sample occurrence.
Symbol ShortestFirst(const Dawg& dawg, NodeId x) {
  const Occurrence occ = dawg.sample(x);
  return dawg.at(occ.doc, occ.end - dawg.longest(dawg.suffix_link(x)));
}

MawRef MakeRef(const Dawg& dawg, Symbol a, NodeId u, NodeId ub) {
  const Occurrence occ = dawg.sample(ub);
  return MawRef{a, occ.doc, occ.end - dawg.longest(u), occ.end};
}

// Shared merge scan. For every non-source node x whose shortest member au
// starts with a regular symbol and passes `policy.Node`, walks the regular
// adjacency of x (Char(au)) against `policy.List(u)` with u = link(x), both
// sorted by rank:
//   equal ranks      -> aub exists;  policy.Present decides emission
//   list rank lower  -> aub is absent; policy.Absent decides emission
//   adjacency lower  -> no candidate, charged to the edge of au
template <class Policy>
void ScanNodes(const Dawg& dawg, NodeId begin, NodeId end, const Policy& policy,
               const MawSink& sink, ScanStats& stats) {
  const std::uint64_t words = dawg.label_words();
  for (NodeId x = std::max<NodeId>(begin, 1); x < end; ++x) {
    const Symbol a = ShortestFirst(dawg, x);
    if (a >= dawg.sigma()) continue;
    const LabelView au = dawg.label(x);
    stats.label_word_ops += words;
    if (!policy.Node(au)) continue;
    ++stats.nodes_scanned;

    const NodeId u = dawg.suffix_link(x);
    const auto upper = dawg.regular_edges(x);
    const auto lower = policy.List(u);
    auto hi = upper.begin();
    for (auto lo = lower.begin(); lo != lower.end();) {
      ++stats.comparisons;
      if (hi == upper.end() || hi->symbol > lo->symbol) {
        stats.label_word_ops += words;
        if (policy.Absent(au, dawg.label(lo->target))) {
          ++stats.emitted;
          sink(MakeRef(dawg, a, u, lo->target));
        }
        ++lo;
      } else if (hi->symbol == lo->symbol) {
        stats.label_word_ops += words;
        if (policy.Present(au, dawg.label(lo->target), dawg.label(hi->target))) {
          ++stats.emitted;
          sink(MakeRef(dawg, a, u, lo->target));
        }
        ++hi;
        ++lo;
      } else {
        ++hi;
      }
    }
  }
}

struct MaskPolicy {
  const SkipIndex& skip;
  LabelView mask;

  bool Node(LabelView au) const { return labels::Covers(au, mask); }
  std::span<const Edge> List(NodeId u) const { return skip.list(u); }
  bool Absent(LabelView au, LabelView ub) const {
    return CandidateAbsent(au, ub, mask);
  }
  bool Present(LabelView au, LabelView ub, LabelView aub) const {
    return CandidatePresent(au, ub, aub, mask);
  }
};

struct PrimePolicy {
  const Dawg& dawg;

  bool Node(LabelView) const { return true; }
  std::span<const Edge> List(NodeId u) const { return dawg.regular_edges(u); }
  bool Absent(LabelView, LabelView) const { return true; }
  bool Present(LabelView, LabelView, LabelView) const { return false; }
};

struct SpecificPolicy {
  const SkipIndex& skip;
  LabelView target;
  LabelView ref;

  bool Node(LabelView au) const { return labels::Intersects(au, ref); }
  std::span<const Edge> List(NodeId u) const { return skip.list(u); }
  // aub absent everywhere cannot be a substring of a target document.
  bool Absent(LabelView, LabelView) const { return false; }
  bool Present(LabelView, LabelView, LabelView aub) const {
    return !labels::Intersects(aub, ref) && labels::Intersects(aub, target);
  }
};

// Length-1 MAWs: symbol c qualifies iff occ(c) == ~B over the k bits, where
// occ(c) is the label of the source's c-child (empty when there is none).
std::size_t EmitSingleSymbols(const Dawg& dawg, const QueryMask& mask,
                              const MawSink& sink, ScanStats& stats) {
  const LabelSet wanted = mask.bits().Complement();
  const LabelSet nowhere(dawg.k());
  std::size_t count = 0;
  for (Symbol c = 0; c < dawg.sigma(); ++c) {
    const NodeId v = dawg.child(dawg.source(), c);
    const LabelView occ = v == kNoNode ? nowhere.view() : dawg.label(v);
    stats.label_word_ops += dawg.label_words();
    if (labels::Equal(occ, wanted)) {
      ++count;
      sink(MawRef{c, 1, 1, 0});
    }
  }
  stats.emitted += count;
  return count;
}

LabelSet DocSet(std::span<const std::uint32_t> docs, std::size_t k,
                const char* what) {
  if (docs.empty()) throw std::invalid_argument(std::string(what) + " set is empty");
  LabelSet out(k);
  for (auto d : docs) {
    if (d == 0 || d > k) {
      throw std::invalid_argument(std::string(what) + " document id " +
                                  std::to_string(d) + " out of range");
    }
    out.set(d - 1);
  }
  return out;
}

}  // namespace

QueryMask::QueryMask(LabelSet bits) : bits_(std::move(bits)) {
  if (bits_.empty()) {
    throw std::invalid_argument(
        "the all-zero mask asks for words that are a MAW of no document; "
        "there are no MAWs to output");
  }
}

QueryMask QueryMask::Parse(std::string_view bits, std::size_t k) {
  if (bits.size() != k) {
    throw std::invalid_argument("mask has " + std::to_string(bits.size()) +
                                " bits but the collection has " +
                                std::to_string(k) + " documents");
  }
  return QueryMask(LabelSet::FromBitString(bits));
}

SkipIndex BuildSkipIndex(const Dawg& dawg, const QueryMask& mask) {
  RequireLabels(dawg);
  const LabelView m = mask.view();
  return SkipIndex(dawg, [m](LabelView child) { return labels::Covers(child, m); });
}

std::size_t EnumerateMaws(const Dawg& dawg, const QueryMask& mask,
                          const MawSink& sink, ScanStats* stats) {
  RequireLabels(dawg);
  if (mask.k() != dawg.k()) {
    throw std::invalid_argument("mask length does not match document count");
  }
  ScanStats local;
  EmitSingleSymbols(dawg, mask, sink, local);
  const SkipIndex skip = BuildSkipIndex(dawg, mask);
  ScanNodes(dawg, 0, static_cast<NodeId>(dawg.num_nodes()),
            MaskPolicy{skip, mask.view()}, sink, local);
  if (stats) *stats += local;
  return local.emitted;
}

std::vector<MawRef> EnumerateMawsParallel(const Dawg& dawg, const QueryMask& mask,
                                          unsigned threads, ScanStats* stats) {
  RequireLabels(dawg);
  if (mask.k() != dawg.k()) {
    throw std::invalid_argument("mask length does not match document count");
  }
  threads = std::max(1u, threads);
  std::vector<MawRef> out;
  ScanStats total;
  EmitSingleSymbols(dawg, mask, [&](const MawRef& r) { out.push_back(r); }, total);
  const SkipIndex skip = BuildSkipIndex(dawg, mask);
  const MaskPolicy policy{skip, mask.view()};

  const auto n = static_cast<NodeId>(dawg.num_nodes());
  const NodeId chunk = (n + threads - 1) / threads;
  std::vector<std::vector<MawRef>> parts(threads);
  std::vector<ScanStats> part_stats(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const NodeId lo = std::min<NodeId>(n, t * chunk);
    const NodeId hi = std::min<NodeId>(n, lo + chunk);
    workers.emplace_back([&, t, lo, hi] {
      ScanNodes(dawg, lo, hi, policy,
                [&](const MawRef& r) { parts[t].push_back(r); }, part_stats[t]);
    });
  }
  for (auto& w : workers) w.join();
  for (unsigned t = 0; t < threads; ++t) {
    out.insert(out.end(), parts[t].begin(), parts[t].end());
    total += part_stats[t];
  }
  if (stats) *stats += total;
  return out;
}

std::size_t EnumerateSetOp(const Dawg& dawg, SetOp op, const MawSink& sink,
                           ScanStats* stats) {
  if (dawg.k() != 2) {
    throw std::invalid_argument("set operations need exactly two documents");
  }
  std::vector<const char*> masks;
  if (op != SetOp::kIntersection) {
    masks.push_back("10");
    masks.push_back("01");
  }
  if (op != SetOp::kSymmetricDifference) masks.push_back("11");
  std::size_t count = 0;
  for (const char* m : masks) {
    count += EnumerateMaws(dawg, QueryMask::Parse(m, 2), sink, stats);
  }
  return count;
}

std::size_t EnumerateMawPrime(const Dawg& dawg, const MawSink& sink,
                              ScanStats* stats) {
  RequireLabels(dawg);
  ScanStats local;
  ScanNodes(dawg, 0, static_cast<NodeId>(dawg.num_nodes()), PrimePolicy{dawg},
            sink, local);
  if (stats) *stats += local;
  return local.emitted;
}

std::size_t EnumerateSpecific(const Dawg& dawg,
                              std::span<const std::uint32_t> target_docs,
                              std::span<const std::uint32_t> ref_docs,
                              const MawSink& sink, ScanStats* stats) {
  RequireLabels(dawg);
  const LabelSet target = DocSet(target_docs, dawg.k(), "target");
  const LabelSet ref = DocSet(ref_docs, dawg.k(), "reference");
  if (labels::Intersects(target, ref)) {
    throw std::invalid_argument("target and reference sets overlap");
  }

  ScanStats local;
  for (Symbol c = 0; c < dawg.sigma(); ++c) {
    const NodeId v = dawg.child(dawg.source(), c);
    if (v == kNoNode) continue;
    local.label_word_ops += 2 * dawg.label_words();
    if (labels::Intersects(dawg.label(v), target) &&
        !labels::Intersects(dawg.label(v), ref)) {
      ++local.emitted;
      sink(MawRef{c, 1, 1, 0});
    }
  }
  const LabelView r = ref.view();
  const SkipIndex skip(dawg, [r](LabelView child) { return labels::Intersects(child, r); });
  ScanNodes(dawg, 0, static_cast<NodeId>(dawg.num_nodes()),
            SpecificPolicy{skip, target.view(), ref.view()}, sink, local);
  if (stats) *stats += local;
  return local.emitted;
}

std::string DecodeMaw(const MawRef& ref, const DocumentCollection& collection) {
  const auto& table = collection.table;
  if (ref.first >= table.sigma() || ref.doc == 0 || ref.doc > collection.k() ||
      ref.start == 0 || ref.start > ref.end + 1) {
    throw std::logic_error("corrupt MAW reference");
  }
  const auto& doc = collection.docs[ref.doc - 1];
  // The sentinel at the document end is never part of a MAW.
  if (ref.end >= doc.size()) throw std::logic_error("corrupt MAW reference");
  std::string out;
  out.reserve(ref.length());
  out.push_back(static_cast<char>(table.symbol(ref.first)));
  for (std::uint32_t p = ref.start; p <= ref.end; ++p) {
    out.push_back(static_cast<char>(table.symbol(doc[p - 1])));
  }
  return out;
}

}  // namespace mawkit
