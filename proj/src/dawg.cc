#include "mawkit/dawg.h"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace mawkit {
namespace {

constexpr std::uint32_t kNoEdge = std::numeric_limits<std::uint32_t>::max();

// Open-addressing map from (node, symbol) to an index into the edge pool.
class TransitionTable {
 public:
  explicit TransitionTable(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    Allocate(cap);
  }

  std::uint32_t Find(NodeId v, Symbol c) const {
    const std::uint64_t key = Key(v, c);
    for (std::size_t i = Slot(key);; i = (i + 1) & mask_) {
      if (keys_[i] == key) return values_[i];
      if (keys_[i] == kEmpty) return kNoEdge;
    }
  }

  void Insert(NodeId v, Symbol c, std::uint32_t value) {
    if (2 * (size_ + 1) > keys_.size()) Grow();
    Place(Key(v, c), value);
    ++size_;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  static std::uint64_t Key(NodeId v, Symbol c) {
    return (std::uint64_t{v} << 32) | c;
  }
  std::size_t Slot(std::uint64_t key) const {
    return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> shift_);
  }

  void Allocate(std::size_t cap) {
    keys_.assign(cap, kEmpty);
    values_.assign(cap, 0);
    mask_ = cap - 1;
    shift_ = 64 - std::countr_zero(cap);
  }

  void Place(std::uint64_t key, std::uint32_t value) {
    std::size_t i = Slot(key);
    while (keys_[i] != kEmpty) i = (i + 1) & mask_;
    keys_[i] = key;
    values_[i] = value;
  }

  void Grow() {
    auto old_keys = std::move(keys_);
    auto old_values = std::move(values_);
    Allocate(old_keys.size() * 2);
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] != kEmpty) Place(old_keys[i], old_values[i]);
    }
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> values_;
  std::size_t size_ = 0;
  std::size_t mask_ = 0;
  int shift_ = 0;
};

struct PoolEdge {
  Symbol symbol;
  NodeId target;
  std::uint32_t next;
};

// Sorts (source, symbol, target) triples into CSR form: first bucket by
// symbol, then stable-scatter by source.
void MaterializeSorted(std::size_t num_nodes, std::span<const NodeId> sources,
                       std::span<const PoolEdge> pool,
                       std::vector<std::uint32_t>& edge_begin,
                       std::vector<Edge>& edges) {
  Symbol max_symbol = 0;
  for (const auto& e : pool) max_symbol = std::max(max_symbol, e.symbol);
  std::vector<std::uint32_t> by_symbol(std::size_t{max_symbol} + 2, 0);
  for (const auto& e : pool) ++by_symbol[e.symbol + 1];
  for (std::size_t c = 1; c < by_symbol.size(); ++c) by_symbol[c] += by_symbol[c - 1];
  std::vector<std::uint32_t> order(pool.size());
  for (std::uint32_t i = 0; i < pool.size(); ++i) {
    order[by_symbol[pool[i].symbol]++] = i;
  }

  edge_begin.assign(num_nodes + 1, 0);
  for (NodeId s : sources) ++edge_begin[s + 1];
  for (std::size_t v = 1; v <= num_nodes; ++v) edge_begin[v] += edge_begin[v - 1];
  std::vector<std::uint32_t> fill(edge_begin.begin(), edge_begin.end() - 1);
  edges.resize(pool.size());
  for (std::uint32_t i : order) {
    edges[fill[sources[i]]++] = Edge{pool[i].symbol, pool[i].target};
  }
}

}  // namespace

SuffixAutomaton BuildConcatDawg(std::span<const Symbol> text) {
  if (text.empty()) throw std::invalid_argument("text must be nonempty");
  const std::size_t n = text.size();

  SuffixAutomaton sa;
  sa.longest.reserve(2 * n + 1);
  sa.link.reserve(2 * n + 1);
  sa.first_end.reserve(2 * n + 1);
  sa.spine.assign(n + 1, kNoNode);

  std::vector<std::uint32_t> head;
  head.reserve(2 * n + 1);
  std::vector<PoolEdge> pool;
  std::vector<NodeId> pool_source;
  pool.reserve(3 * n);
  pool_source.reserve(3 * n);
  TransitionTable table(3 * n);

  auto new_node = [&](std::uint32_t len, std::uint32_t end) {
    sa.longest.push_back(len);
    sa.link.push_back(kNoNode);
    sa.first_end.push_back(end);
    head.push_back(kNoEdge);
    return static_cast<NodeId>(sa.longest.size() - 1);
  };
  auto add_edge = [&](NodeId v, Symbol c, NodeId target) {
    const auto idx = static_cast<std::uint32_t>(pool.size());
    pool.push_back(PoolEdge{c, target, head[v]});
    pool_source.push_back(v);
    head[v] = idx;
    table.Insert(v, c, idx);
  };

  NodeId last = new_node(0, 0);
  sa.spine[0] = last;
  for (std::size_t i = 1; i <= n; ++i) {
    const Symbol c = text[i - 1];
    const NodeId cur = new_node(sa.longest[last] + 1, static_cast<std::uint32_t>(i));
    NodeId p = last;
    std::uint32_t e = kNoEdge;
    while (p != kNoNode && (e = table.Find(p, c)) == kNoEdge) {
      add_edge(p, c, cur);
      p = sa.link[p];
    }
    if (p == kNoNode) {
      sa.link[cur] = 0;
    } else {
      const NodeId q = pool[e].target;
      if (sa.longest[p] + 1 == sa.longest[q]) {
        sa.link[cur] = q;
      } else {
        const NodeId clone = new_node(sa.longest[p] + 1, static_cast<std::uint32_t>(i));
        for (std::uint32_t f = head[q]; f != kNoEdge; f = pool[f].next) {
          add_edge(clone, pool[f].symbol, pool[f].target);
        }
        sa.link[clone] = sa.link[q];
        while (p != kNoNode) {
          const std::uint32_t f = table.Find(p, c);
          if (f == kNoEdge || pool[f].target != q) break;
          pool[f].target = clone;
          p = sa.link[p];
        }
        sa.link[q] = clone;
        sa.link[cur] = clone;
      }
    }
    last = cur;
    sa.spine[i] = cur;
  }

  MaterializeSorted(sa.num_nodes(), pool_source, pool, sa.edge_begin, sa.edges);
  return sa;
}

NodeId Dawg::child(NodeId v, Symbol c) const {
  const auto out = edges(v);
  auto it = std::lower_bound(out.begin(), out.end(), c,
                             [](const Edge& e, Symbol s) { return e.symbol < s; });
  return (it != out.end() && it->symbol == c) ? it->target : kNoNode;
}

NodeId Dawg::Walk(std::span<const Symbol> word) const {
  NodeId v = source();
  for (Symbol c : word) {
    v = child(v, c);
    if (v == kNoNode) break;
  }
  return v;
}

Dawg PruneToMulti(SuffixAutomaton sa, std::span<const Symbol> text,
                  std::span<const std::uint32_t> boundaries, std::size_t sigma) {
  const std::size_t k = boundaries.size();
  if (k == 0) throw std::invalid_argument("need at least one boundary");
  if (boundaries.back() != text.size() || sa.spine.size() != text.size() + 1) {
    throw std::invalid_argument("last boundary must equal the text length");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t lo = i == 0 ? 0 : boundaries[i - 1];
    if (boundaries[i] <= lo) {
      throw std::invalid_argument("boundaries must be strictly increasing");
    }
    for (std::uint32_t p = lo + 1; p < boundaries[i]; ++p) {
      if (text[p - 1] >= sigma) {
        throw std::invalid_argument("sentinel symbol inside a document at position " +
                                    std::to_string(p));
      }
    }
    if (text[boundaries[i] - 1] != sigma + i) {
      throw std::invalid_argument("boundary " + std::to_string(i + 1) +
                                  " does not end with its sentinel");
    }
  }

  const std::size_t num_nodes = sa.num_nodes();
  std::vector<std::uint32_t> indegree(num_nodes, 0);
  for (const Edge& e : sa.edges) ++indegree[e.target];
  std::vector<char> alive(num_nodes, 1);
  std::vector<char> cut(num_nodes, 0);  // out-edges removed

  // Spine nodes past L_1 contain a sentinel, so they have a single EndPos and
  // exactly one out-edge: the next spine edge.
  for (std::size_t i = k; i >= 2; --i) {
    const std::uint32_t from = boundaries[i - 2];
    const std::uint32_t to = boundaries[i - 1];
    const NodeId cut_node = sa.spine[from];
    assert(sa.out(cut_node).size() == 1);
    cut[cut_node] = 1;
    --indegree[sa.spine[from + 1]];
    std::uint32_t p = from + 1;
    for (; p <= to && indegree[sa.spine[p]] == 0; ++p) {
      alive[sa.spine[p]] = 0;
      if (p < to) --indegree[sa.spine[p + 1]];
    }
    if (p > to) throw std::logic_error("pruning removed a document sink");
    for (; p <= to; ++p) sa.longest[sa.spine[p]] = p - from;
  }

  std::vector<NodeId> remap(num_nodes, kNoNode);
  NodeId next = 0;
  for (NodeId v = 0; v < num_nodes; ++v) {
    if (alive[v]) remap[v] = next++;
  }

  Dawg out;
  out.sigma_ = sigma;
  out.text_.assign(text.begin(), text.end());
  out.doc_begin_.assign(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) out.doc_begin_[i + 1] = boundaries[i];
  out.longest_.resize(next);
  out.link_.resize(next);
  out.sample_.resize(next);
  out.edge_begin_.assign(next + 1, 0);
  out.regular_end_.resize(next);
  out.edges_.reserve(sa.num_edges());

  for (NodeId v = 0; v < num_nodes; ++v) {
    if (!alive[v]) continue;
    const NodeId nv = remap[v];
    out.longest_[nv] = sa.longest[v];
    out.link_[nv] = v == 0 ? kNoNode : remap[sa.link[v]];
    if (v != 0) {
      const std::uint32_t end = sa.first_end[v];
      const auto doc = static_cast<std::uint32_t>(
          std::lower_bound(boundaries.begin(), boundaries.end(), end) -
          boundaries.begin());
      out.sample_[nv] = Occurrence{doc + 1, end - out.doc_begin_[doc]};
    }
    if (!cut[v]) {
      for (const Edge& e : sa.out(v)) {
        out.edges_.push_back(Edge{e.symbol, remap[e.target]});
      }
    }
    out.edge_begin_[nv + 1] = static_cast<std::uint32_t>(out.edges_.size());
    const auto es = out.edges(nv);
    out.regular_end_[nv] = out.edge_begin_[nv] +
        static_cast<std::uint32_t>(
            std::partition_point(es.begin(), es.end(),
                                 [&](const Edge& e) { return e.symbol < sigma; }) -
            es.begin());
  }
  out.sinks_.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.sinks_[i] = remap[sa.spine[boundaries[i]]];
  return out;
}

void ComputeLabels(Dawg& dawg) {
  const std::size_t n = dawg.num_nodes();
  const std::size_t words = dawg.label_words();
  dawg.labels_.assign(n * words, 0);

  std::uint32_t max_len = 0;
  for (auto len : dawg.longest_) max_len = std::max(max_len, len);
  std::vector<std::uint32_t> bucket(std::size_t{max_len} + 2, 0);
  for (auto len : dawg.longest_) ++bucket[len + 1];
  for (std::size_t l = 1; l < bucket.size(); ++l) bucket[l] += bucket[l - 1];
  std::vector<NodeId> order(n);
  for (NodeId v = 0; v < n; ++v) order[bucket[dawg.longest_[v]]++] = v;

  for (std::size_t i = 0; i < dawg.k(); ++i) {
    dawg.labels_[dawg.sinks_[i] * words + i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  // Every edge goes to a strictly longer node, so descending length order is
  // reverse topological.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Word* dst = dawg.labels_.data() + std::size_t{*it} * words;
    for (const Edge& e : dawg.edges(*it)) {
      const Word* src = dawg.labels_.data() + std::size_t{e.target} * words;
      for (std::size_t w = 0; w < words; ++w) dst[w] |= src[w];
    }
  }
}

Dawg BuildDawg(const DocumentCollection& collection) {
  const auto text = collection.Concatenate();
  const auto boundaries = collection.Boundaries();
  Dawg dawg = PruneToMulti(BuildConcatDawg(text), text, boundaries, collection.sigma());
  ComputeLabels(dawg);
  return dawg;
}

std::string ToDot(const Dawg& dawg, const SymbolTable& table) {
  auto symbol_name = [&](Symbol c) -> std::string {
    if (c >= table.sigma()) return "#" + std::to_string(c - table.sigma() + 1);
    const unsigned char b = table.symbol(c);
    if (b == '"' || b == '\\') return std::string("\\") + static_cast<char>(b);
    if (b < 0x20 || b >= 0x7f) {
      std::ostringstream os;
      os << "\\\\x" << std::hex << static_cast<int>(b);
      return os.str();
    }
    return std::string(1, static_cast<char>(b));
  };
  std::ostringstream os;
  os << "digraph dawg {\n  rankdir=LR;\n";
  for (NodeId v = 0; v < dawg.num_nodes(); ++v) {
    os << "  n" << v << " [label=\"" << v << " len=" << dawg.longest(v);
    if (dawg.labeled()) {
      os << " ";
      for (std::size_t i = 0; i < dawg.k(); ++i) {
        os << (labels::Test(dawg.label(v), i) ? '1' : '0');
      }
    }
    os << "\"];\n";
  }
  for (NodeId v = 0; v < dawg.num_nodes(); ++v) {
    for (const Edge& e : dawg.edges(v)) {
      os << "  n" << v << " -> n" << e.target << " [label=\"" << symbol_name(e.symbol)
         << "\"];\n";
    }
    if (dawg.suffix_link(v) != kNoNode) {
      os << "  n" << v << " -> n" << dawg.suffix_link(v) << " [style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace mawkit
