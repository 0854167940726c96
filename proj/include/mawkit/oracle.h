#ifndef MAWKIT_ORACLE_H_
#define MAWKIT_ORACLE_H_

// Brute-force reference semantics. Nothing here touches an automaton: every
// notion is computed from explicit substring sets, so results can be compared
// against the DAWG-based enumeration on small instances.

#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "mawkit/label_set.h"
#include "mawkit/symbols.h"

namespace mawkit::oracle {

using StringSet = std::set<std::string>;

// All substrings of a set of strings, including the empty string.
class SubstrSet {
 public:
  SubstrSet() { strings_.insert(std::string()); }
  void Add(std::string_view text);
  bool contains(std::string_view w) const {
    return strings_.count(std::string(w)) != 0;
  }
  const std::unordered_set<std::string>& strings() const { return strings_; }

 private:
  std::unordered_set<std::string> strings_;
};

// MAWs over `alphabet` of a string set whose substrings are `sub`.
StringSet MawsOf(const SubstrSet& sub, std::string_view alphabet);
StringSet SingleMaws(std::string_view doc, std::string_view alphabet);

// MAW(S_B) from the definition: the intersection of MAW(S_i) over B[i] = 1
// minus the union over B[i] = 0. Throws std::invalid_argument on a zero mask
// or a length mismatch.
StringSet OracleMaws(const DocumentCollection& collection, const LabelSet& mask);

// aub (|aub| >= 2) absent from every document with au and ub each present in
// some document.
StringSet OraclePrime(const DocumentCollection& collection);

// MAW(R) ∩ Substr(T) for disjoint nonempty sets of 1-based document ids.
StringSet OracleSpecific(const DocumentCollection& collection,
                         std::span<const std::uint32_t> target_docs,
                         std::span<const std::uint32_t> ref_docs);

// Nonempty substrings of the sentinel-terminated documents grouped by their
// EndPos sets {(doc, end)}; one inner set per equivalence class.
using RankString = std::vector<Symbol>;
using Partition = std::set<std::set<RankString>>;
Partition EndPosPartition(const DocumentCollection& collection);

struct RandomSpec {
  std::size_t max_k = 4;
  std::size_t max_len = 20;
  std::size_t max_sigma = 4;
  std::size_t min_k = 1;
};

struct RandomInstance {
  std::vector<std::string> docs;
  std::string alphabet;  // declared alphabet, a prefix of "abcd..."

  DocumentCollection Intern() const;
  // Human-readable dump, reproducible by pasting into a test.
  std::string Describe() const;
};

RandomInstance RandomCollection(std::mt19937_64& rng, const RandomSpec& spec);

}  // namespace mawkit::oracle

#endif  // MAWKIT_ORACLE_H_
