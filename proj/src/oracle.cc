#include "mawkit/oracle.h"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace mawkit::oracle {

void SubstrSet::Add(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    for (std::size_t j = i + 1; j <= text.size(); ++j) {
      strings_.insert(std::string(text.substr(i, j - i)));
    }
  }
}

StringSet MawsOf(const SubstrSet& sub, std::string_view alphabet) {
  StringSet out;
  for (char c : alphabet) {
    if (!sub.contains(std::string_view(&c, 1))) out.insert(std::string(1, c));
  }
  // aub with au, ub present and aub absent.
  for (const std::string& au : sub.strings()) {
    if (au.empty()) continue;
    const std::string u = au.substr(1);
    for (char b : alphabet) {
      if (sub.contains(au + b)) continue;
      if (sub.contains(u + b)) out.insert(au + b);
    }
  }
  return out;
}

StringSet SingleMaws(std::string_view doc, std::string_view alphabet) {
  SubstrSet sub;
  sub.Add(doc);
  return MawsOf(sub, alphabet);
}

StringSet OracleMaws(const DocumentCollection& collection, const LabelSet& mask) {
  if (mask.k() != collection.k()) {
    throw std::invalid_argument("mask length does not match document count");
  }
  if (mask.empty()) throw std::invalid_argument("all-zero mask");
  const std::string_view alphabet = collection.table.alphabet();

  std::vector<StringSet> per_doc;
  for (std::size_t i = 1; i <= collection.k(); ++i) {
    per_doc.push_back(SingleMaws(collection.raw(i), alphabet));
  }
  StringSet out;
  bool first = true;
  for (std::size_t i = 0; i < collection.k(); ++i) {
    if (!mask.test(i)) continue;
    if (first) {
      out = per_doc[i];
      first = false;
      continue;
    }
    StringSet kept;
    for (const auto& w : out) {
      if (per_doc[i].count(w)) kept.insert(w);
    }
    out = std::move(kept);
  }
  for (std::size_t i = 0; i < collection.k(); ++i) {
    if (mask.test(i)) continue;
    for (const auto& w : per_doc[i]) out.erase(w);
  }
  return out;
}

StringSet OraclePrime(const DocumentCollection& collection) {
  SubstrSet all;
  for (std::size_t i = 1; i <= collection.k(); ++i) all.Add(collection.raw(i));
  StringSet out;
  for (const std::string& au : all.strings()) {
    if (au.empty()) continue;
    for (char b : collection.table.alphabet()) {
      const std::string w = au + b;
      if (!all.contains(w) && all.contains(w.substr(1))) out.insert(w);
    }
  }
  return out;
}

StringSet OracleSpecific(const DocumentCollection& collection,
                         std::span<const std::uint32_t> target_docs,
                         std::span<const std::uint32_t> ref_docs) {
  if (target_docs.empty() || ref_docs.empty()) {
    throw std::invalid_argument("target and reference sets must be nonempty");
  }
  for (auto t : target_docs) {
    for (auto r : ref_docs) {
      if (t == r) throw std::invalid_argument("target and reference sets overlap");
    }
  }
  SubstrSet target;
  SubstrSet ref;
  for (auto d : target_docs) target.Add(collection.raw(d));
  for (auto d : ref_docs) ref.Add(collection.raw(d));
  StringSet out;
  for (const auto& w : MawsOf(ref, collection.table.alphabet())) {
    if (target.contains(w)) out.insert(w);
  }
  return out;
}

Partition EndPosPartition(const DocumentCollection& collection) {
  std::map<RankString, std::set<std::pair<std::uint32_t, std::uint32_t>>> endpos;
  for (std::uint32_t d = 0; d < collection.k(); ++d) {
    const auto& doc = collection.docs[d];
    for (std::uint32_t i = 0; i < doc.size(); ++i) {
      for (std::uint32_t j = i; j < doc.size(); ++j) {
        endpos[RankString(doc.begin() + i, doc.begin() + j + 1)].insert({d + 1, j + 1});
      }
    }
  }
  std::map<std::set<std::pair<std::uint32_t, std::uint32_t>>, std::set<RankString>>
      classes;
  for (auto& [w, ends] : endpos) classes[ends].insert(w);
  Partition out;
  for (auto& [ends, members] : classes) out.insert(std::move(members));
  return out;
}

DocumentCollection RandomInstance::Intern() const {
  return InternCollection(docs, alphabet);
}

std::string RandomInstance::Describe() const {
  std::ostringstream os;
  os << "alphabet=\"" << alphabet << "\" docs={";
  for (std::size_t i = 0; i < docs.size(); ++i) {
    os << (i ? ", " : "") << '"' << docs[i] << '"';
  }
  os << "}";
  return os.str();
}

RandomInstance RandomCollection(std::mt19937_64& rng, const RandomSpec& spec) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  RandomInstance inst;
  const std::size_t sigma = pick(1, spec.max_sigma);
  for (std::size_t c = 0; c < sigma; ++c) inst.alphabet.push_back(static_cast<char>('a' + c));
  // Documents draw from a possibly smaller alphabet so that declared but
  // unused symbols show up as length-1 MAWs.
  const std::size_t used = pick(1, sigma);
  const std::size_t k = pick(spec.min_k, spec.max_k);
  for (std::size_t i = 0; i < k; ++i) {
    std::string doc(pick(0, spec.max_len), 'a');
    for (char& ch : doc) ch = static_cast<char>('a' + pick(0, used - 1));
    inst.docs.push_back(std::move(doc));
  }
  return inst;
}

}  // namespace mawkit::oracle
