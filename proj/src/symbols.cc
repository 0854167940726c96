#include "mawkit/symbols.h"

#include <stdexcept>
#include <string>

namespace mawkit {

SymbolTable SymbolTable::FromBytes(std::span<const unsigned char> bytes) {
  SymbolTable table;
  std::array<bool, 256> seen{};
  for (unsigned char c : bytes) {
    if (seen[c]) throw std::invalid_argument("duplicate symbol in alphabet");
    seen[c] = true;
  }
  table.forward_.fill(-1);
  for (int c = 0; c < 256; ++c) {
    if (!seen[c]) continue;
    table.forward_[c] = static_cast<std::int32_t>(table.backward_.size());
    table.backward_.push_back(static_cast<unsigned char>(c));
  }
  return table;
}

std::optional<Symbol> SymbolTable::rank(unsigned char byte) const {
  if (forward_[byte] < 0) return std::nullopt;
  return static_cast<Symbol>(forward_[byte]);
}

Symbol SymbolTable::sentinel(std::size_t doc) const {
  if (doc == 0 || doc > num_documents_) {
    throw std::out_of_range("document index out of range");
  }
  return static_cast<Symbol>(sigma() + doc - 1);
}

std::size_t DocumentCollection::total_length() const {
  std::size_t n = 0;
  for (const auto& d : docs) n += d.size();
  return n;
}

std::string DocumentCollection::raw(std::size_t doc) const {
  const auto& d = docs.at(doc - 1);
  std::string out;
  out.reserve(d.size() - 1);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    out.push_back(static_cast<char>(table.symbol(d[i])));
  }
  return out;
}

std::vector<Symbol> DocumentCollection::Concatenate() const {
  std::vector<Symbol> text;
  text.reserve(total_length());
  for (const auto& d : docs) text.insert(text.end(), d.begin(), d.end());
  return text;
}

std::vector<std::uint32_t> DocumentCollection::Boundaries() const {
  std::vector<std::uint32_t> out;
  out.reserve(docs.size());
  std::uint32_t acc = 0;
  for (const auto& d : docs) {
    acc += static_cast<std::uint32_t>(d.size());
    out.push_back(acc);
  }
  return out;
}

DocumentCollection InternCollection(
    std::span<const std::string> raw_docs,
    std::optional<std::string_view> extra_alphabet) {
  if (raw_docs.empty()) {
    throw std::invalid_argument("collection needs at least one document");
  }
  std::array<bool, 256> used{};
  if (extra_alphabet) {
    for (char ch : *extra_alphabet) {
      auto c = static_cast<unsigned char>(ch);
      if (used[c]) {
        throw std::invalid_argument(
            std::string("duplicate symbol '") + ch + "' in extra alphabet");
      }
      used[c] = true;
    }
  }
  for (const auto& doc : raw_docs) {
    for (char ch : doc) used[static_cast<unsigned char>(ch)] = true;
  }
  std::vector<unsigned char> bytes;
  for (int c = 0; c < 256; ++c) {
    if (used[c]) bytes.push_back(static_cast<unsigned char>(c));
  }

  DocumentCollection out;
  out.table = SymbolTable::FromBytes(bytes);
  out.table.num_documents_ = raw_docs.size();
  out.docs.reserve(raw_docs.size());
  for (std::size_t i = 0; i < raw_docs.size(); ++i) {
    std::vector<Symbol> doc;
    doc.reserve(raw_docs[i].size() + 1);
    for (char ch : raw_docs[i]) {
      doc.push_back(*out.table.rank(static_cast<unsigned char>(ch)));
    }
    doc.push_back(out.table.sentinel(i + 1));
    out.docs.push_back(std::move(doc));
  }
  return out;
}

}  // namespace mawkit
