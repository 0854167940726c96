#ifndef MAWKIT_SYMBOLS_H_
#define MAWKIT_SYMBOLS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mawkit {

struct DocumentCollection;

// Dense integer rank of an interned symbol. Regular symbols occupy
// 0..sigma-1 in byte order; document i (1-based) is terminated by the
// sentinel rank sigma+i-1.
using Symbol = std::uint32_t;

// Maps external bytes to dense ranks and back. Rank order equals byte order,
// so every list sorted by rank is also sorted lexicographically.
class SymbolTable {
 public:
  SymbolTable() = default;

  // Builds a table over the given set of bytes; duplicates are not allowed.
  static SymbolTable FromBytes(std::span<const unsigned char> bytes);

  std::size_t sigma() const { return backward_.size(); }
  std::size_t num_documents() const { return num_documents_; }

  std::optional<Symbol> rank(unsigned char byte) const;
  unsigned char symbol(Symbol rank) const { return backward_.at(rank); }

  Symbol sentinel(std::size_t doc) const;  // doc is 1-based.
  bool is_sentinel(Symbol rank) const { return rank >= sigma(); }

  std::string_view alphabet() const {
    return {reinterpret_cast<const char*>(backward_.data()), backward_.size()};
  }

 private:
  friend struct DocumentCollection;
  friend DocumentCollection InternCollection(
      std::span<const std::string> raw_docs,
      std::optional<std::string_view> extra_alphabet);

  std::array<std::int32_t, 256> forward_{};  // -1 when absent.
  std::vector<unsigned char> backward_;
  std::size_t num_documents_ = 0;
};

// k sentinel-terminated rank sequences sharing one symbol table.
struct DocumentCollection {
  SymbolTable table;
  std::vector<std::vector<Symbol>> docs;

  std::size_t k() const { return docs.size(); }
  std::size_t sigma() const { return table.sigma(); }
  // Total length including one sentinel per document.
  std::size_t total_length() const;

  // Document i (1-based) without its sentinel, in external bytes.
  std::string raw(std::size_t doc) const;

  // Concatenation S1#1 S2#2 ... Sk#k.
  std::vector<Symbol> Concatenate() const;
  // Prefix lengths L_i = |S1#1...Si#i|, i = 1..k.
  std::vector<std::uint32_t> Boundaries() const;
};

// Interns raw documents. Ranks follow byte order over the union of the
// occurring bytes and `extra_alphabet`. Throws std::invalid_argument on an
// empty collection or on a repeated symbol inside `extra_alphabet`.
DocumentCollection InternCollection(
    std::span<const std::string> raw_docs,
    std::optional<std::string_view> extra_alphabet = std::nullopt);

}  // namespace mawkit

#endif  // MAWKIT_SYMBOLS_H_
