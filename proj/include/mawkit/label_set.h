#ifndef MAWKIT_LABEL_SET_H_
#define MAWKIT_LABEL_SET_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mawkit {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t WordsFor(std::size_t k) {
  return (k + kWordBits - 1) / kWordBits;
}

// Read-only view over a packed k-bit set; bit i-1 stands for document i.
using LabelView = std::span<const Word>;

namespace labels {

inline bool Test(LabelView a, std::size_t bit) {
  return (a[bit / kWordBits] >> (bit % kWordBits)) & 1u;
}

inline bool Equal(LabelView a, LabelView b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] != b[w]) return false;
  }
  return true;
}

// a ⊇ b
inline bool Covers(LabelView a, LabelView b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if ((a[w] & b[w]) != b[w]) return false;
  }
  return true;
}

inline bool Intersects(LabelView a, LabelView b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & b[w]) return true;
  }
  return false;
}

inline bool Empty(LabelView a) {
  for (Word w : a) {
    if (w) return false;
  }
  return true;
}

}  // namespace labels

// Owning k-bit set packed into WordsFor(k) words. Bits at positions >= k
// are always zero.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::size_t k) : k_(k), words_(WordsFor(k), 0) {}

  // Parses "1011": character i is the bit for document i+1.
  static LabelSet FromBitString(std::string_view bits);

  std::size_t k() const { return k_; }
  LabelView view() const { return words_; }
  operator LabelView() const { return words_; }  // NOLINT

  bool test(std::size_t bit) const { return labels::Test(words_, bit); }
  void set(std::size_t bit) { words_[bit / kWordBits] |= Word{1} << (bit % kWordBits); }
  void reset(std::size_t bit) {
    words_[bit / kWordBits] &= ~(Word{1} << (bit % kWordBits));
  }

  bool empty() const { return labels::Empty(words_); }
  std::size_t count() const;

  LabelSet& operator&=(LabelView other);
  LabelSet& operator|=(LabelView other);
  LabelSet& AndNot(LabelView other);
  // Complement within the k valid bits.
  LabelSet Complement() const;

  std::string ToBitString() const;

  friend bool operator==(const LabelSet& a, const LabelSet& b) {
    return a.k_ == b.k_ && a.words_ == b.words_;
  }

 private:
  void ClearTail();

  std::size_t k_ = 0;
  std::vector<Word> words_;
};

}  // namespace mawkit

#endif  // MAWKIT_LABEL_SET_H_
