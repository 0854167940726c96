#include "mawkit/label_set.h"

#include <bit>
#include <stdexcept>

namespace mawkit {

LabelSet LabelSet::FromBitString(std::string_view bits) {
  LabelSet out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may contain only '0' and '1': " +
                                  std::string(bits));
    }
  }
  return out;
}

std::size_t LabelSet::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

LabelSet& LabelSet::operator&=(LabelView other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other[w];
  return *this;
}

LabelSet& LabelSet::operator|=(LabelView other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other[w];
  ClearTail();
  return *this;
}

LabelSet& LabelSet::AndNot(LabelView other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other[w];
  return *this;
}

LabelSet LabelSet::Complement() const {
  LabelSet out(*this);
  for (Word& w : out.words_) w = ~w;
  out.ClearTail();
  return out;
}

std::string LabelSet::ToBitString() const {
  std::string out(k_, '0');
  for (std::size_t i = 0; i < k_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

void LabelSet::ClearTail() {
  const std::size_t tail = k_ % kWordBits;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (Word{1} << tail) - 1;
  }
}

}  // namespace mawkit
