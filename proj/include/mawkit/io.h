#ifndef MAWKIT_IO_H_
#define MAWKIT_IO_H_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mawkit/enumerate.h"
#include "mawkit/symbols.h"

namespace mawkit {

// Raised for unreadable or malformed inputs; the CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FastaRecord {
  std::string name;
  std::string sequence;
};

// Records of a FASTA text. Sequence lines are concatenated verbatim (case
// preserved, trailing '\r' dropped). Throws InputError when there is no
// record or when sequence data precedes the first header.
std::vector<FastaRecord> ParseFasta(std::string_view text);

// Whole file as bytes, minus a single trailing newline.
std::string ReadPlainDocument(const std::string& path);

struct LoadedInputs {
  std::vector<std::string> names;
  DocumentCollection collection;
};

// Plain mode: one document per path. FASTA mode: one document per record,
// records of all files in command-line order.
LoadedInputs ParseInputs(std::span<const std::string> paths, bool fasta,
                         std::optional<std::string_view> alphabet);

// --- rendering ---

struct LengthRange {
  std::size_t min = 0;
  std::size_t max = static_cast<std::size_t>(-1);
  bool contains(std::size_t len) const { return len >= min && len <= max; }
};

struct DecodedMaw {
  std::string text;
  MawRef ref;
};

// Decodes, applies the length filter and sorts by (length, bytes).
std::vector<DecodedMaw> DecodeSorted(std::span<const MawRef> refs,
                                     const DocumentCollection& collection,
                                     const LengthRange& range = {});

// Printable ASCII passes through; everything else and '\' becomes \xHH.
std::string EscapeBytes(std::string_view bytes);

enum class OutputFormat { kSurface, kTuples };

// Surface: one string per line. Tuples: a<TAB>doc<TAB>start<TAB>end with
// 1-based inclusive positions.
std::string RenderMaws(std::span<const DecodedMaw> maws, OutputFormat format);

// Count-only sink: tallies references by length without decoding them.
struct MawCounter {
  LengthRange range;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_length;  // indexed by MAW length

  void Add(const MawRef& ref) {
    const std::size_t len = ref.length();
    if (!range.contains(len)) return;
    ++total;
    if (len >= by_length.size()) by_length.resize(len + 1, 0);
    ++by_length[len];
  }
  // Count line, optionally followed by length<TAB>count lines.
  std::string Render(bool histogram) const;
};

}  // namespace mawkit

#endif  // MAWKIT_IO_H_
