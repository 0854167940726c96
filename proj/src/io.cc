#include "mawkit/io.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>

namespace mawkit {

std::vector<FastaRecord> ParseFasta(std::string_view text) {
  std::vector<FastaRecord> records;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '>') {
      records.push_back(FastaRecord{std::string(line.substr(1)), {}});
    } else if (!line.empty()) {
      if (records.empty()) throw InputError("FASTA sequence data before the first header");
      records.back().sequence.append(line);
    }
  }
  if (records.empty()) throw InputError("FASTA input has no records");
  return records;
}

std::string ReadPlainDocument(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file: " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (!bytes.empty() && bytes.back() == '\n') bytes.pop_back();
  return bytes;
}

LoadedInputs ParseInputs(std::span<const std::string> paths, bool fasta,
                         std::optional<std::string_view> alphabet) {
  std::vector<std::string> names;
  std::vector<std::string> docs;
  for (const auto& path : paths) {
    if (!fasta) {
      names.push_back(path);
      docs.push_back(ReadPlainDocument(path));
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read input file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    for (auto& rec : ParseFasta(text)) {
      names.push_back(std::move(rec.name));
      docs.push_back(std::move(rec.sequence));
    }
  }
  if (docs.empty()) throw InputError("no input documents");
  try {
    return LoadedInputs{std::move(names), InternCollection(docs, alphabet)};
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::vector<DecodedMaw> DecodeSorted(std::span<const MawRef> refs,
                                     const DocumentCollection& collection,
                                     const LengthRange& range) {
  std::vector<DecodedMaw> out;
  out.reserve(refs.size());
  for (const MawRef& r : refs) {
    if (!range.contains(r.length())) continue;
    out.push_back(DecodedMaw{DecodeMaw(r, collection), r});
  }
  std::sort(out.begin(), out.end(), [](const DecodedMaw& a, const DecodedMaw& b) {
    if (a.text.size() != b.text.size()) return a.text.size() < b.text.size();
    return a.text < b.text;
  });
  return out;
}

std::string EscapeBytes(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size());
  for (char ch : bytes) {
    const auto c = static_cast<unsigned char>(ch);
    if (c >= 0x20 && c < 0x7f && c != '\\') {
      out.push_back(ch);
    } else {
      char buf[5];
      std::snprintf(buf, sizeof(buf), "\\x%02X", c);
      out.append(buf);
    }
  }
  return out;
}

std::string RenderMaws(std::span<const DecodedMaw> maws, OutputFormat format) {
  std::string out;
  for (const auto& m : maws) {
    if (format == OutputFormat::kSurface) {
      out += EscapeBytes(m.text);
    } else {
      out += EscapeBytes(m.text.substr(0, 1));
      out += '\t' + std::to_string(m.ref.doc) + '\t' + std::to_string(m.ref.start) +
             '\t' + std::to_string(m.ref.end);
    }
    out += '\n';
  }
  return out;
}

std::string MawCounter::Render(bool histogram) const {
  std::ostringstream os;
  os << total << '\n';
  if (histogram) {
    for (std::size_t len = 0; len < by_length.size(); ++len) {
      if (by_length[len]) os << len << '\t' << by_length[len] << '\n';
    }
  }
  return os.str();
}

}  // namespace mawkit
