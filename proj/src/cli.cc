#include "mawkit/cli.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mawkit/dawg.h"
#include "mawkit/enumerate.h"
#include "mawkit/io.h"
#include "mawkit/oracle.h"

namespace mawkit {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::vector<std::string> paths;
  bool fasta = false;
  std::optional<std::string> alphabet;
  std::string output;
};

struct OutputOptions {
  std::string format = "surface";
  bool count = false;
  bool histogram = false;
  std::size_t min_len = 0;
  std::size_t max_len = static_cast<std::size_t>(-1);
};

void AddInputOptions(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("inputs", in.paths, "Input files (one document per file)")->required();
  cmd->add_flag("--fasta", in.fasta, "Inputs are FASTA; one document per record");
  cmd->add_option("--alphabet", in.alphabet,
                  "Extra alphabet symbols (each byte at most once)");
  cmd->add_option("-o,--output", in.output, "Write results here instead of stdout");
}

void AddOutputOptions(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "surface | tuples")
      ->check(CLI::IsMember({"surface", "tuples"}));
  cmd->add_flag("--count", o.count, "Print only the number of results");
  cmd->add_flag("--histogram", o.histogram, "With --count: per-length counts");
  cmd->add_option("--min-len", o.min_len, "Drop results shorter than this");
  cmd->add_option("--max-len", o.max_len, "Drop results longer than this");
}

LoadedInputs Load(const InputOptions& in) {
  std::optional<std::string_view> alphabet;
  if (in.alphabet) alphabet = *in.alphabet;
  return ParseInputs(in.paths, in.fasta, alphabet);
}

// Writes to --output when given, else to `out`.
void Emit(const InputOptions& in, std::ostream& out, const std::string& text) {
  if (in.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(in.output, std::ios::binary);
  if (!file) throw InputError("cannot write output file: " + in.output);
  file << text;
}

// Runs `produce` with a sink and renders the collected results.
template <class Produce>
std::string CollectAndRender(const DocumentCollection& collection,
                             const OutputOptions& o, Produce produce) {
  const LengthRange range{o.min_len, o.max_len};
  if (o.count) {
    MawCounter counter{range, 0, {}};
    produce([&](const MawRef& r) { counter.Add(r); });
    return counter.Render(o.histogram);
  }
  std::vector<MawRef> refs;
  produce([&](const MawRef& r) { refs.push_back(r); });
  const auto decoded = DecodeSorted(refs, collection, range);
  return RenderMaws(decoded, o.format == "tuples" ? OutputFormat::kTuples
                                                  : OutputFormat::kSurface);
}

std::vector<std::uint32_t> AllExcept(std::size_t k, const std::vector<std::uint32_t>& skip) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = 1; d <= k; ++d) {
    if (std::find(skip.begin(), skip.end(), d) == skip.end()) out.push_back(d);
  }
  return out;
}

std::string BuildReport(const Dawg& dawg, const DocumentCollection& collection,
                        const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "documents\t" << collection.k() << '\n'
     << "total_length\t" << collection.total_length() << '\n'
     << "sigma\t" << collection.sigma() << '\n'
     << "nodes\t" << dawg.num_nodes() << '\n'
     << "edges\t" << dawg.num_edges() << '\n';
  for (std::size_t i = 0; i < names.size(); ++i) {
    os << "document\t" << i + 1 << '\t' << names[i] << '\t'
       << collection.docs[i].size() - 1 << '\n';
  }
  // Nodes by the number of documents that contain them.
  std::vector<std::size_t> shared(collection.k() + 1, 0);
  for (NodeId v = 1; v < dawg.num_nodes(); ++v) {
    LabelSet l(dawg.k());
    l |= dawg.label(v);
    ++shared[l.count()];
  }
  for (std::size_t c = 1; c < shared.size(); ++c) {
    os << "nodes_in_docs\t" << c << '\t' << shared[c] << '\n';
  }
  return os.str();
}

// One randomized equivalence trial. Returns a description of the first
// mismatch, or nothing.
std::optional<std::string> CheckInstance(const oracle::RandomInstance& inst,
                                         std::mt19937_64& rng) {
  const DocumentCollection collection = inst.Intern();
  const Dawg dawg = BuildDawg(collection);
  auto decode_all = [&](auto enumerate) {
    oracle::StringSet got;
    enumerate([&](const MawRef& r) { got.insert(DecodeMaw(r, collection)); });
    return got;
  };

  if (collection.total_length() <= 60) {
    oracle::Partition nodes;
    for (NodeId v = 1; v < dawg.num_nodes(); ++v) {
      const Occurrence occ = dawg.sample(v);
      std::set<oracle::RankString> members;
      for (std::uint32_t len = dawg.shortest(v); len <= dawg.longest(v); ++len) {
        oracle::RankString w;
        for (std::uint32_t p = occ.end - len + 1; p <= occ.end; ++p) {
          w.push_back(dawg.at(occ.doc, p));
        }
        members.insert(std::move(w));
      }
      nodes.insert(std::move(members));
    }
    if (nodes != oracle::EndPosPartition(collection)) {
      return std::string("automaton node partition differs from EndPos classes");
    }
  }

  const std::size_t k = collection.k();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
    LabelSet mask(k);
    for (std::size_t i = 0; i < k; ++i) {
      if ((bits >> i) & 1) mask.set(i);
    }
    const QueryMask query(mask);
    const auto got = decode_all([&](const MawSink& s) { EnumerateMaws(dawg, query, s); });
    if (got != oracle::OracleMaws(collection, mask)) {
      return "maw mismatch for mask " + mask.ToBitString();
    }
  }
  if (decode_all([&](const MawSink& s) { EnumerateMawPrime(dawg, s); }) !=
      oracle::OraclePrime(collection)) {
    return std::string("prime variant mismatch");
  }
  if (k >= 2) {
    std::vector<std::uint32_t> target;
    std::vector<std::uint32_t> ref;
    std::vector<std::uint32_t> order(k);
    for (std::uint32_t d = 0; d < k; ++d) order[d] = d + 1;
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t split = std::uniform_int_distribution<std::size_t>(1, k - 1)(rng);
    target.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(split));
    ref.assign(order.begin() + static_cast<std::ptrdiff_t>(split), order.end());
    if (decode_all([&](const MawSink& s) { EnumerateSpecific(dawg, target, ref, s); }) !=
        oracle::OracleSpecific(collection, target, ref)) {
      return std::string("specific variant mismatch");
    }
  }
  return std::nullopt;
}

int RunOracleCheck(std::size_t trials, std::uint64_t seed, const oracle::RandomSpec& spec,
                   std::ostream& out) {
  std::mt19937_64 rng(seed);
  for (std::size_t t = 1; t <= trials; ++t) {
    const auto inst = oracle::RandomCollection(rng, spec);
    if (auto failure = CheckInstance(inst, rng)) {
      out << "FAIL trial " << t << ": " << *failure << '\n'
          << "counterexample: " << inst.Describe() << '\n';
      return kExitVerificationFailed;
    }
  }
  out << "PASS " << trials << " trials (seed " << seed << ")\n";
  return kExitOk;
}

int RunBench(const std::vector<std::size_t>& sizes, std::size_t k, std::size_t sigma,
             std::uint64_t seed, int repeat, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  out << "n\tk\tnodes\tedges\tbuild_ms\tenum_ms\tns_per_symbol\tcomparisons\tmaws\n";
  std::mt19937_64 rng(seed);
  const std::string mask_bits(k, '1');
  for (std::size_t n : sizes) {
    std::vector<std::string> docs(k);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(sigma) - 1);
    for (std::size_t i = 0; i < k; ++i) {
      docs[i].resize(n / k);
      for (char& c : docs[i]) c = static_cast<char>('a' + pick(rng));
    }
    const DocumentCollection collection = InternCollection(docs);
    double best_build = 0, best_enum = 0;
    std::size_t nodes = 0, edges = 0, maws = 0;
    ScanStats stats;
    for (int r = 0; r < std::max(1, repeat); ++r) {
      const auto t0 = Clock::now();
      const Dawg dawg = BuildDawg(collection);
      const auto t1 = Clock::now();
      ScanStats s;
      std::size_t count = 0;
      EnumerateMaws(dawg, QueryMask::Parse(mask_bits, k), [&](const MawRef&) { ++count; }, &s);
      const auto t2 = Clock::now();
      const double b = std::chrono::duration<double, std::milli>(t1 - t0).count();
      const double e = std::chrono::duration<double, std::milli>(t2 - t1).count();
      if (r == 0 || b + e < best_build + best_enum) {
        best_build = b;
        best_enum = e;
      }
      nodes = dawg.num_nodes();
      edges = dawg.num_edges();
      maws = count;
      stats = s;
    }
    const double total_ns = (best_build + best_enum) * 1e6;
    out << collection.total_length() << '\t' << k << '\t' << nodes << '\t' << edges << '\t'
        << std::fixed << std::setprecision(2) << best_build << '\t' << best_enum << '\t'
        << total_ns / static_cast<double>(collection.total_length()) << '\t'
        << stats.comparisons << '\t' << maws << '\n';
    out.unsetf(std::ios::floatfield);
  }
  return kExitOk;
}

}  // namespace

int RunCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Minimal absent words over document collections", "mawkit"};
  app.require_subcommand(1);

  InputOptions build_in;
  bool stats_json = false;
  std::string dot_path;
  std::optional<std::string> build_mask;
  auto* build = app.add_subcommand("build", "Build the automaton and report its size");
  AddInputOptions(build, build_in);
  build->add_flag("--stats-json", stats_json,
                  "Emit {k, n, sigma, nodes, edges, comparisons} as JSON");
  build->add_option("--dot", dot_path, "Write a Graphviz dump of the automaton");
  build->add_option("--mask", build_mask, "Also run a count-only query to fill comparisons");

  InputOptions maw_in;
  OutputOptions maw_out;
  std::string mask_bits;
  std::string preset;
  unsigned threads = 1;
  auto* maw = app.add_subcommand("maw", "Enumerate MAWs for a membership mask");
  AddInputOptions(maw, maw_in);
  AddOutputOptions(maw, maw_out);
  auto* mask_opt = maw->add_option("--mask", mask_bits,
                                   "Bit string B; character i selects document i");
  auto* preset_opt = maw->add_option("--preset", preset, "intersection | union | sym-diff")
                         ->check(CLI::IsMember({"intersection", "union", "sym-diff"}));
  mask_opt->excludes(preset_opt);
  maw->add_option("--threads", threads, "Worker threads for --mask queries")
      ->check(CLI::Range(1u, 1024u));

  InputOptions prime_in;
  OutputOptions prime_out;
  auto* prime = app.add_subcommand(
      "prime", "Absent aub with au and ub each present in some document");
  AddInputOptions(prime, prime_in);
  AddOutputOptions(prime, prime_out);

  InputOptions spec_in;
  OutputOptions spec_out;
  std::vector<std::uint32_t> targets;
  std::vector<std::uint32_t> refs;
  auto* specific = app.add_subcommand(
      "specific", "Target-specific strings: MAW(ref) that occur in a target");
  AddInputOptions(specific, spec_in);
  AddOutputOptions(specific, spec_out);
  specific->add_option("--target", targets, "1-based target document ids")
      ->required()
      ->delimiter(',');
  specific->add_option("--ref", refs, "1-based reference document ids (default: the rest)")
      ->delimiter(',');

  std::size_t trials = 200;
  std::uint64_t seed = 7;
  oracle::RandomSpec random_spec;
  auto* check = app.add_subcommand("oracle-check",
                                   "Randomized cross-check against brute force");
  check->add_option("--trials", trials, "Number of random collections");
  check->add_option("--seed", seed, "Random seed");
  check->add_option("--max-k", random_spec.max_k, "Maximum document count")
      ->check(CLI::Range(1, 12));
  check->add_option("--max-len", random_spec.max_len, "Maximum document length");
  check->add_option("--sigma", random_spec.max_sigma, "Maximum alphabet size")
      ->check(CLI::Range(1, 26));

  std::vector<std::size_t> sizes{200000, 400000, 800000};
  std::size_t bench_k = 2;
  std::size_t bench_sigma = 4;
  std::uint64_t bench_seed = 1;
  int repeat = 3;
  auto* bench = app.add_subcommand("bench", "Time construction and enumeration");
  bench->add_option("--sizes", sizes, "Total input lengths")->delimiter(',');
  bench->add_option("--k", bench_k, "Documents per collection")->check(CLI::Range(1, 4096));
  bench->add_option("--sigma", bench_sigma, "Alphabet size")->check(CLI::Range(1, 26));
  bench->add_option("--seed", bench_seed, "Random seed");
  bench->add_option("--repeat", repeat, "Runs per size; the fastest is reported");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) {
      const auto loaded = Load(build_in);
      const Dawg dawg = BuildDawg(loaded.collection);
      std::optional<std::uint64_t> comparisons;
      if (build_mask) {
        ScanStats s;
        EnumerateMaws(dawg, QueryMask::Parse(*build_mask, dawg.k()), [](const MawRef&) {}, &s);
        comparisons = s.comparisons;
      }
      if (!dot_path.empty()) {
        std::ofstream dot(dot_path);
        if (!dot) throw InputError("cannot write DOT file: " + dot_path);
        dot << ToDot(dawg, loaded.collection.table);
      }
      if (stats_json) {
        nlohmann::ordered_json j;
        j["k"] = loaded.collection.k();
        j["n"] = loaded.collection.total_length();
        j["sigma"] = loaded.collection.sigma();
        j["nodes"] = dawg.num_nodes();
        j["edges"] = dawg.num_edges();
        j["comparisons"] = comparisons ? nlohmann::ordered_json(*comparisons) : nullptr;
        Emit(build_in, out, j.dump() + "\n");
      } else {
        Emit(build_in, out, BuildReport(dawg, loaded.collection, loaded.names));
      }
      return kExitOk;
    }
    if (*maw) {
      if (mask_bits.empty() && preset.empty()) throw UsageError("maw needs --mask or --preset");
      const auto loaded = Load(maw_in);
      const auto& collection = loaded.collection;
      if (!preset.empty() && collection.k() != 2) {
        throw UsageError("--preset needs exactly two documents, got " +
                         std::to_string(collection.k()));
      }
      std::optional<QueryMask> query;
      if (!mask_bits.empty()) query = QueryMask::Parse(mask_bits, collection.k());
      const Dawg dawg = BuildDawg(collection);
      const std::string text = CollectAndRender(collection, maw_out, [&](const MawSink& sink) {
        if (query) {
          if (threads > 1) {
            for (const MawRef& r : EnumerateMawsParallel(dawg, *query, threads)) sink(r);
          } else {
            EnumerateMaws(dawg, *query, sink);
          }
          return;
        }
        const SetOp op = preset == "intersection" ? SetOp::kIntersection
                         : preset == "union"      ? SetOp::kUnion
                                                  : SetOp::kSymmetricDifference;
        EnumerateSetOp(dawg, op, sink);
      });
      Emit(maw_in, out, text);
      return kExitOk;
    }
    if (*prime) {
      const auto loaded = Load(prime_in);
      const Dawg dawg = BuildDawg(loaded.collection);
      Emit(prime_in, out, CollectAndRender(loaded.collection, prime_out,
                                           [&](const MawSink& s) { EnumerateMawPrime(dawg, s); }));
      return kExitOk;
    }
    if (*specific) {
      const auto loaded = Load(spec_in);
      const auto& collection = loaded.collection;
      if (refs.empty()) refs = AllExcept(collection.k(), targets);
      const Dawg dawg = BuildDawg(collection);
      Emit(spec_in, out, CollectAndRender(collection, spec_out, [&](const MawSink& s) {
             EnumerateSpecific(dawg, targets, refs, s);
           }));
      return kExitOk;
    }
    if (*check) return RunOracleCheck(trials, seed, random_spec, out);
    if (*bench) return RunBench(sizes, bench_k, bench_sigma, bench_seed, repeat, out);
  } catch (const InputError& e) {
    err << "mawkit: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "mawkit: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "mawkit: error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mawkit
