// Copyright 2026 The minring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minring/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minring/codes.hpp"
#include "minring/construction.hpp"
#include "minring/errors.hpp"
#include "minring/matrix_io.hpp"
#include "minring/ring.hpp"
#include "minring/structure.hpp"

namespace minring::cli {

namespace {

using nlohmann::json;

// Text mode prints at most this many witnesses; json prints all of them.
constexpr std::size_t kTextWitnessLimit = 20;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string FormatTuple(std::span<const Element> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string FormatSupport(std::span<const Element> v) {
  std::string s = "supp={";
  bool first = true;
  for (std::size_t i : Support(v)) {
    if (!first) s += ',';
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::uint64_t ParseUnsigned(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(what + ": expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

std::uint64_t EffectiveCap(const RunConfig& cfg) {
  if (cfg.cap) return *cfg.cap;
  if (const char* env = std::getenv(kCapEnvVar); env != nullptr && *env != '\0') {
    return ParseUnsigned(env, kCapEnvVar);
  }
  return kDefaultEnumerationCap;
}

ColumnKind ParseOmit(const std::string& text) {
  if (text == "e1") return ColumnKind::E1();
  if (text == "e2") return ColumnKind::E2();
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    const std::string kind = text.substr(0, colon);
    const auto param = static_cast<Element>(
        ParseUnsigned(text.substr(colon + 1), "--omit parameter"));
    if (kind == "unit") return ColumnKind::Unit(param);
    if (kind == "d") return ColumnKind::D(param);
    if (kind == "dstar") return ColumnKind::DStar(param);
  }
  throw UsageError("--omit must be one of e1, e2, unit:U, d:D, dstar:D; got '" +
                   text + "'");
}

std::vector<Element> ParseScalars(const std::string& text) {
  std::vector<Element> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    out.push_back(static_cast<Element>(ParseUnsigned(item, "--scale entry")));
  }
  return out;
}

GeneratorMatrix DemoByName(const std::string& name) {
  static const std::map<std::string, Demo> kDemos = {
      {"z4", Demo::kZ4Example},
      {"z6", Demo::kZ6Counterexample},
      {"z3-conclusion", Demo::kZ3Conclusion},
  };
  const auto it = kDemos.find(name);
  if (it == kDemos.end()) {
    throw UsageError("unknown demo '" + name + "' (z4, z6, z3-conclusion)");
  }
  return DemoMatrix(it->second);
}

GeneratorMatrix BuildFromRing(const RunConfig& cfg) {
  const RingSpec ring = MakeRing(*cfg.ring);
  std::vector<Column> extra = ParseColumnList(ring, cfg.extra);
  if (cfg.random_extra > 0) {
    const std::vector<Column> random = RandomColumns(ring, cfg.random_extra, cfg.seed);
    extra.insert(extra.end(), random.begin(), random.end());
  }
  if (!cfg.scale.empty() && !cfg.omit.empty()) {
    throw UsageError("--scale and --omit cannot be combined");
  }
  if (!cfg.scale.empty()) {
    return BuildGScaled(ring, ScalingVector{ParseScalars(cfg.scale)}, extra);
  }
  if (!cfg.omit.empty()) return BuildGOmitted(ring, ParseOmit(cfg.omit), extra);
  return BuildG(ring, extra);
}

GeneratorMatrix LoadMatrix(const RunConfig& cfg) {
  const int sources = cfg.demo.has_value() + cfg.matrix_file.has_value() +
                      cfg.ring.has_value();
  if (sources != 1) {
    throw UsageError("give exactly one matrix source: --demo, --matrix or --ring");
  }
  const bool block_options = !cfg.extra.empty() || !cfg.scale.empty() ||
                             !cfg.omit.empty() || cfg.random_extra > 0;
  if (!cfg.ring && block_options) {
    throw UsageError("--extra, --scale, --omit and --random-extra need --ring");
  }
  if (cfg.demo) return DemoByName(*cfg.demo);
  if (cfg.matrix_file) {
    std::ifstream in(*cfg.matrix_file, std::ios::binary);
    if (!in) throw IoError("cannot read matrix file '" + *cfg.matrix_file + "'");
    const std::string text{std::istreambuf_iterator<char>(in), {}};
    return ParseMatrix(text);
  }
  return BuildFromRing(cfg);
}

json MatrixJson(const GeneratorMatrix& g) {
  json j;
  j["modulus"] = g.ring().modulus();
  j["rows"] = {g.row1(), g.row2()};
  if (g.block_layout()) {
    json layout = json::array();
    for (const BlockSpan& s : *g.block_layout()) {
      layout.push_back({{"block", BlockName(s.block)}, {"begin", s.begin}, {"end", s.end}});
    }
    j["layout"] = layout;
  }
  return j;
}

int CmdConstruct(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.ring) throw UsageError("construct needs --ring");
  const GeneratorMatrix g = LoadMatrix(cfg);
  const std::string text = cfg.format == OutputFormat::kJson
                               ? MatrixJson(g).dump(2) + "\n"
                               : FormatMatrix(g);
  if (cfg.out_file) {
    std::ofstream file(*cfg.out_file, std::ios::binary);
    if (!file || !(file << text)) {
      throw IoError("cannot write '" + *cfg.out_file + "'");
    }
  } else {
    out << text;
  }
  return kExitOk;
}

int CmdCheck(const RunConfig& cfg, std::ostream& out) {
  const GeneratorMatrix g = LoadMatrix(cfg);
  const LinearCode code = EnumerateCode(g, EffectiveCap(cfg));
  const MinimalityReport report = IsMinimalCode(code, {cfg.workers});

  if (cfg.format == OutputFormat::kJson) {
    json witnesses = json::array();
    for (const CoverWitness& w : report.witnesses) {
      witnesses.push_back({{"covered", w.covered}, {"coverer", w.coverer}});
    }
    json j = {
        {"verdict", report.minimal ? "minimal" : "not-minimal"},
        {"witnesses", witnesses},
        {"w_min", report.w_min},
        {"w_max", report.w_max},
        {"ab_ratio_ok", report.ab_ratio_ok},
        {"cases", report.pairs_checked},
    };
    out << j.dump(2) << "\n";
  } else {
    out << "matrix: Z_" << g.ring().modulus() << ", 2 x " << g.cols() << "\n"
        << "codewords: " << code.cardinality() << "\n"
        << "verdict: " << (report.minimal ? "minimal" : "not-minimal") << "\n"
        << "w_min: " << report.w_min << "\n"
        << "w_max: " << report.w_max << "\n"
        << "ab_ratio_ok: " << (report.ab_ratio_ok ? "true" : "false") << "\n"
        << "cases: " << report.pairs_checked << "\n"
        << "witnesses: " << report.witnesses.size() << "\n";
    const std::size_t shown = std::min(report.witnesses.size(), kTextWitnessLimit);
    for (std::size_t i = 0; i < shown; ++i) {
      const CoverWitness& w = report.witnesses[i];
      out << "  covered=" << FormatTuple(w.covered) << " "
          << FormatSupport(w.covered) << " coverer=" << FormatTuple(w.coverer)
          << " " << FormatSupport(w.coverer) << "\n";
    }
    if (shown < report.witnesses.size()) {
      out << "  ... " << report.witnesses.size() - shown << " more\n";
    }
  }
  return report.minimal ? kExitOk : kExitNotMinimal;
}

int CmdVerifyLemmas(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.ring) throw UsageError("verify-lemmas needs --ring");
  const RingSpec ring = MakeRing(*cfg.ring);
  const std::vector<LemmaReport> reports = VerifyAllLemmas(ring);
  bool all = true;
  json j = json::array();
  for (const LemmaReport& r : reports) {
    all = all && r.holds;
    if (cfg.format == OutputFormat::kJson) {
      j.push_back({{"lemma", LemmaName(r.lemma_id)},
                   {"holds", r.holds},
                   {"witness", r.witness},
                   {"cases_checked", r.cases_checked}});
    } else {
      out << LemmaName(r.lemma_id) << ": " << (r.holds ? "holds" : "FAILS")
          << " cases=" << r.cases_checked;
      if (!r.holds) out << " witness=" << FormatTuple(r.witness);
      out << "\n";
    }
  }
  if (cfg.format == OutputFormat::kJson) out << j.dump(2) << "\n";
  return all ? kExitOk : kExitNotMinimal;
}

int CmdEnumerate(const RunConfig& cfg, std::ostream& out) {
  const GeneratorMatrix g = LoadMatrix(cfg);
  const LinearCode code = EnumerateCode(g, EffectiveCap(cfg));
  const std::uint64_t pairs = g.ring().modulus() * g.ring().modulus();
  if (cfg.format == OutputFormat::kJson) {
    json words = json::array();
    for (const Codeword& c : code.codewords()) {
      json coeffs = json::array();
      for (const auto& [c1, c2] : c.coefficients) coeffs.push_back({c1, c2});
      words.push_back({{"components", c.components},
                       {"support", c.support},
                       {"coefficients", coeffs}});
    }
    out << json{{"modulus", g.ring().modulus()},
                {"coefficient_pairs", pairs},
                {"codewords", words}}
               .dump(2)
        << "\n";
  } else {
    for (const Codeword& c : code.codewords()) {
      out << FormatTuple(c.components) << " " << FormatSupport(c.components) << "\n";
    }
    out << "# " << code.cardinality() << " distinct codewords from " << pairs
        << " coefficient pairs over Z_" << g.ring().modulus() << "\n";
  }
  return kExitOk;
}

void AddSourceOptions(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--demo", cfg.demo, "built-in matrix: z4, z6, z3-conclusion");
  sub->add_option("--matrix", cfg.matrix_file, "matrix text file");
  sub->add_option("--ring", cfg.ring, "modulus M for the canonical construction");
  sub->add_option("--extra", cfg.extra, "extra A columns as \"a,b;c,d\"");
  sub->add_option("--scale", cfg.scale, "unit scalars for the canonical prefix, comma separated");
  sub->add_option("--omit", cfg.omit, "omit a prefix column: e1, e2, unit:U, d:D, dstar:D");
  sub->add_option("--random-extra", cfg.random_extra, "append K seeded random A columns");
  sub->add_option("--seed", cfg.seed, "seed for --random-extra");
}

void AddFormatOption(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "text or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"text", OutputFormat::kText},
                                              {"json", OutputFormat::kJson}}));
}

void AddCapOption(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--cap", cfg.cap,
                  std::string("enumeration cap in component evaluations (env ") +
                      kCapEnvVar + ")");
  sub->add_option("--workers", cfg.workers, "threads for the cover scan, 0 = auto");
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Construct and verify two-dimensional minimal linear codes over Z_M"};
  app.require_subcommand(1);

  CLI::App* construct = app.add_subcommand("construct", "print the canonical generator matrix");
  AddSourceOptions(construct, cfg);
  AddFormatOption(construct, cfg);
  construct->add_option("--out", cfg.out_file, "write the matrix to a file");
  construct->callback([&] { cfg.command = Command::kConstruct; });

  CLI::App* check = app.add_subcommand("check", "decide minimality by brute force");
  AddSourceOptions(check, cfg);
  AddFormatOption(check, cfg);
  AddCapOption(check, cfg);
  check->callback([&] { cfg.command = Command::kCheck; });

  CLI::App* lemmas = app.add_subcommand("verify-lemmas", "exhaustive ring structure checks");
  lemmas->add_option("--ring", cfg.ring, "prime-power modulus")->required();
  AddFormatOption(lemmas, cfg);
  lemmas->callback([&] { cfg.command = Command::kVerifyLemmas; });

  CLI::App* enumerate = app.add_subcommand("enumerate", "list codewords with supports");
  AddSourceOptions(enumerate, cfg);
  AddFormatOption(enumerate, cfg);
  AddCapOption(enumerate, cfg);
  enumerate->callback([&] { cfg.command = Command::kEnumerate; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    switch (cfg.command) {
      case Command::kConstruct: return CmdConstruct(cfg, out);
      case Command::kCheck: return CmdCheck(cfg, out);
      case Command::kVerifyLemmas: return CmdVerifyLemmas(cfg, out);
      case Command::kEnumerate: return CmdEnumerate(cfg, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error (" << ErrorKindName(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::kTooLarge ? kExitInternal : kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace minring::cli
