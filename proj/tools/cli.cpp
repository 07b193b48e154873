#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include "ahdb/core.hpp"
#include "ahdb/enumerate.hpp"
#include "ahdb/error.hpp"
#include "ahdb/generate.hpp"
#include "ahdb/graph.hpp"
#include "ahdb/match.hpp"
#include "ahdb/pattern.hpp"

namespace ahdb::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr std::size_t kReportListLimit = 10;

struct CommonOptions {
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  bool json = false;
};

struct AlphabetOptions {
  std::string labels = "chars";
  bool numeric = false;
};

struct Options {
  CommonOptions common;
  AlphabetOptions alphabet;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> truncate;
  std::string method = "closed-form";
  std::size_t brute_cap = kDefaultBruteForceEdgeLimit;
  std::string sequence;
  std::vector<std::string> windows;
  std::uint32_t fringe_width = kDefaultFringeWidth;
  std::uint32_t height = kDefaultFringeHeight;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_json) {
  cmd->add_option("-k,--codes", o.k, "code-set size k")->required()->check(CLI::PositiveNumber);
  cmd->add_option("-n,--order", o.n, "order n")->required()->check(CLI::PositiveNumber);
  if (with_json) cmd->add_flag("--json", o.json, "emit JSON");
}

void add_alphabet(CLI::App* cmd, AlphabetOptions& o) {
  auto* labels = cmd->add_option(
      "--alphabet", o.labels,
      "'chars' for the default labels (rgb for k=3, else a,b,c,...) or k label characters");
  auto* numeric = cmd->add_flag("--numeric", o.numeric, "comma-separated integer codes");
  labels->excludes(numeric);
}

// nullopt selects the numeric encoding.
std::optional<Alphabet> resolve_alphabet(const AlphabetOptions& o, std::uint32_t k) {
  if (o.numeric) return std::nullopt;
  if (o.labels == "chars") {
    if (k > 62) return std::nullopt;
    return Alphabet::default_chars(k);
  }
  Alphabet a = Alphabet::from_chars(o.labels);
  if (a.size() != k) {
    throw Error(ErrorKind::ParseError, "--alphabet must list exactly k=" + std::to_string(k) +
                                           " labels");
  }
  return a;
}

std::string format_codes(std::span<const Code> codes, const std::optional<Alphabet>& alphabet) {
  return alphabet ? alphabet->encode(codes) : format_numeric(codes);
}

std::vector<Code> parse_codes(const std::string& text, const std::optional<Alphabet>& alphabet) {
  if (!alphabet || text.find(',') != std::string::npos) return parse_numeric(text);
  return alphabet->decode(text);
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::NonexistentSequence: return kInfeasible;
    case ErrorKind::CodeOutOfRange:
    case ErrorKind::DuplicateWindow:
    case ErrorKind::IntegralityViolation:
    case ErrorKind::WindowNotFound: return kFailed;
    case ErrorKind::InvalidParameters:
    case ErrorKind::InfeasibleParameters:
    case ErrorKind::SizeLimit:
    case ErrorKind::InvalidLength:
    case ErrorKind::ParseError: return kUsage;
  }
  return kUsage;
}

Parameters feasible_params(const CommonOptions& o) {
  Parameters p(o.k, o.n);
  p.require_feasible();
  return p;
}

// ------------------------------------------------------------------ generate

int cmd_generate(const Options& o, std::ostream& out) {
  const Parameters params = feasible_params(o.common);
  const auto alphabet = resolve_alphabet(o.alphabet, params.k());
  const CyclicSequence s = generate(params, o.seed);
  std::vector<Code> codes(s.codes().begin(), s.codes().end());
  if (o.truncate) {
    const LinearSequence t = truncate(s, *o.truncate, params);
    codes.assign(t.codes().begin(), t.codes().end());
  }
  const std::string text = format_codes(codes, alphabet);
  if (o.common.json) {
    json j{{"schema_version", kSchemaVersion},
           {"codes", params.k()},
           {"order", params.n()},
           {"cyclic", !o.truncate.has_value()},
           {"length", codes.size()},
           {"sequence", text}};
    j["seed"] = o.seed ? json(*o.seed) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << text << '\n';
  }
  return kOk;
}

// -------------------------------------------------------------------- verify

int cmd_verify(const Options& o, std::ostream& out) {
  const Parameters params = feasible_params(o.common);
  const auto alphabet = resolve_alphabet(o.alphabet, params.k());
  const CyclicSequence s(parse_codes(o.sequence, alphabet));
  const ValidationReport r = validate(s, params);
  const auto& cov = r.window_coverage;

  auto words = [&](const std::vector<std::vector<Code>>& list) {
    std::vector<std::string> shown;
    for (std::size_t i = 0; i < list.size() && i < kReportListLimit; ++i) {
      shown.push_back(format_codes(list[i], alphabet));
    }
    return shown;
  };

  if (o.common.json) {
    json j{{"schema_version", kSchemaVersion},
           {"codes", params.k()},
           {"order", params.n()},
           {"length", s.size()},
           {"expected_length", cov.expected},
           {"is_adjacency_hopping", r.is_adjacency_hopping},
           {"covered", cov.covered},
           {"expected", cov.expected},
           {"duplicate_count", cov.duplicates.size()},
           {"duplicates", words(cov.duplicates)},
           {"missing_count", cov.missing.size()},
           {"missing", words(cov.missing)},
           {"length_ok", r.length_ok},
           {"verdict", r.verdict}};
    out << j.dump(2) << '\n';
  } else {
    auto join = [](const std::vector<std::string>& items, std::size_t total) {
      std::string s;
      for (const auto& item : items) s += " " + item;
      if (total > items.size()) s += " ...";
      return s;
    };
    out << "adjacency-hopping: " << (r.is_adjacency_hopping ? "yes" : "no") << '\n';
    out << "windows: " << cov.covered << '/' << cov.expected << " covered, "
        << cov.duplicates.size() << " duplicated, " << cov.missing.size() << " missing\n";
    if (!cov.duplicates.empty()) {
      out << "duplicated:" << join(words(cov.duplicates), cov.duplicates.size()) << '\n';
    }
    if (!cov.missing.empty()) {
      out << "missing:" << join(words(cov.missing), cov.missing.size()) << '\n';
    }
    out << "length: " << s.size() << " (expected " << cov.expected << ")\n";
    out << "verdict: " << (r.verdict ? "PASS" : "FAIL") << '\n';
  }
  return r.verdict ? kOk : kFailed;
}

// --------------------------------------------------------------------- count

int cmd_count(const Options& o, std::ostream& out, std::ostream& err) {
  const Parameters params = feasible_params(o.common);
  const bool two_plus = params.k() >= 2 && params.n() >= 2;

  std::optional<mpz_class> closed, best, brute;
  if (o.method == "closed-form") {
    closed = count_closed_form(params);
  } else if (o.method == "best" || o.method == "brute-force") {
    if (!two_plus) {
      err << "error: method '" << o.method << "' needs k >= 2 and n >= 2\n";
      return kUsage;
    }
    const CorrespondingGraph g(params);
    if (o.method == "best") {
      best = count_best_theorem(g);
    } else {
      brute = enumerate_tours(g, 0, o.brute_cap);
    }
  } else {
    CountLimits limits;
    limits.brute_force_edge_limit = o.brute_cap;
    const CountReport report = count_all_methods(params, true, limits);
    closed = report.closed_form;
    best = report.best_theorem;
    brute = report.brute_force;
  }

  std::vector<const mpz_class*> present;
  for (const auto* v : {&closed, &best, &brute}) {
    if (*v) present.push_back(&**v);
  }
  const bool agree = std::all_of(present.begin(), present.end(),
                                 [&](const mpz_class* v) { return *v == *present.front(); });

  if (o.common.json) {
    auto field = [](const std::optional<mpz_class>& v) {
      return v ? json(v->get_str()) : json(nullptr);
    };
    json j{{"schema_version", kSchemaVersion},
           {"codes", params.k()},
           {"order", params.n()},
           {"method", o.method},
           {"closed_form", field(closed)},
           {"best_theorem", field(best)},
           {"brute_force", field(brute)},
           {"methods_agree", agree}};
    out << j.dump(2) << '\n';
  } else {
    if (closed) out << "closed-form: " << closed->get_str() << '\n';
    if (best) out << "best: " << best->get_str() << '\n';
    if (brute) out << "brute-force: " << brute->get_str() << '\n';
    if (present.size() > 1) out << "agree: " << (agree ? "yes" : "no") << '\n';
  }
  if (!agree) {
    err << "error: counting methods disagree\n";
    return kFailed;
  }
  return kOk;
}

// -------------------------------------------------------------------- decode

int cmd_decode(const Options& o, std::ostream& out, std::ostream& err) {
  const Parameters params = feasible_params(o.common);
  const auto alphabet = resolve_alphabet(o.alphabet, params.k());
  std::vector<Code> codes = parse_codes(o.sequence, alphabet);

  std::optional<LookupTable> table;
  if (codes.size() == params.sequence_length()) {
    const CyclicSequence s(std::move(codes));
    if (!validate(s, params).verdict) {
      err << "error: sequence is not a valid adjacency-hopping de Bruijn sequence\n";
      return kFailed;
    }
    table = build_table(s, params);
  } else {
    const LinearSequence s(std::move(codes));
    if (s.size() > params.sequence_length() || !is_adjacency_hopping_word(s.codes())) {
      err << "error: sequence is not a truncated adjacency-hopping de Bruijn sequence\n";
      return kFailed;
    }
    table = build_table(s, params);
  }

  json results = json::array();
  for (const std::string& text : o.windows) {
    std::optional<std::size_t> position;
    try {
      const std::vector<Code> w = parse_codes(text, alphabet);
      if (w.size() != params.n()) {
        err << "error: window '" << text << "' does not have length " << params.n() << '\n';
        return kUsage;
      }
      position = decode(*table, w);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WindowNotFound && e.kind() != ErrorKind::CodeOutOfRange) throw;
    }
    if (o.common.json) {
      results.push_back({{"window", text},
                         {"position", position ? json(*position) : json(nullptr)}});
    } else if (position) {
      out << *position << '\n';
    } else {
      out << "MISS\n";
    }
  }
  if (o.common.json) {
    json j{{"schema_version", kSchemaVersion},
           {"codes", params.k()},
           {"order", params.n()},
           {"cyclic", table->cyclic()},
           {"results", results}};
    out << j.dump(2) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- graph-info

int cmd_graph_info(const Options& o, std::ostream& out) {
  const Parameters params = feasible_params(o.common);
  const CorrespondingGraph g(params);
  const GraphReport r = graph_report(g);
  if (o.common.json) {
    json j{{"schema_version", kSchemaVersion},
           {"codes", params.k()},
           {"order", params.n()},
           {"vertices", r.vertices},
           {"edges", r.edges},
           {"min_in_degree", r.min_in_degree},
           {"max_in_degree", r.max_in_degree},
           {"min_out_degree", r.min_out_degree},
           {"max_out_degree", r.max_out_degree},
           {"loops", r.loops},
           {"parallel_edges", r.parallel_edges},
           {"strongly_connected", r.strongly_connected}};
    j["power_identity"] = r.power_identity ? json(*r.power_identity) : json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "vertices: " << r.vertices << '\n'
        << "edges: " << r.edges << '\n'
        << "in-degree: min " << r.min_in_degree << ", max " << r.max_in_degree << '\n'
        << "out-degree: min " << r.min_out_degree << ", max " << r.max_out_degree << '\n'
        << "loops: " << r.loops << '\n'
        << "parallel edges: " << r.parallel_edges << '\n'
        << "strongly connected: " << (r.strongly_connected ? "yes" : "no") << '\n'
        << "power identity: "
        << (r.power_identity ? (*r.power_identity ? "yes" : "no") : "skipped (too large)")
        << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------------- pattern

int cmd_pattern(const Options& o, std::ostream& out) {
  const Parameters params = feasible_params(o.common);
  FringeSpec spec;
  spec.fringe_width = o.fringe_width;
  spec.height = o.height;
  spec.alphabet = standard_rgb_alphabet(params.k());

  const CyclicSequence s = generate(params, o.seed);
  std::vector<Code> codes(s.codes().begin(), s.codes().end());
  if (o.truncate) {
    const LinearSequence t = truncate(s, *o.truncate, params);
    codes.assign(t.codes().begin(), t.codes().end());
  }
  const Image image = render(codes, spec);

  if (o.out_path == "-") {
    write_ppm(image, out);
    return kOk;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw Error(ErrorKind::ParseError, "cannot open '" + o.out_path + "' for writing");
  write_ppm(image, file);
  file.close();
  if (!file) throw Error(ErrorKind::ParseError, "failed writing '" + o.out_path + "'");
  out << "wrote " << o.out_path << ": " << image.width << 'x' << image.height << ", "
      << codes.size() << " fringes\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adjacency-hopping de Bruijn sequences: generate, verify, count, decode"};
  app.name("ahdb");
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "generate an H(k,n) sequence");
  add_common(gen, o.common, true);
  add_alphabet(gen, o.alphabet);
  gen->add_option("--seed", o.seed, "seed for randomized tour choice");
  gen->add_option("--truncate", o.truncate, "emit only the first L codes (linear)");

  auto* ver = app.add_subcommand("verify", "check that SEQUENCE is an H(k,n)");
  add_common(ver, o.common, true);
  add_alphabet(ver, o.alphabet);
  ver->add_option("sequence", o.sequence, "sequence text")->required();

  auto* cnt = app.add_subcommand("count", "count H(k,n) sequences up to rotation");
  add_common(cnt, o.common, true);
  cnt->add_option("--method", o.method, "closed-form, best, brute-force or all")
      ->check(CLI::IsMember({"closed-form", "best", "brute-force", "all"}));
  cnt->add_option("--brute-cap", o.brute_cap, "largest edge count for brute force")
      ->check(CLI::PositiveNumber);

  auto* dec = app.add_subcommand("decode", "locate windows in a sequence");
  add_common(dec, o.common, true);
  add_alphabet(dec, o.alphabet);
  dec->add_option("--sequence", o.sequence, "full or truncated sequence")->required();
  dec->add_option("windows", o.windows, "query windows of length n")->required();

  auto* info = app.add_subcommand("graph-info", "structural report of G_k^n");
  add_common(info, o.common, true);

  auto* pat = app.add_subcommand("pattern", "render a color fringe pattern (P6)");
  add_common(pat, o.common, false);
  pat->add_option("--seed", o.seed, "seed for randomized tour choice");
  pat->add_option("--truncate", o.truncate, "use only the first L codes");
  pat->add_option("--fringe-width", o.fringe_width, "pixels per fringe")
      ->check(CLI::PositiveNumber);
  pat->add_option("--height", o.height, "image height in pixels")->check(CLI::PositiveNumber);
  pat->add_option("--out", o.out_path, "output file ('-' for standard output)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (cnt->parsed()) return cmd_count(o, out, err);
    if (dec->parsed()) return cmd_decode(o, out, err);
    if (info->parsed()) return cmd_graph_info(o, out);
    if (pat->parsed()) return cmd_pattern(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}

}  // namespace ahdb::cli
