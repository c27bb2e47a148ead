#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "lqc/io.hpp"

namespace lqc {

namespace {

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return parse_json(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// Files may hold the object itself or wrap it under `key` (pad output, for one).
template <class F>
auto load(const std::string& path, const char* key, F parse) {
  Json j = read_json(path);
  const Json& body = j.is_object() && j.contains(key) ? j[key] : j;
  try {
    return parse(body);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<int> parse_range(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoi(part));
      } else {
        int a = std::stoi(part.substr(0, dots)), b = std::stoi(part.substr(dots + 2));
        if (b < a) throw CliError("empty range '" + part + "'");
        for (int v = a; v <= b; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw CliError("bad parameter list '" + s + "' (use a..b or a,b,c)");
    }
  }
  return out;
}

BitMatrix classical_checks(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw CliError("bad classical code '" + spec + "' (kind:value)");
  auto kind = spec.substr(0, colon), value = spec.substr(colon + 1);
  if (kind == "alist") {
    std::ifstream in(value);
    if (!in) throw CliError("cannot open '" + value + "'");
    try {
      return read_alist(in);
    } catch (const ParseError& e) {
      throw ParseError(value + ": " + e.what());
    }
  }
  std::size_t v = 0;
  try {
    v = std::stoul(value);
  } catch (const std::logic_error&) {
    throw CliError("bad size in '" + spec + "'");
  }
  if (kind == "repetition") return repetition_checks(v);
  if (kind == "cycle") return cycle_checks(v);
  if (kind == "hamming") return hamming_checks(v);
  throw CliError("unknown classical code '" + kind + "' (repetition, cycle, hamming, alist)");
}

// Flag values of the selected subcommand chain, as given or defaulted.
void record_params(const CLI::App* app, Json& params) {
  for (const CLI::Option* opt : app->get_options()) {
    std::string name = opt->get_single_name();
    if (name == "help" || name.empty()) continue;
    if (opt->count() > 0) {
      auto res = opt->results();
      params[name] = res.size() == 1 ? Json(res[0]) : Json(res);
    } else if (!opt->get_default_str().empty()) {
      params[name] = opt->get_default_str();
    }
  }
  for (const CLI::App* sub : app->get_subcommands()) record_params(sub, params);
}

struct Budget {
  std::size_t exact_qubits = SearchBudget{}.exact_qubits;
  std::size_t exact_log2 = SearchBudget{}.exact_log2;
  std::size_t iterations = SearchBudget{}.heuristic_iterations;

  void add(CLI::App* app) {
    app->add_option("--exact-qubits", exact_qubits, "Exact search when the quotient dimension is at most this")
        ->capture_default_str();
    app->add_option("--exact-log2", exact_log2, "Exact search when the enumeration has at most 2^this elements")
        ->capture_default_str();
    app->add_option("--iterations", iterations, "Information-set rounds in heuristic mode")->capture_default_str();
  }
  SearchBudget get(std::uint64_t seed) const {
    SearchBudget b;
    b.exact_qubits = exact_qubits;
    b.exact_log2 = exact_log2;
    b.heuristic_iterations = iterations;
    b.seed = seed;
    return b;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local quantum codes: generation, embedding, locality certificates and bound checks", "lqc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::uint64_t seed = 1;
  std::string out_path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Random seed")->capture_default_str();
    sub->add_option("-o,--out", out_path, "Output file (default: standard output)");
  };

  // Deferred action of the selected command; returns the output document.
  std::function<std::string(const Json& meta)> action;
  auto emit = [](Json body, const Json& meta) {
    body["meta"] = meta;
    return dump(body);
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a code or complex");
  gen->require_subcommand(1);
  int n = 2, L = 3, k = 1;
  auto* g_toric = gen->add_subcommand("toric", "Toric code on the cubical n-torus");
  g_toric->add_option("--n", n, "Torus dimension")->capture_default_str();
  g_toric->add_option("--L", L, "Side length")->capture_default_str();
  g_toric->add_option("--k", k, "Qubit cell dimension")->capture_default_str();
  common(g_toric);
  g_toric->callback([&] { action = [&](const Json& m) { return emit(to_json(toric_code(n, L, k)), m); }; });

  auto* g_torus = gen->add_subcommand("torus-complex", "Cubical n-torus complex");
  g_torus->add_option("--n", n, "Torus dimension")->capture_default_str();
  g_torus->add_option("--L", L, "Side length")->capture_default_str();
  common(g_torus);
  g_torus->callback([&] {
    action = [&](const Json& m) {
      if (n < 1 || L < 2) throw DimensionOutOfRange("torus-complex needs n >= 1 and L >= 2");
      return emit(to_json(cubical_torus(n, L)), m);
    };
  });

  auto* g_tri = gen->add_subcommand("triangulated-torus", "Triangulated 2-torus");
  g_tri->add_option("--L", L, "Side length")->capture_default_str();
  common(g_tri);
  g_tri->callback([&] { action = [&](const Json& m) { return emit(to_json(triangulated_torus(L)), m); }; });

  std::size_t length = 6;
  auto* g_cycle = gen->add_subcommand("cycle", "Cycle complex");
  g_cycle->add_option("--length", length, "Number of edges")->capture_default_str();
  common(g_cycle);
  g_cycle->callback([&] { action = [&](const Json& m) { return emit(to_json(cycle_complex(length)), m); }; });

  std::size_t triangles = 64, max_degree = 6;
  auto* g_random = gen->add_subcommand("random-complex", "Random connected 2-complex");
  g_random->add_option("--triangles", triangles, "Triangle count")->capture_default_str();
  g_random->add_option("--max-degree", max_degree, "Vertex degree bound")->capture_default_str();
  common(g_random);
  g_random->callback([&] {
    action = [&](const Json& m) { return emit(to_json(random_connected_2complex(triangles, max_degree, seed)), m); };
  });

  std::string spec_a = "repetition:3", spec_b = "repetition:3";
  auto* g_hgp = gen->add_subcommand("hgp", "Hypergraph product of two classical codes");
  g_hgp->add_option("--a", spec_a, "repetition:N, cycle:N, hamming:R or alist:PATH")->capture_default_str();
  g_hgp->add_option("--b", spec_b, "Second classical code")->capture_default_str();
  common(g_hgp);
  g_hgp->callback([&] {
    action = [&](const Json& m) {
      return emit(to_json(hypergraph_product(classical_checks(spec_a), classical_checks(spec_b))), m);
    };
  });

  // report
  std::string code_path, placement_path, complex_path, embedding_path, params_path;
  Budget budget;
  auto* rep = app.add_subcommand("report", "Dimension and distances of a code");
  rep->add_option("code", code_path, "Code JSON")->required();
  budget.add(rep);
  common(rep);
  rep->callback([&] {
    action = [&](const Json& m) {
      auto c = load(code_path, "code", code_from_json);
      return emit(to_json(report(c, budget.get(seed))), m);
    };
  });

  // embed
  EmbedParams ep;
  double delta = ep.delta;
  std::size_t a_max = 0, max_resamples = 0;
  auto* emb = app.add_subcommand("embed", "Coarse embedding of a simplicial complex into R^n");
  emb->add_option("complex", complex_path, "Complex JSON")->required();
  auto* o_params = emb->add_option("--params", params_path, "Embedding parameters JSON (flags override)");
  auto* o_n = emb->add_option("--n", ep.n, "Target dimension")->capture_default_str();
  auto* o_delta = emb->add_option("--delta", delta, "Scale constant")->capture_default_str();
  auto* o_amax = emb->add_option("--a-max", a_max, "Backward count threshold (default from degree)");
  auto* o_max = emb->add_option("--max-resamples", max_resamples, "Resampling budget (default from size)");
  auto* o_seed = emb->add_option("--seed", seed, "Random seed")->capture_default_str();
  emb->add_option("-o,--out", out_path, "Output file (default: standard output)");
  emb->callback([&] {
    action = [&, o_params, o_n, o_delta, o_amax, o_max, o_seed](const Json& m) {
      EmbedParams p;
      if (o_params->count()) p = load(params_path, "params", params_from_json);
      if (o_n->count() || !o_params->count()) p.n = ep.n;
      if (o_delta->count() || !o_params->count()) p.delta = delta;
      if (o_amax->count()) p.a_max = a_max;
      if (o_max->count()) p.max_resamples = max_resamples;
      if (o_seed->count() || !o_params->count()) p.seed = seed;
      auto x = load(complex_path, "complex", complex_from_json);
      Json meta = m;
      meta["seed"] = p.seed;
      return emit(to_json(gg_embed(x, p)), meta);
    };
  });

  // certify
  auto* cert = app.add_subcommand("certify", "Locality certificate of a placed code, or recheck of an embedding");
  cert->add_option("--code", code_path, "Code JSON");
  cert->add_option("--placement", placement_path, "Placement JSON");
  cert->add_option("--embedding", embedding_path, "Embedding JSON to recheck");
  double cube_limit = 8.0;
  cert->add_option("--cube-limit", cube_limit, "Flag cube constants above this")->capture_default_str();
  common(cert);
  cert->callback([&] {
    action = [&](const Json& m) {
      if (!embedding_path.empty()) {
        if (!code_path.empty() || !placement_path.empty())
          throw CliError("certify takes either --embedding or --code with --placement");
        auto e = load(embedding_path, "embedding", embedded_from_json);
        auto fresh = certify_coarse(e.complex(), e.coords);
        Json body = {{"certificate", to_json(fresh)},
                     {"stored", to_json(e.certificate)},
                     {"verified", to_json(fresh) == to_json(e.certificate)},
                     {"accepted", e.accepted}};
        return emit(body, m);
      }
      if (code_path.empty() || placement_path.empty())
        throw CliError("certify needs --code and --placement, or --embedding");
      auto c = load(code_path, "code", code_from_json);
      auto p = load(placement_path, "placement", placement_from_json);
      if (p.points.size() != c.size())
        throw CliError("placement has " + std::to_string(p.points.size()) + " points but the code has " +
                       std::to_string(c.size()) + " qubits");
      return emit(to_json(certify_local(c, p, cube_limit)), m);
    };
  });

  // fold
  auto* fold = app.add_subcommand("fold", "Folded placement of the toric code");
  fold->add_option("--n", n, "Torus dimension")->capture_default_str();
  fold->add_option("--L", L, "Side length")->capture_default_str();
  fold->add_option("--k", k, "Qubit cell dimension")->capture_default_str();
  common(fold);
  fold->callback([&] { action = [&](const Json& m) { return emit(to_json(fold_torus(n, L, k)), m); }; });

  // pad
  std::size_t volume = 0;
  auto* pad = app.add_subcommand("pad", "Pad a placed code with a path block to a target size");
  pad->add_option("--code", code_path, "Code JSON")->required();
  pad->add_option("--placement", placement_path, "Placement JSON")->required();
  pad->add_option("--volume", volume, "Target qubit count")->required();
  common(pad);
  pad->callback([&] {
    action = [&](const Json& m) {
      auto c = load(code_path, "code", code_from_json);
      auto p = load(placement_path, "placement", placement_from_json);
      auto [pc, pp] = pad_code(c, p, volume);
      return emit({{"code", to_json(pc)}, {"placement", to_json(pp)}}, m);
    };
  });

  // survey
  std::string family = "toric", params_list = "3..6", format = "csv";
  SurveySpec ss;
  bool timing = false;
  auto* sur = app.add_subcommand("survey", "Bound survey over a family sweep");
  sur->add_option("family", family, "toric, padded, hgp or embedded")->capture_default_str();
  sur->add_option("--n", ss.n, "Lattice dimension")->capture_default_str();
  sur->add_option("--L", params_list, "Sweep values: a..b or a,b,c")->capture_default_str();
  sur->add_option("--pad-factor", ss.pad_factor, "Padded target volume over size")->capture_default_str();
  sur->add_option("--delta", ss.delta, "Embedding scale constant")->capture_default_str();
  sur->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sur->add_flag("--timing", timing, "Record runtimes (output no longer reproducible)");
  budget.add(sur);
  common(sur);
  sur->callback([&] {
    action = [&](const Json& m) {
      ss.family = parse_family(family);
      ss.params = parse_range(params_list);
      ss.seed = seed;
      ss.budget = budget.get(seed);
      ss.timing = timing;
      auto rows = frontier_survey(ss);
      if (format == "json") return emit(to_json(rows), m);
      return "# " + m.dump() + "\n" + survey_csv(rows);
    };
  });

  // verify-bounds
  BoundThresholds th;
  auto* vb = app.add_subcommand("verify-bounds", "Distance and tradeoff ratios of a placed code");
  vb->add_option("--code", code_path, "Code JSON")->required();
  vb->add_option("--placement", placement_path, "Placement JSON")->required();
  vb->add_option("--distance-threshold", th.distance, "Bound on d / V^((n-1)/n)")->capture_default_str();
  vb->add_option("--tradeoff-threshold", th.tradeoff, "Bound on dim d^(2/(n-1)) / V")->capture_default_str();
  budget.add(vb);
  common(vb);
  vb->callback([&] {
    action = [&](const Json& m) {
      auto c = load(code_path, "code", code_from_json);
      auto p = load(placement_path, "placement", placement_from_json);
      if (p.points.size() != c.size()) throw CliError("placement and code sizes differ");
      return emit(to_json(check_bounds(c, certify_local(c, p), th, budget.get(seed))), m);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    Json params = Json::object();
    std::string command;
    for (const CLI::App* a = &app; !a->get_subcommands().empty();) {
      a = a->get_subcommands().front();
      command += (command.empty() ? "" : " ") + a->get_name();
    }
    record_params(&app, params);
    params.erase("out");
    Json meta = {{"version", kVersion}, {"command", command}, {"seed", seed}, {"params", params}};
    std::string text = action(meta);
    if (out_path.empty() || out_path == "-") {
      out << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw CliError("cannot write '" + out_path + "'");
      f << text;
      if (!f) throw CliError("write to '" + out_path + "' failed");
    }
    return 0;
  } catch (const std::exception& e) {
    err << "lqc: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lqc
