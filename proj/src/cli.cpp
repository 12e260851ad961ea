#include "fockbridge/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "CLI11.hpp"

#include "fockbridge/identities.hpp"
#include "fockbridge/reps.hpp"

namespace fockbridge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view text, std::string_view what) {
  const std::string s(trim(text));
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw UsageError("bad " + std::string(what) + " '" + s + "'");
  return value;
}

}  // namespace

RepPtr parse_rep_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec == "fermionic") return fermionic_rep();
  if (spec == "macdonald") return macdonald_rep();
  if (spec.starts_with("llt1:")) {
    const int n = parse_int(spec.substr(5), "LLT level");
    if (n < 2) throw UsageError("llt1:<n> needs n >= 2");
    return llt_q1_rep(n);
  }
  if (spec.starts_with("tensor:")) {
    const std::string_view body = spec.substr(7);
    const auto caret = body.rfind('^');
    if (caret == std::string_view::npos) throw UsageError("tensor spec needs the form tensor:<rep>^<n>");
    const int n = parse_int(body.substr(caret + 1), "tensor power");
    if (n < 1) throw UsageError("tensor power must be >= 1");
    RepPtr factor = parse_rep_spec(body.substr(0, caret));
    if (n == 1) return factor;
    return tensor(std::vector<RepPtr>(static_cast<std::size_t>(n), factor));
  }
  if (spec.starts_with("bundle:")) {
    const std::string path(spec.substr(7));
    try {
      return load_bundle(path);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown representation '" + std::string(spec) + "'");
}

RepPtr make_rep(const CliConfig& config) {
  RepPtr rep = parse_rep_spec(config.rep);
  if (config.spec.empty()) return rep;
  return specialized_rep(std::move(rep), config.spec);
}

nlohmann::json symfunc_to_json(const SymFunc& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
    terms.push_back({{"partition", it->first.parts()}, {"coeff", it->second.to_string()}});
  return {{"basis", std::string(1, basis_char(f.basis()))}, {"terms", terms}};
}

SymFunc symfunc_from_json(const nlohmann::json& doc) {
  try {
    const Basis basis = parse_basis(doc.at("basis").get<std::string>());
    SymFunc::Terms terms;
    for (const auto& term : doc.at("terms")) {
      Partition lambda;
      try {
        lambda = Partition(term.at("partition").get<std::vector<int>>());
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
      const Scalar c = Scalar::parse(term.at("coeff").get<std::string>());
      if (c.is_zero()) throw ParseError("zero coefficient for " + lambda.to_string());
      if (!terms.emplace(lambda, c).second) throw ParseError("partition " + lambda.to_string() + " repeated");
    }
    return SymFunc(basis, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed symmetric function: ") + e.what());
  }
}

std::vector<int> parse_composition(std::string_view text) {
  text = trim(text);
  if (!text.empty() && (text.front() == '(' || text.front() == '[')) {
    const char close = text.front() == '(' ? ')' : ']';
    if (text.back() != close) throw UsageError("unbalanced composition '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> out;
  if (text.empty()) return out;
  for (const auto& part : CLI::detail::split(std::string(text), ',')) {
    const int v = parse_int(part, "composition part");
    if (v <= 0) throw UsageError("composition parts must be positive");
    out.push_back(v);
  }
  return out;
}

ChainCount weight_chains(const Rep& rep, const BasisIndex& s, const BasisIndex& t, const std::vector<int>& weight) {
  using Path = std::pair<std::vector<BasisIndex>, Scalar>;
  std::vector<Path> paths{{{t}, Scalar(1)}};
  for (int w : weight) {
    std::vector<Path> next;
    for (const auto& [path, c] : paths)
      for (const auto& [u, cu] : apply_U(rep, w, path.back()).terms()) {
        auto longer = path;
        longer.push_back(u);
        next.emplace_back(std::move(longer), c * cu);
      }
    paths = std::move(next);
  }
  ChainCount out{monomial_coeff(rep, s, t, weight), {}};
  for (auto& p : paths)
    if (p.first.back() == s) out.chains.push_back(std::move(p));
  return out;
}

namespace {

struct Bounds {
  int k_max = 2;
  int d_max = 3;
  int ab_max = 2;
  int x_count = 2;
  int y_count = 2;
  std::string t_label;
  std::string r_label;
  std::vector<int> l_set{-2, -1, 1, 2};
  std::vector<std::string> params;
};

void require_cap(const CliConfig& config, long degree, const std::string& what) {
  if (degree > config.degree_cap)
    throw UsageError(what + " " + std::to_string(degree) + " exceeds the degree cap " +
                     std::to_string(config.degree_cap));
}

BasisIndex parse_label(const Rep& rep, const std::string& text, const std::string& what) {
  try {
    return rep.parse_index(text);
  } catch (const Error& e) {
    throw UsageError("bad " + what + " '" + text + "': " + e.what());
  }
}

void emit(std::ostream& out, const CliConfig& config, const nlohmann::json& doc, const std::string& text) {
  if (config.out == OutputFormat::json)
    out << doc.dump(2) << "\n";
  else
    out << text;
}

int cmd_expand(const CliConfig& config, const std::string& shape, const std::string& base, const std::string& fn,
               const std::string& basis_name, std::ostream& out) {
  const RepPtr rep = make_rep(config);
  const BasisIndex s = parse_label(*rep, shape, "shape");
  const BasisIndex t = base.empty() ? rep->highest() : parse_label(*rep, base, "base");
  Basis basis;
  try {
    basis = parse_basis(basis_name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  require_cap(config, std::max(rep->degree(s), rep->degree(t)), "degree");
  const SymFunc f = convert(fn == "F" ? compute_F(*rep, s, t) : compute_G(*rep, s, t), basis);
  emit(out, config, symfunc_to_json(f), f.to_string() + "\n");
  return exit_pass;
}

int cmd_tableaux(const CliConfig& config, const std::string& shape, const std::string& base,
                 const std::string& weight_text, std::ostream& out) {
  const RepPtr rep = make_rep(config);
  const BasisIndex s = parse_label(*rep, shape, "shape");
  const BasisIndex t = base.empty() ? rep->highest() : parse_label(*rep, base, "base");
  const std::vector<int> weight = parse_composition(weight_text);
  require_cap(config, std::max(rep->degree(s), rep->degree(t)), "degree");
  const ChainCount result = weight_chains(*rep, s, t, weight);

  nlohmann::json chains = nlohmann::json::array();
  std::string text = "coefficient: " + result.coefficient.to_string() + "\n" +
                     "chains: " + std::to_string(result.chains.size()) + "\n";
  for (const auto& [path, c] : result.chains) {
    nlohmann::json labels = nlohmann::json::array();
    std::string line;
    for (const auto& v : path) {
      labels.push_back(rep->label(v));
      line += (line.empty() ? "" : " -> ") + rep->label(v);
    }
    chains.push_back({{"path", labels}, {"coeff", c.to_string()}});
    text += "  " + line + "  (" + c.to_string() + ")\n";
  }
  const nlohmann::json doc = {{"shape", rep->label(s)},
                              {"base", rep->label(t)},
                              {"weight", weight},
                              {"coefficient", result.coefficient.to_string()},
                              {"chains", chains}};
  emit(out, config, doc, text);
  return exit_pass;
}

int cmd_verify(const CliConfig& config, const std::string& suite, const Bounds& b, std::ostream& out) {
  const RepPtr rep = make_rep(config);
  require_cap(config, b.d_max, "--dmax");
  require_cap(config, std::max(b.k_max, b.ab_max), "operator index");
  if (b.d_max < 0 || b.k_max < 1 || b.ab_max < 1 || b.x_count < 1 || b.y_count < 1)
    throw UsageError("bounds must be nonnegative and counts positive");

  std::optional<HeisenbergParams> given;
  if (!b.params.empty()) {
    std::vector<Scalar> values;
    try {
      for (const auto& p : b.params) values.push_back(Scalar::parse(p));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    given = HeisenbergParams::from_list(std::move(values));
    if (!config.spec.empty()) given = given->specialized(config.spec);
  }
  const HeisenbergParams& a = given ? *given : rep->params();

  if (suite == "converse") {
    const ConverseReport report = diagnose_converse(*rep, a, b.d_max, b.k_max);
    emit(out, config, report.to_json(), report.to_text());
    return report.passed() ? exit_pass : exit_fail;
  }

  std::optional<VerifyReport> report;
  if (suite == "heisenberg") {
    report = verify_heisenberg(*rep, a, b.k_max, b.d_max);
  } else if (suite == "pieri") {
    report = verify_pieri(*rep, a, b.k_max, b.d_max);
  } else if (suite == "du") {
    report = verify_du(*rep, a, b.ab_max, b.d_max);
  } else if (suite == "bf") {
    report = verify_bf(*rep, a, b.d_max, b.l_set);
  } else {
    const BasisIndex t = b.t_label.empty() ? rep->highest() : parse_label(*rep, b.t_label, "--tshape");
    const BasisIndex r = b.r_label.empty() ? rep->highest() : parse_label(*rep, b.r_label, "--rshape");
    report = verify_cauchy(*rep, a, b.x_count, b.y_count, b.d_max, t, r);
  }
  emit(out, config, report->to_json(), report->to_text());
  return report->passed() ? exit_pass : exit_fail;
}

int cmd_export(const CliConfig& config, int max_degree, int k_max, const std::string& file, std::ostream& out) {
  const RepPtr rep = make_rep(config);
  require_cap(config, max_degree, "--max-degree");
  if (k_max < 1) throw UsageError("--kmax must be >= 1");
  const nlohmann::json doc = export_bundle(*rep, max_degree, k_max);
  if (file.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    std::ofstream f(file);
    if (!f) throw Error("cannot write " + file);
    f << doc.dump(2) << "\n";
  }
  return exit_pass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generating functions of Heisenberg representations", "fockbridge"};
  app.fallthrough();
  app.require_subcommand(1);

  CliConfig config;
  std::string out_format = "text";
  std::vector<std::string> specs;
  app.add_option("--rep", config.rep, "fermionic | macdonald | llt1:<n> | tensor:<rep>^<n> | bundle:<path>");
  app.add_option("--out", out_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--spec", specs, "specialization such as q=0; repeatable")->allow_extra_args(false);
  app.add_option("--degree-cap", config.degree_cap, "largest degree any command may reach")
      ->check(CLI::NonNegativeNumber);

  std::string shape, base, fn = "F", basis = "s", weight;
  auto* expand = app.add_subcommand("expand", "print F_{s/t} or G_{s/t}");
  expand->add_option("--shape", shape, "s")->required();
  expand->add_option("--base", base, "t (default: the highest weight vector)");
  expand->add_option("--fn", fn, "F or G")->check(CLI::IsMember({"F", "G"}));
  expand->add_option("--basis", basis, "p, h, m or s")->check(CLI::IsMember({"p", "h", "m", "s"}));

  std::string suite;
  Bounds bounds;
  auto* verify = app.add_subcommand("verify", "check an identity on a truncation");
  verify->add_option("suite", suite, "pieri | cauchy | du | bf | converse | heisenberg")
      ->required()
      ->check(CLI::IsMember({"pieri", "cauchy", "du", "bf", "converse", "heisenberg"}));
  verify->add_option("--kmax", bounds.k_max);
  verify->add_option("--dmax", bounds.d_max);
  verify->add_option("--abmax", bounds.ab_max);
  verify->add_option("--xvars", bounds.x_count);
  verify->add_option("--yvars", bounds.y_count);
  verify->add_option("--tshape", bounds.t_label, "t of the skew Cauchy identity");
  verify->add_option("--rshape", bounds.r_label, "r of the skew Cauchy identity");
  verify->add_option("--lset", bounds.l_set, "B indices for bf")->delimiter(',')->allow_extra_args(false);
  verify->add_option("--params", bounds.params, "a_1, a_2, ... overriding the representation's")->delimiter(',')->allow_extra_args(false);

  auto* tableaux = app.add_subcommand("tableaux", "coefficient <U_alpha v_t, v_s> and its chains");
  tableaux->add_option("--shape", shape, "s")->required();
  tableaux->add_option("--base", base, "t (default: the highest weight vector)");
  tableaux->add_option("--weight", weight, "composition alpha, e.g. (1,1,1)")->required();

  int max_degree = 4, export_kmax = 0;
  std::string file;
  auto* exporter = app.add_subcommand("export-bundle", "write U_k, D_k as a JSON matrix bundle");
  exporter->add_option("--max-degree", max_degree);
  exporter->add_option("--kmax", export_kmax, "default: --max-degree");
  exporter->add_option("--file", file, "default: standard output");

  if (const char* env = std::getenv("FOCKBRIDGE_DEGREE_CAP")) {
    try {
      config.degree_cap = parse_int(env, "FOCKBRIDGE_DEGREE_CAP");
      if (config.degree_cap < 0) throw UsageError("FOCKBRIDGE_DEGREE_CAP must be >= 0");
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    config.out = out_format == "json" ? OutputFormat::json : OutputFormat::text;
    for (const auto& s : specs) config.spec.assign(s);
    TransitionCache::instance().set_degree_cap(config.degree_cap);

    if (*expand) return cmd_expand(config, shape, base, fn, basis, out);
    if (*verify) return cmd_verify(config, suite, bounds, out);
    if (*tableaux) return cmd_tableaux(config, shape, base, weight, out);
    return cmd_export(config, max_degree, export_kmax > 0 ? export_kmax : max_degree, file, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_fail;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace fockbridge
