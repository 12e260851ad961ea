#pragma once

// Command-line front end.  run_cli() is the whole program; the executable in
// tools/ only forwards argv and the standard streams.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fockbridge/heisenberg.hpp"
#include "fockbridge/symfunc.hpp"

namespace fockbridge {

/// Malformed invocation; maps to exit status 2.
struct UsageError : Error {
  using Error::Error;
};

enum class OutputFormat { json, text };

struct CliConfig {
  std::string rep = "fermionic";
  int degree_cap = 10;
  OutputFormat out = OutputFormat::text;
  Bindings spec;
};

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// fermionic | macdonald | llt1:<n> | tensor:<rep>^<n> | bundle:<path>.
/// Throws UsageError for anything else or for a bundle that fails to load.
RepPtr parse_rep_spec(std::string_view spec);

/// The representation of `config`, specialized when bindings are present.
RepPtr make_rep(const CliConfig& config);

/// {"basis": "s", "terms": [{"partition": [2,1], "coeff": "1"}, ...]} with
/// terms in reverse-lexicographic order.
nlohmann::json symfunc_to_json(const SymFunc& f);
/// Throws ParseError on a document that does not follow that schema.
SymFunc symfunc_from_json(const nlohmann::json& doc);

/// Parses "(1,1,1)", "[1,1,1]", "1,1,1" or "()"; parts must be positive.
std::vector<int> parse_composition(std::string_view text);

struct ChainCount {
  Scalar coefficient;
  /// Every sequence t = v_0, v_1, ..., v_r = s with <U_{alpha_i} v_{i-1}, v_i>
  /// nonzero, paired with the product of those coefficients.
  std::vector<std::pair<std::vector<BasisIndex>, Scalar>> chains;
};

ChainCount weight_chains(const Rep& rep, const BasisIndex& s, const BasisIndex& t, const std::vector<int>& weight);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fockbridge
