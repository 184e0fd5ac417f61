/**
 * Command-line surface: complex documents, the verification report, the
 * sphere-matrix nullity experiment, and the subcommand dispatcher used by the
 * `simplex-forge` executable.
 *
 * Exit codes: 0 all checks passed, 1 some check failed (or was skipped as too
 * large), 2 usage or input error.
 */
#ifndef SIMPLEX_FORGE_CLI_HPP
#define SIMPLEX_FORGE_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "simplex_forge/complex.hpp"
#include "simplex_forge/numbers.hpp"
#include "simplex_forge/valuations.hpp"

namespace simplex_forge {

inline constexpr std::string_view kDocumentFormat = "simplex-forge/1";

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct ComplexDocument {
  SimplicialComplex complex;
  nlohmann::json meta = nlohmann::json::object();
};

/**
 * Parses either format, chosen by the first non-blank byte ('{' means JSON).
 *
 * Facet text: one facet per line, whitespace-separated positive integers;
 * '#' starts a comment; blank lines are ignored. The complex is the closure.
 *
 * JSON: {"format": "simplex-forge/1", "facets": [[...], ...], "meta": {...}}.
 * Instead of "facets" a document may give "elements", the complete element
 * list, which must already be closed under taking faces.
 *
 * Throws InvalidInput (with a line number for text input) or NotSubsetClosed.
 */
ComplexDocument parse_document(std::string_view text);
SimplicialComplex parse_complex(std::string_view text);

/// Facets in canonical order, one per line, preceded by a comment line.
std::string serialize_text(const SimplicialComplex& g);
nlohmann::json to_json(const ComplexDocument& doc);
std::string serialize_json(const ComplexDocument& doc);

/**
 * Complexes addressable by name from the command line:
 *   cross-polytope <d>, simplex <d>, cycle <n>, star <n>, cube-skeleton,
 *   dodecahedron-skeleton, projective-plane, projective-plane-pair-suspension.
 */
ComplexDocument generate_named(const std::string& name, const std::vector<std::string>& params);
ComplexDocument generate_random(int n, std::int64_t m, std::uint64_t seed);

enum class Status { pass, fail, skipped };
std::string_view to_string(Status s);

struct Verdict {
  Status status = Status::skipped;
  std::string detail;
  bool too_large = false;
  double millis = 0.0;
};

struct CheckOptions {
  std::size_t max_elements = 400;
  unsigned mmax = 5;
  std::uint64_t trials = 20;
  std::uint64_t seed = 1;
};

struct VerificationReport {
  std::size_t n = 0;
  std::optional<int> dimension;
  FVector f;
  std::int64_t chi = 0;
  /// Keyed by check name: energy, sphere, unit_balls, unimodularity,
  /// sphere_super_trace, gauss_bonnet, poincare_hopf, index_expectation,
  /// euler_poincare, mckean_singer, dehn_sommerville.
  std::map<std::string, Verdict> verdicts;
  std::optional<BigInt> det_g;
  std::optional<std::size_t> nullity_s;
  std::map<Label, Rational> curvature;
  std::optional<std::vector<std::size_t>> betti;
  bool is_dehn_sommerville = false;

  bool all_pass() const;
  int exit_code() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

VerificationReport verify(const SimplicialComplex& g, const CheckOptions& options = {});

struct ExperimentOptions {
  std::uint64_t count = 1;
  int n = 20;
  std::int64_t m = 100;
  std::uint64_t seed = 1;
  std::size_t max_elements = 400;
};

/// One random complex of the nullity experiment. det_g and nullity_s are
/// absent when the complex exceeds max_elements.
struct ExperimentRow {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  FVector f;
  std::int64_t chi = 0;
  std::optional<BigInt> det_g;
  std::optional<std::size_t> nullity_s;
};

inline constexpr std::size_t kCsvFColumns = 6;

/// Row i uses seed options.seed + i.
std::vector<ExperimentRow> run_nullity_experiment(const ExperimentOptions& options);
/// Header `seed,n,f0,...,f5,chi,det_g,nullity_s`; skipped values are empty
/// fields. Throws InvalidInput if some f-vector is longer than six entries.
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
/// Count of rows per nullity value plus the skipped count.
std::string summarize_nullity(const std::vector<ExperimentRow>& rows);

/// Runs the command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplex_forge

#endif
