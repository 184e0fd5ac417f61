#include "simplex_forge/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "simplex_forge/curvature_morse.hpp"
#include "simplex_forge/energy.hpp"
#include "simplex_forge/errors.hpp"
#include "simplex_forge/generators.hpp"
#include "simplex_forge/hodge.hpp"

namespace simplex_forge {

using nlohmann::json;

// -------------------------------------------------------------- documents --

namespace {

std::vector<Simplex> simplices_from_json(const json& list, const char* field) {
  if (!list.is_array()) throw InvalidInput(std::string("'") + field + "' must be an array");
  std::vector<Simplex> out;
  for (const json& item : list) {
    if (!item.is_array()) throw InvalidInput(std::string("entries of '") + field + "' must be arrays");
    if (item.empty()) throw InvalidInput(std::string("empty simplex in '") + field + "'");
    std::vector<Label> labels;
    for (const json& v : item) {
      if (!v.is_number_integer()) throw InvalidInput("vertex labels must be integers");
      labels.push_back(v.get<Label>());
    }
    out.emplace_back(std::move(labels));
  }
  return out;
}

ComplexDocument parse_json_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON document: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("JSON document must be an object");
  if (!doc.contains("format") || doc["format"] != kDocumentFormat)
    throw InvalidInput("JSON document must declare \"format\": \"" + std::string(kDocumentFormat) + "\"");
  ComplexDocument out;
  const bool has_facets = doc.contains("facets");
  const bool has_elements = doc.contains("elements");
  if (has_facets == has_elements)
    throw InvalidInput("JSON document needs exactly one of \"facets\" or \"elements\"");
  if (has_facets) {
    const auto facets = simplices_from_json(doc["facets"], "facets");
    out.complex = closure(std::span<const Simplex>(facets));
  } else {
    out.complex = SimplicialComplex::from_elements(simplices_from_json(doc["elements"], "elements"));
  }
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) throw InvalidInput("\"meta\" must be an object");
    out.meta = doc["meta"];
  }
  return out;
}

ComplexDocument parse_text_document(std::string_view text) {
  std::vector<Simplex> facets;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    ++line_no;
    std::string line(text.substr(start, stop - start));
    start = stop + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream in(line);
    std::vector<Label> labels;
    std::string token;
    while (in >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || token.empty())
        throw InvalidInput("line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
      if (value <= 0)
        throw InvalidInput("line " + std::to_string(line_no) + ": vertex label " + token +
                           " is not positive");
      labels.push_back(value);
    }
    if (labels.empty()) continue;
    try {
      facets.emplace_back(std::move(labels));
    } catch (const InvalidInput& e) {
      throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (stop == text.size()) break;
  }
  ComplexDocument out;
  out.complex = closure(std::span<const Simplex>(facets));
  return out;
}

}  // namespace

ComplexDocument parse_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_document(text);
  return parse_text_document(text);
}

SimplicialComplex parse_complex(std::string_view text) { return parse_document(text).complex; }

std::string serialize_text(const SimplicialComplex& g) {
  std::string out = "# simplex-forge facets\n";
  for (const Simplex& x : g.facets()) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(x.vertices()[i]);
    }
    out += '\n';
  }
  return out;
}

json to_json(const ComplexDocument& doc) {
  json facets = json::array();
  for (const Simplex& x : doc.complex.facets()) facets.push_back(x.vertices());
  return json{{"format", kDocumentFormat}, {"facets", facets}, {"meta", doc.meta}};
}

std::string serialize_json(const ComplexDocument& doc) { return to_json(doc).dump(2) + "\n"; }

// ------------------------------------------------------------- generation --

namespace {

int int_param(const std::vector<std::string>& params, std::size_t i, const std::string& name) {
  if (i >= params.size()) throw InvalidInput("'" + name + "' needs an integer parameter");
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(params[i], &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != params[i].size()) throw InvalidInput("'" + params[i] + "' is not an integer");
  return value;
}

}  // namespace

ComplexDocument generate_named(const std::string& name, const std::vector<std::string>& params) {
  ComplexDocument doc;
  doc.meta = {{"name", name}, {"generator", "named"}};
  std::size_t expected = 0;
  if (name == "cross-polytope") {
    const int d = int_param(params, 0, name);
    doc.complex = cross_polytope(d);
    doc.meta["params"] = {d};
    expected = 1;
  } else if (name == "simplex") {
    const int d = int_param(params, 0, name);
    if (d < 0) throw InvalidInput("simplex dimension must be >= 0");
    std::vector<Label> v(static_cast<std::size_t>(d) + 1);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Label>(i + 1);
    doc.complex = closure({Simplex(v)});
    doc.meta["params"] = {d};
    expected = 1;
  } else if (name == "cycle" || name == "star") {
    const int n = int_param(params, 0, name);
    doc.complex = named_skeleton(name, n);
    doc.meta["params"] = {n};
    expected = 1;
  } else if (name == "cube-skeleton") {
    doc.complex = named_skeleton("cube");
  } else if (name == "dodecahedron-skeleton") {
    doc.complex = named_skeleton("dodecahedron");
  } else if (name == "projective-plane") {
    doc.complex = projective_plane();
  } else if (name == "projective-plane-pair-suspension") {
    doc.complex = suspension(disjoint_union(projective_plane(), projective_plane()));
  } else {
    throw InvalidInput("unknown generator '" + name + "'");
  }
  if (params.size() > expected) throw InvalidInput("too many parameters for '" + name + "'");
  return doc;
}

ComplexDocument generate_random(int n, std::int64_t m, std::uint64_t seed) {
  ComplexDocument doc;
  doc.complex = whitney(random_graph(n, m, seed));
  doc.meta = {{"generator", "random"}, {"n", n}, {"m", m}, {"seed", seed}};
  return doc;
}

// ----------------------------------------------------------- verification --

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::skipped:
      return "skipped";
  }
  return "?";
}

bool VerificationReport::all_pass() const {
  for (const auto& [name, v] : verdicts)
    if (v.status == Status::fail || v.too_large) return false;
  return true;
}

int VerificationReport::exit_code() const { return all_pass() ? kExitPass : kExitFail; }

json VerificationReport::to_json() const {
  json j;
  j["summary"] = {{"n", n}, {"f_vector", f}, {"euler_characteristic", chi}};
  j["summary"]["dimension"] = dimension ? json(*dimension) : json(nullptr);
  json checks = json::object();
  for (const auto& [name, v] : verdicts) {
    json c = {{"status", to_string(v.status)}, {"millis", v.millis}};
    if (!v.detail.empty()) c["detail"] = v.detail;
    checks[name] = c;
  }
  j["checks"] = checks;
  j["det_g"] = det_g ? json(det_g->str()) : json(nullptr);
  j["nullity_s"] = nullity_s ? json(*nullity_s) : json(nullptr);
  json curv = json::object();
  for (const auto& [v, k] : curvature) curv[std::to_string(v)] = simplex_forge::to_string(k);
  j["curvature"] = curv;
  j["betti"] = betti ? json(*betti) : json(nullptr);
  j["is_dehn_sommerville"] = is_dehn_sommerville;
  j["all_pass"] = all_pass();
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "elements: " << n << "\n";
  out << "dimension: " << (dimension ? std::to_string(*dimension) : "none") << "\n";
  out << "f-vector: (";
  for (std::size_t k = 0; k < f.size(); ++k) out << (k ? "," : "") << f[k];
  out << ")\n";
  out << "euler characteristic: " << chi << "\n";
  if (det_g) out << "det(g): " << *det_g << "\n";
  if (nullity_s) out << "nullity(s): " << *nullity_s << "\n";
  if (betti) {
    out << "betti: (";
    for (std::size_t k = 0; k < betti->size(); ++k) out << (k ? "," : "") << (*betti)[k];
    out << ")\n";
  }
  out << "dehn-sommerville: " << (is_dehn_sommerville ? "yes" : "no") << "\n";
  out << "curvature:";
  for (const auto& [v, k] : curvature) out << " " << v << ":" << simplex_forge::to_string(k);
  out << "\n";
  for (const auto& [name, v] : verdicts) {
    out << "[" << to_string(v.status) << "] " << name;
    if (!v.detail.empty()) out << " - " << v.detail;
    out << "\n";
  }
  out << (all_pass() ? "ALL PASS" : "NOT ALL PASS") << "\n";
  return out.str();
}

namespace {

Verdict timed(const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const TooLarge& e) {
    v = {Status::skipped, std::string("too large: ") + e.what(), true};
  }
  v.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

Verdict from_bool(bool ok, std::string detail = {}) {
  return {ok ? Status::pass : Status::fail, std::move(detail)};
}

Verdict too_large(std::size_t n, std::size_t limit) {
  return {Status::skipped,
          "too large: " + std::to_string(n) + " elements exceeds --max-elements " +
              std::to_string(limit),
          true};
}

}  // namespace

VerificationReport verify(const SimplicialComplex& g, const CheckOptions& options) {
  VerificationReport r;
  r.n = g.size();
  r.dimension = g.dimension();
  r.f = f_vector(g);
  r.chi = euler_characteristic(g);
  auto& v = r.verdicts;
  if (g.empty()) {
    v["energy"] = {Status::skipped, "empty complex"};
    return r;
  }
  const bool fits = g.size() <= options.max_elements;

  v["energy"] = timed([&] {
    const auto e = energy_sum(g);
    return from_bool(e == r.chi, "sum w(x) chi(U(x)) = " + std::to_string(e));
  });
  v["sphere"] = timed([&] {
    const auto s = sphere_sum(g);
    return from_bool(s == 0, "sum w(x) chi(S(x)) = " + std::to_string(s));
  });
  v["unit_balls"] = timed([&] {
    for (const Simplex& x : g)
      if (euler_characteristic(unit_ball(g, x)) != 1) return from_bool(false, "at " + x.to_string());
    return from_bool(true);
  });

  if (fits) {
    v["unimodularity"] = timed([&] {
      const IntegerMatrix l = connection_laplacian(g, options.max_elements);
      const IntegerMatrix green = green_matrix(g, options.max_elements);
      const bool inverse = l * green == IntegerMatrix::identity(g.size());
      r.det_g = determinant(green);
      const bool unit = *r.det_g == 1 || *r.det_g == -1;
      return from_bool(inverse && unit, "det(g) = " + r.det_g->str() +
                                            (inverse ? ", L*g = I" : ", L*g != I"));
    });
    v["sphere_super_trace"] = timed([&] {
      const IntegerMatrix s = sphere_matrix(g, options.max_elements);
      const BigInt st = super_trace(g, s);
      r.nullity_s = nullity(s);
      return from_bool(st == 0, "str(s) = " + st.str() + ", nullity(s) = " +
                                    std::to_string(*r.nullity_s));
    });
    v["euler_poincare"] = timed([&] {
      r.betti = betti(g);
      return from_bool(euler_poincare_check(g));
    });
    v["mckean_singer"] = timed([&] {
      return from_bool(mckean_singer_check(g, options.mmax),
                       "m = 1.." + std::to_string(options.mmax));
    });
  } else {
    for (const char* name : {"unimodularity", "sphere_super_trace", "euler_poincare", "mckean_singer"})
      v[name] = too_large(g.size(), options.max_elements);
  }

  v["gauss_bonnet"] = timed([&] {
    const CurvatureProfile k = levitt_curvature(g);
    r.curvature = k.per_vertex;
    const bool total = k.total == r.chi;
    const bool poly = gauss_bonnet_polynomial_check(g);
    return from_bool(total && poly, "total curvature " + simplex_forge::to_string(k.total));
  });
  v["poincare_hopf"] = timed([&] {
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t t = 0; t < options.trials; ++t) {
      const VertexFunction f = VertexFunction::random_ordering(g, rng);
      if (!poincare_hopf_check(g, f) || !poincare_hopf_check(g, f.negated()))
        return from_bool(false, "trial " + std::to_string(t));
    }
    return from_bool(true, std::to_string(options.trials) + " random orderings");
  });
  v["index_expectation"] = timed([&] {
    const IndexExpectation e = index_expectation(g, std::max<std::uint64_t>(options.trials, 1), options.seed);
    if (!e.exhaustive)
      return Verdict{Status::skipped,
                     "more than " + std::to_string(kExhaustiveVertexLimit) +
                         " vertices; Monte Carlo estimate is not an exact check"};
    const CurvatureProfile k = levitt_curvature(g);
    return from_bool(e.per_vertex == k.per_vertex,
                     "exhaustive over " + std::to_string(e.samples) + " orderings");
  });
  v["dehn_sommerville"] = timed([&] {
    r.is_dehn_sommerville = is_dehn_sommerville(g);
    const bool agree = r.is_dehn_sommerville == satisfies_reflection_symmetry(g);
    const bool odd_zero = !r.is_dehn_sommerville || *g.dimension() % 2 == 0 || r.chi == 0;
    return from_bool(agree && odd_zero, r.is_dehn_sommerville ? "palindromic h-vector"
                                                              : "h-vector not palindromic");
  });
  return r;
}

// ------------------------------------------------------------- experiment --

std::vector<ExperimentRow> run_nullity_experiment(const ExperimentOptions& options) {
  if (options.count == 0) throw InvalidInput("experiment count must be >= 1");
  std::vector<ExperimentRow> rows;
  rows.reserve(options.count);
  for (std::uint64_t i = 0; i < options.count; ++i) {
    ExperimentRow row;
    row.seed = options.seed + i;
    const SimplicialComplex g = whitney(random_graph(options.n, options.m, row.seed));
    row.n = g.size();
    row.f = f_vector(g);
    row.chi = euler_characteristic(g);
    if (!g.empty() && g.size() <= options.max_elements) {
      row.det_g = determinant(green_matrix(g, options.max_elements));
      row.nullity_s = nullity(sphere_matrix(g, options.max_elements));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << "seed,n";
  for (std::size_t k = 0; k < kCsvFColumns; ++k) out << ",f" << k;
  out << ",chi,det_g,nullity_s\n";
  for (const ExperimentRow& row : rows) {
    if (row.f.size() > kCsvFColumns)
      throw InvalidInput("complex of dimension " + std::to_string(row.f.size() - 1) +
                         " does not fit the CSV columns");
    out << row.seed << ',' << row.n;
    for (std::size_t k = 0; k < kCsvFColumns; ++k) out << ',' << (k < row.f.size() ? row.f[k] : 0);
    out << ',' << row.chi << ',';
    if (row.det_g) out << *row.det_g;
    out << ',';
    if (row.nullity_s) out << *row.nullity_s;
    out << '\n';
  }
}

std::string summarize_nullity(const std::vector<ExperimentRow>& rows) {
  std::map<std::size_t, std::size_t> counts;
  std::size_t skipped = 0;
  std::size_t singular = 0;
  for (const auto& row : rows) {
    if (!row.nullity_s) {
      ++skipped;
      continue;
    }
    ++counts[*row.nullity_s];
    if (*row.nullity_s > 0) ++singular;
  }
  std::ostringstream out;
  out << "nullity(s) distribution over " << rows.size() - skipped << " complexes:";
  for (const auto& [k, c] : counts) out << " " << k << ":" << c;
  out << "\nsingular: " << singular << "/" << rows.size() - skipped;
  if (skipped) out << ", skipped (too large): " << skipped;
  out << "\n";
  return out.str();
}

// -------------------------------------------------------------------- CLI --

namespace {

struct SourceFlags {
  std::string input;
  std::vector<std::string> generate;
  std::vector<std::string> random;
  std::uint64_t seed = 1;
  bool json = false;
  std::size_t max_elements = 400;

  void attach(CLI::App& cmd) {
    auto* in = cmd.add_option("--input", input, "complex document path ('-' for stdin)");
    auto* gen = cmd.add_option("--generate", generate, "named complex and its parameter")
                    ->expected(1, 2);
    auto* rnd = cmd.add_option("--random", random, "random Whitney complex: <n> <m>")->expected(2);
    in->excludes(gen)->excludes(rnd);
    gen->excludes(rnd);
    cmd.add_option("--seed", seed, "random seed");
    cmd.add_flag("--json", json, "JSON output");
    cmd.add_option("--max-elements", max_elements, "ceiling for matrix computations");
  }

  ComplexDocument load() const {
    if (!input.empty()) {
      std::string text;
      if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
      } else {
        std::ifstream file(input);
        if (!file) throw InvalidInput("cannot read '" + input + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
      }
      return parse_document(text);
    }
    if (!generate.empty())
      return generate_named(generate[0], {generate.begin() + 1, generate.end()});
    if (!random.empty()) {
      std::vector<std::string> p = random;
      return generate_random(int_param(p, 0, "--random"), int_param(p, 1, "--random"), seed);
    }
    throw InvalidInput("one of --input, --generate or --random is required");
  }
};

std::vector<Rational> parse_values(const std::string& list) {
  std::vector<Rational> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    out.push_back(parse_rational(b == std::string::npos ? "" : item.substr(b, e - b + 1)));
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on finite abstract simplicial complexes", "simplex-forge"};
  app.require_subcommand(1);

  SourceFlags check_src;
  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "run the verification suite on one complex");
  check_src.attach(*check);
  check->add_option("--trials", check_opts.trials, "random orderings for Poincare-Hopf / index expectation");
  check->add_option("--mmax", check_opts.mmax, "largest Laplacian power for McKean-Singer");

  ExperimentOptions exp_opts;
  std::vector<std::string> exp_random;
  std::string exp_output;
  auto* experiment = app.add_subcommand("experiment-nullity", "nullity of sphere Green matrices of random complexes");
  experiment->add_option("--count", exp_opts.count, "number of random complexes");
  experiment->add_option("--random", exp_random, "<n> <m>")->expected(2);
  experiment->add_option("--seed", exp_opts.seed, "seed of the first complex");
  experiment->add_option("--output", exp_output, "CSV path (default stdout)");
  experiment->add_option("--max-elements", exp_opts.max_elements, "ceiling for matrix computations");

  SourceFlags curv_src;
  auto* curvature = app.add_subcommand("curvature", "Levitt curvature per vertex");
  curv_src.attach(*curvature);

  SourceFlags betti_src;
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers over the rationals");
  betti_src.attach(*betti_cmd);

  SourceFlags ph_src;
  std::string ph_values;
  auto* ph = app.add_subcommand("ph", "Poincare-Hopf indices of a vertex function");
  ph_src.attach(*ph);
  ph->add_option("--values", ph_values, "comma-separated values in ascending vertex-label order");

  SourceFlags gen_src;
  std::string gen_output;
  auto* generate = app.add_subcommand("generate", "write a complex document");
  gen_src.attach(*generate);
  generate->add_option("--output", gen_output, "path (default stdout)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      const ComplexDocument doc = check_src.load();
      check_opts.seed = check_src.seed;
      check_opts.max_elements = check_src.max_elements;
      const VerificationReport report = verify(doc.complex, check_opts);
      if (check_src.json)
        out << report.to_json().dump(2) << "\n";
      else
        out << report.to_text();
      return report.exit_code();
    }
    if (experiment->parsed()) {
      if (!exp_random.empty()) {
        exp_opts.n = int_param(exp_random, 0, "--random");
        exp_opts.m = int_param(exp_random, 1, "--random");
      }
      const auto rows = run_nullity_experiment(exp_opts);
      bool all_unimodular = true;
      for (const auto& row : rows)
        if (row.det_g && *row.det_g != 1 && *row.det_g != -1) all_unimodular = false;
      if (exp_output.empty()) {
        write_csv(out, rows);
      } else {
        std::ofstream file(exp_output, std::ios::binary);
        if (!file) throw InvalidInput("cannot write '" + exp_output + "'");
        write_csv(file, rows);
        if (!file) throw InvalidInput("write to '" + exp_output + "' failed");
      }
      err << summarize_nullity(rows);
      return all_unimodular ? kExitPass : kExitFail;
    }
    if (curvature->parsed()) {
      const ComplexDocument doc = curv_src.load();
      if (doc.complex.empty()) throw InvalidInput("curvature of the empty complex");
      const CurvatureProfile k = levitt_curvature(doc.complex);
      const bool ok = k.total == euler_characteristic(doc.complex) &&
                      gauss_bonnet_polynomial_check(doc.complex);
      if (curv_src.json) {
        json j = json::object();
        for (const auto& [v, c] : k.per_vertex) j["curvature"][std::to_string(v)] = to_string(c);
        j["total"] = to_string(k.total);
        j["euler_characteristic"] = euler_characteristic(doc.complex);
        j["gauss_bonnet"] = ok ? "pass" : "fail";
        out << j.dump(2) << "\n";
      } else {
        for (const auto& [v, c] : k.per_vertex) out << v << " " << to_string(c) << "\n";
        out << "total " << to_string(k.total) << "\n";
        out << "euler characteristic " << euler_characteristic(doc.complex) << "\n";
        out << "gauss-bonnet " << (ok ? "pass" : "fail") << "\n";
      }
      return ok ? kExitPass : kExitFail;
    }
    if (betti_cmd->parsed()) {
      const ComplexDocument doc = betti_src.load();
      if (doc.complex.size() > betti_src.max_elements)
        throw TooLarge(std::to_string(doc.complex.size()) + " elements exceeds --max-elements");
      const auto b = betti(doc.complex);
      const bool ok = euler_poincare_check(doc.complex);
      if (betti_src.json) {
        out << json{{"betti", b},
                    {"euler_characteristic", euler_characteristic(doc.complex)},
                    {"euler_poincare", ok ? "pass" : "fail"}}
                   .dump(2)
            << "\n";
      } else {
        for (std::size_t k = 0; k < b.size(); ++k) out << (k ? "," : "") << b[k];
        out << "\neuler-poincare " << (ok ? "pass" : "fail") << "\n";
      }
      return ok ? kExitPass : kExitFail;
    }
    if (ph->parsed()) {
      const ComplexDocument doc = ph_src.load();
      const SimplicialComplex& g = doc.complex;
      std::mt19937_64 rng(ph_src.seed);
      const VertexFunction f = ph_values.empty() ? VertexFunction::random_ordering(g, rng)
                                                 : VertexFunction::from_sequence(g, parse_values(ph_values));
      std::int64_t sum = 0;
      std::map<Label, std::int64_t> indices;
      for (Label v : g.vertex_labels()) sum += indices[v] = ph_index(g, f, v);
      const bool ok = sum == euler_characteristic(g);
      if (ph_src.json) {
        json j;
        for (const auto& [v, i] : indices) {
          j["index"][std::to_string(v)] = i;
          j["value"][std::to_string(v)] = to_string(f(v));
        }
        j["sum"] = sum;
        j["euler_characteristic"] = euler_characteristic(g);
        j["poincare_hopf"] = ok ? "pass" : "fail";
        out << j.dump(2) << "\n";
      } else {
        for (const auto& [v, i] : indices) out << v << " f=" << to_string(f(v)) << " index " << i << "\n";
        out << "sum " << sum << "\neuler characteristic " << euler_characteristic(g)
            << "\npoincare-hopf " << (ok ? "pass" : "fail") << "\n";
      }
      return ok ? kExitPass : kExitFail;
    }
    if (generate->parsed()) {
      const ComplexDocument doc = gen_src.load();
      const std::string text = gen_src.json ? serialize_json(doc) : serialize_text(doc.complex);
      if (gen_output.empty()) {
        out << text;
      } else {
        std::ofstream file(gen_output, std::ios::binary);
        if (!file) throw InvalidInput("cannot write '" + gen_output + "'");
        file << text;
      }
      return kExitPass;
    }
  } catch (const TooLarge& e) {
    err << "too large: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace simplex_forge
