// Command-line front end: count spanning trees, compute chromatic
// polynomials, solve unit-resistor networks, tabulate graph families, and
// cross-check the three counting algorithms against each other.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spantree/spantree.hpp"

using json = nlohmann::ordered_json;
using namespace spantree;

namespace {

Multigraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return parse_graph(in);
}

std::string rational_string(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: " + text);
  }
}

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Enumeration: return "enumeration";
    case Algorithm::DeletionContraction: return "deletion-contraction";
    case Algorithm::MatrixTree: return "matrix-tree";
    default: return "auto";
  }
}

json input_summary(const Multigraph& g) {
  json in;
  in["vertices"] = g.vertex_count();
  in["edges"] = g.edge_count();
  if (g.is_connected())
    in["betti"] = g.first_betti();
  else
    in["betti"] = nullptr;
  return in;
}

std::string polynomial_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    BigInt c = p.coefficient(i);
    if (c == 0) continue;
    bool negative = c < 0;
    BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1 && mag != 1) out += "*";
    if (i == 1) out += "k";
    if (i >= 2) out += "k^" + std::to_string(i);
  }
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

int run_count(const std::string& file, const std::string& algorithm, bool as_json) {
  Timer timer;
  Multigraph g = load_graph(file);
  Algorithm requested = Algorithm::Auto;
  if (algorithm == "dc") requested = Algorithm::DeletionContraction;
  if (algorithm == "matrix") requested = Algorithm::MatrixTree;
  if (algorithm == "enum") requested = Algorithm::Enumeration;
  Algorithm effective =
      requested == Algorithm::Auto ? select_algorithm(g) : requested;
  BigInt count = tau(g, effective);

  if (as_json) {
    json doc;
    doc["command"] = "count";
    doc["input"] = input_summary(g);
    doc["algorithm"] = algorithm_name(effective);
    doc["result"] = {{"count", count.str()}};
    doc["elapsed_ms"] = timer.elapsed_ms();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << count << "\n";
  }
  return 0;
}

int run_chromatic(const std::string& file, const std::vector<long long>& evals,
                  bool as_json) {
  Timer timer;
  Multigraph g = load_graph(file);
  IntPolynomial p = chromatic_polynomial(g);

  if (as_json) {
    json coeffs = json::array();
    for (const BigInt& c : p.coefficients()) coeffs.push_back(c.str());
    json evaluations = json::array();
    for (long long k : evals)
      evaluations.push_back({{"k", k}, {"value", evaluate(p, k).str()}});
    json doc;
    doc["command"] = "chromatic";
    doc["input"] = input_summary(g);
    doc["result"] = {{"coefficients", coeffs}, {"evaluations", evaluations}};
    doc["elapsed_ms"] = timer.elapsed_ms();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "chi(k) = " << polynomial_string(p) << "\n";
    for (long long k : evals)
      std::cout << "chi(" << k << ") = " << evaluate(p, k) << "\n";
  }
  return 0;
}

int run_currents(const std::string& file, VertexId source, VertexId sink,
                 const std::string& total_text, bool as_json) {
  Timer timer;
  Multigraph g = load_graph(file);
  Rational total = parse_rational(total_text);
  CircuitSolution sol = edge_currents(g, source, sink, total);
  bool verified = verify_kirchhoff(g, sol);
  BigInt total_trees = tau(g);

  if (as_json) {
    json currents = json::array();
    for (const auto& [edge, current] : sol.currents)
      currents.push_back({{"from", edge.tail()},
                          {"to", edge.head()},
                          {"copy", edge.copy_index},
                          {"current", rational_string(current)}});
    json doc;
    doc["command"] = "currents";
    doc["input"] = input_summary(g);
    doc["result"] = {{"source", source},
                     {"sink", sink},
                     {"total", rational_string(total)},
                     {"tau", total_trees.str()},
                     {"currents", currents},
                     {"verified", verified}};
    doc["elapsed_ms"] = timer.elapsed_ms();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "tau = " << total_trees << "\n";
    for (const auto& [edge, current] : sol.currents)
      std::cout << edge.tail() << " -> " << edge.head() << " copy "
                << edge.copy_index << ": " << rational_string(current) << "\n";
    std::cout << "kirchhoff: " << (verified ? "ok" : "FAILED") << "\n";
  }
  return verified ? 0 : 1;
}

int run_family(const std::string& name, int n, int m, bool verify, bool as_json) {
  Timer timer;
  Family family;
  if (name == "fan") family = Family::Fan;
  else if (name == "ladder") family = Family::Ladder;
  else if (name == "wheel") family = Family::Wheel;
  else if (name == "complete") family = Family::Complete;
  else if (name == "bipartite") family = Family::CompleteBipartite;
  else throw std::invalid_argument("unknown family: " + name);
  if (family == Family::CompleteBipartite && m < 1)
    throw std::invalid_argument("bipartite needs --m at least 1");
  if (n < 1) throw std::invalid_argument("--n must be at least 1");

  auto generate = [&](int i) {
    switch (family) {
      case Family::Fan: return fan(i);
      case Family::Ladder: return ladder(i);
      case Family::Wheel: return wheel(i);
      case Family::Complete: return complete(i);
      default: return complete_bipartite(m, i);
    }
  };

  std::vector<BigInt> values;
  for (int i = 1; i <= n; ++i) values.push_back(tau(generate(i)));

  SequenceReport report;
  if (verify) report = verify_family(family, n, m);
  bool ok = !verify || (report.recurrence_ok && report.closed_form_ok);

  if (as_json) {
    json vals = json::array();
    for (const BigInt& v : values) vals.push_back(v.str());
    json doc;
    doc["command"] = "family";
    json input;
    input["family"] = name;
    input["n"] = n;
    if (family == Family::CompleteBipartite) input["m"] = m;
    doc["input"] = input;
    json result;
    result["values"] = vals;
    if (verify) {
      result["recurrence_ok"] = report.recurrence_ok;
      result["closed_form_ok"] = report.closed_form_ok;
    }
    doc["result"] = result;
    doc["elapsed_ms"] = timer.elapsed_ms();
    std::cout << doc.dump(2) << "\n";
  } else {
    for (int i = 1; i <= n; ++i)
      std::cout << name << " " << i << ": " << values[i - 1] << "\n";
    if (verify) {
      std::cout << "recurrence: " << (report.recurrence_ok ? "ok" : "FAILED") << "\n";
      std::cout << "closed form: " << (report.closed_form_ok ? "ok" : "FAILED") << "\n";
    }
  }
  return ok ? 0 : 1;
}

int run_agreement_suite(unsigned seed, int cases) {
  SelfcheckReport report = run_selfcheck(seed, cases);
  std::cout << "selfcheck seed=" << report.seed << " cases=" << report.cases.size()
            << " failures=" << report.failures() << "\n";
  for (std::size_t i = 0; i < report.cases.size(); ++i) {
    const SelfcheckCase& c = report.cases[i];
    if (c.agree()) continue;
    std::cout << "case " << i << " disagrees: enumeration=" << c.by_enumeration
              << " deletion-contraction=" << c.by_deletion_contraction
              << " matrix-tree=" << c.by_matrix_tree << "\n";
  }
  return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spanning tree counting, chromatic polynomials and "
               "unit-resistor networks over multigraphs"};
  app.require_subcommand(1);

  std::string file, algorithm = "auto", total = "1", family_name;
  std::vector<long long> evals;
  VertexId source = 0, sink = 0;
  int family_n = 0, family_m = 0;
  bool as_json = false, verify = false;
  long long seed = 42, cases = 200;

  CLI::App* count = app.add_subcommand("count", "Count spanning trees of a graph file");
  count->add_option("file", file, "graph file")->required();
  count->add_option("--algorithm", algorithm, "auto|dc|matrix|enum")
      ->check(CLI::IsMember({"auto", "dc", "matrix", "enum"}));
  count->add_flag("--json", as_json, "machine-readable output");

  CLI::App* chrom = app.add_subcommand("chromatic", "Chromatic polynomial of a graph file");
  chrom->add_option("file", file, "graph file")->required();
  chrom->add_option("--eval", evals, "evaluate at k (repeatable)")
      ->check(CLI::NonNegativeNumber);
  chrom->add_flag("--json", as_json, "machine-readable output");

  CLI::App* curr = app.add_subcommand("currents", "Branch currents of a unit-resistor network");
  curr->add_option("file", file, "graph file")->required();
  curr->add_option("--source", source, "source vertex")->required();
  curr->add_option("--sink", sink, "sink vertex")->required();
  curr->add_option("--total", total, "total current, P or P/Q (default 1)");
  curr->add_flag("--json", as_json, "machine-readable output");

  CLI::App* fam = app.add_subcommand("family", "Tree counts of a parametric graph family");
  fam->add_option("name", family_name, "fan|ladder|wheel|complete|bipartite")
      ->required()
      ->check(CLI::IsMember({"fan", "ladder", "wheel", "complete", "bipartite"}));
  fam->add_option("--n", family_n, "largest index")->required();
  fam->add_option("--m", family_m, "first part size (bipartite only)");
  fam->add_flag("--verify", verify, "check recurrence and closed form");
  fam->add_flag("--json", as_json, "machine-readable output");

  CLI::App* self = app.add_subcommand("selfcheck", "Cross-algorithm agreement on random graphs");
  self->add_option("--seed", seed, "random seed");
  self->add_option("--cases", cases, "number of graphs")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return run_count(file, algorithm, as_json);
    if (chrom->parsed()) return run_chromatic(file, evals, as_json);
    if (curr->parsed()) return run_currents(file, source, sink, total, as_json);
    if (fam->parsed())
      return run_family(family_name, family_n, family_m, verify, as_json);
    if (self->parsed())
      return run_agreement_suite(static_cast<unsigned>(seed), static_cast<int>(cases));
  } catch (const ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
