#include "blbetti/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <optional>
#include <sstream>

#include "blbetti/alhc.hpp"
#include "blbetti/betti.hpp"
#include "blbetti/boij_soderberg.hpp"
#include "blbetti/booth_lueker.hpp"
#include "blbetti/errors.hpp"
#include "blbetti/graph_io.hpp"
#include "blbetti/invariant.hpp"
#include "blbetti/verification.hpp"

namespace blbetti::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kPretty, kJson, kTsv };

// Thrown when the two methods of a `--method both` run disagree.
class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "pretty";
  bool multigraph = false;
  bool complement = false;
  std::string method = "closed";
  std::string file;
  std::string second_file;
  std::size_t max_n = 5;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::kJson;
  if (s == "tsv") return Format::kTsv;
  return Format::kPretty;
}

std::string fraction(const ExactRational& r) {
  return r.numerator().get_str() + "/" + r.denominator().get_str();
}

std::string tuple(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
  return s + ")";
}

std::string csv(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
  return s;
}

Json json_ints(const std::vector<BigInt>& v) {
  Json arr = Json::array();
  for (const BigInt& x : v) arr.push_back(x.get_str());
  return arr;
}

Json json_coeffs(const CoefficientVector& c) {
  Json arr = Json::array();
  for (std::size_t j = 1; j <= c.size(); ++j) {
    arr.push_back(Json{{"j", std::to_string(j)},
                       {"num", c.c(j).numerator().get_str()},
                       {"den", c.c(j).denominator().get_str()}});
  }
  return arr;
}

std::string nonzero_coeffs(const CoefficientVector& c) {
  std::string s = "{";
  bool first = true;
  for (std::size_t j = 1; j <= c.size(); ++j) {
    if (c.c(j).is_zero()) continue;
    s += (first ? "" : ", ") + std::string("c_") + std::to_string(j) + "=" + fraction(c.c(j));
    first = false;
  }
  return s + "}";
}

// Shared state of one graph-consuming subcommand.
class GraphJob {
 public:
  GraphJob(const Options& opts, std::ostream& err)
      : opts_(opts), err_(err),
        graph_(read_graph_file(opts.file, ParseOptions{opts.multigraph})) {}

  std::size_t n() const { return graph_.vertex_count(); }
  std::size_t m() const { return graph_.edge_count(); }
  const MultiGraph& graph() const { return graph_; }

  Graph simple(const char* what) const {
    if (graph_.has_parallel_edges()) {
      throw ApplicabilityError(std::string(what) +
                               " for BL(G) is stated for simple graphs; this input has parallel edges");
    }
    return Graph(graph_);
  }

  BettiVector closed_betti() const {
    if (opts_.complement) return betti_blcomp_closed(n(), m());
    if (n() == 0) throw ApplicabilityError("the degree-vector formula needs at least one vertex");
    const Graph g = simple("the degree-vector formula");
    return betti_bl_closed(degree_vector(g), m());
  }

  BettiVector oracle_betti() const {
    return opts_.complement ? betti_oracle(bl_complement(graph_)) : betti_oracle(bl(graph_).graph());
  }

  // Betti vector feeding the matrix methods: closed form where one exists.
  BettiVector matrix_input() const {
    if (opts_.complement || !graph_.has_parallel_edges()) return closed_betti();
    return oracle_betti();
  }

  CoefficientVector closed_coeffs() const {
    if (opts_.complement) return coeffs_blcomp_closed(n(), m());
    const Graph g = simple("the Boij-Soderberg closed form");
    if (m() + 1 == n()) {
      err_ << "warning: m = n-1 is below the closed form's stated hypothesis m >= n; "
              "the formula still applies at this size\n";
    }
    return coeffs_bl_closed(degree_vector(g), m(), HypothesisPolicy::kRelaxed);
  }

  Alhc closed_alhc() const {
    if (opts_.complement) return alhc_blcomp_closed(n(), m());
    const Graph g = simple("the anti-lecture-hall closed form");
    return alhc_bl_closed(degree_vector(g), m());
  }

 private:
  const Options& opts_;
  std::ostream& err_;
  MultiGraph graph_;
};

// Runs one or both methods, returning the result and whether they agreed
// (nullopt when only one method ran).
template <typename T>
std::pair<T, std::optional<bool>> run_methods(const std::string& method, const std::function<T()>& closed,
                                              const std::function<T()>& other) {
  if (method == "closed") return {closed(), std::nullopt};
  if (method != "both") return {other(), std::nullopt};
  T a = closed();
  T b = other();
  const bool match = a == b;
  return {std::move(a), match};
}

void emit_check(std::ostream& out, Format format, Json& doc, std::optional<bool> match) {
  if (!match) return;
  const char* word = *match ? "MATCH" : "MISMATCH";
  if (format == Format::kJson) {
    doc["check"] = word;
  } else if (format == Format::kTsv) {
    out << "check\t" << word << '\n';
  } else {
    out << word << '\n';
  }
}

void finish_json(std::ostream& out, Format format, const Json& doc) {
  if (format == Format::kJson) out << doc.dump(2) << '\n';
}

int cmd_bl(const Options& opts, std::ostream& out, std::ostream& err) {
  GraphJob job(opts, err);
  const Graph result = opts.complement ? bl_complement(job.graph()) : bl(job.graph()).graph();
  if (parse_format(opts.format) == Format::kJson) {
    Json edges = Json::array();
    for (const Edge& e : result.edges()) edges.push_back(Json::array({std::to_string(e.u), std::to_string(e.v)}));
    Json doc{{"n", std::to_string(result.vertex_count())},
             {"m", std::to_string(result.edge_count())},
             {"edges", std::move(edges)}};
    out << doc.dump(2) << '\n';
  } else {
    write_graph(out, result);
  }
  return kOk;
}

int cmd_betti(const Options& opts, std::ostream& out, std::ostream& err) {
  GraphJob job(opts, err);
  const Format format = parse_format(opts.format);
  std::optional<BettiVector> closed;
  std::optional<BettiVector> oracle;
  if (opts.method != "oracle") closed = job.closed_betti();
  if (opts.method != "closed") oracle = job.oracle_betti();
  const BettiVector& primary = closed ? *closed : *oracle;

  Json doc{{"n", std::to_string(job.n())}, {"m", std::to_string(job.m())}, {"omega", json_ints(primary.entries())}};
  std::optional<bool> match;
  if (closed && oracle) match = (*closed == *oracle);
  if (format == Format::kPretty) {
    if (match) {
      out << "omega[closed] = " << to_string(*closed) << '\n';
      out << "omega[oracle] = " << to_string(*oracle) << '\n';
    } else {
      out << "omega = " << to_string(primary) << '\n';
    }
  } else if (format == Format::kTsv) {
    out << "i\tbeta" << (match ? "\toracle" : "") << '\n';
    for (std::size_t i = 1; i <= primary.size(); ++i) {
      out << i << '\t' << primary.beta(i).get_str();
      if (match) out << '\t' << (i <= oracle->size() ? oracle->beta(i).get_str() : "");
      out << '\n';
    }
  }
  if (match && format == Format::kJson) doc["oracle_omega"] = json_ints(oracle->entries());
  emit_check(out, format, doc, match);
  finish_json(out, format, doc);
  if (match && !*match) throw MismatchError("closed form and oracle disagree");
  return kOk;
}

int cmd_bs(const Options& opts, std::ostream& out, std::ostream& err) {
  GraphJob job(opts, err);
  const Format format = parse_format(opts.format);
  auto [coeffs, match] = run_methods<CoefficientVector>(
      opts.method, [&] { return job.closed_coeffs(); }, [&] { return coeffs_from_betti(job.matrix_input()); });
  Json doc{{"n", std::to_string(job.n())}, {"m", std::to_string(job.m())}, {"coeffs", json_coeffs(coeffs)}};
  if (format == Format::kPretty) {
    for (std::size_t j = 1; j <= coeffs.size(); ++j) {
      if (!coeffs.c(j).is_zero()) out << "c_" << j << " = " << fraction(coeffs.c(j)) << '\n';
    }
  } else if (format == Format::kTsv) {
    out << "j\tnum\tden\n";
    for (std::size_t j = 1; j <= coeffs.size(); ++j) {
      out << j << '\t' << coeffs.c(j).numerator().get_str() << '\t' << coeffs.c(j).denominator().get_str()
          << '\n';
    }
  }
  emit_check(out, format, doc, match);
  finish_json(out, format, doc);
  if (match && !*match) throw MismatchError("closed form and matrix method disagree");
  return kOk;
}

int cmd_alhc(const Options& opts, std::ostream& out, std::ostream& err) {
  GraphJob job(opts, err);
  const Format format = parse_format(opts.format);
  auto [lambda, match] = run_methods<Alhc>(
      opts.method, [&] { return job.closed_alhc(); }, [&] { return alhc_from_betti(job.matrix_input()); });
  Json doc{{"n", std::to_string(job.n())}, {"m", std::to_string(job.m())}, {"lambda", json_ints(lambda.parts())}};
  if (format == Format::kPretty) {
    out << "lambda = " << to_string(lambda) << '\n';
  } else if (format == Format::kTsv) {
    out << "j\tlambda\n";
    for (std::size_t j = 1; j <= lambda.size(); ++j) out << j << '\t' << lambda.lambda(j).get_str() << '\n';
  }
  emit_check(out, format, doc, match);
  finish_json(out, format, doc);
  if (match && !*match) throw MismatchError("closed form and matrix method disagree");
  return kOk;
}

Json signature_json(const Signature& s) {
  return Json{{"n", std::to_string(s.n)},
              {"m", std::to_string(s.m)},
              {"omega", json_ints(s.omega.entries())},
              {"coeffs", json_coeffs(s.coeffs)},
              {"lambda", json_ints(s.lambda.parts())}};
}

int cmd_compare(const Options& opts, std::ostream& out, std::ostream& err) {
  Options first = opts;
  Options second = opts;
  second.file = opts.second_file;
  const Graph g = GraphJob(first, err).simple("compare");
  const Graph h = GraphJob(second, err).simple("compare");
  if (g.vertex_count() == 0 || h.vertex_count() == 0) {
    throw ApplicabilityError("compare: graphs need at least one vertex");
  }
  const Verdict verdict = compare(g, h);
  const Signature sg = signature(g);
  const Signature sh = signature(h);
  const Format format = parse_format(opts.format);
  if (format == Format::kJson) {
    Json doc{{"verdict", std::string(to_string(verdict))}, {"first", signature_json(sg)}, {"second", signature_json(sh)}};
    out << doc.dump(2) << '\n';
  } else if (format == Format::kTsv) {
    out << "verdict\t" << to_string(verdict) << '\n';
    out << "graph\tn\tm\tomega\tcoeffs\tlambda\n";
    int index = 1;
    for (const Signature* s : {&sg, &sh}) {
      std::string coeffs;
      for (std::size_t j = 1; j <= s->coeffs.size(); ++j) coeffs += (j > 1 ? "," : "") + fraction(s->coeffs.c(j));
      out << index++ << '\t' << s->n << '\t' << s->m << '\t' << csv(s->omega.entries()) << '\t' << coeffs << '\t'
          << csv(s->lambda.parts()) << '\n';
    }
  } else {
    out << to_string(verdict) << '\n';
    const char* labels[] = {"first: ", "second:"};
    int index = 0;
    for (const Signature* s : {&sg, &sh}) {
      out << labels[index++] << " n=" << s->n << " m=" << s->m << " omega=" << tuple(s->omega.entries())
          << " coeffs=" << nonzero_coeffs(s->coeffs) << " lambda=" << tuple(s->lambda.parts()) << '\n';
    }
  }
  return kOk;
}

int cmd_verify(const Options& opts, std::ostream& out) {
  const VerificationReport report = run_verification(opts.max_n);
  const Format format = parse_format(opts.format);
  std::size_t passed = 0;
  for (const CheckResult& c : report.checks) passed += c.failures == 0 ? 1 : 0;
  if (format == Format::kJson) {
    Json checks = Json::array();
    for (const CheckResult& c : report.checks) {
      checks.push_back(Json{{"name", c.name},
                            {"cases", std::to_string(c.cases)},
                            {"failures", std::to_string(c.failures)},
                            {"first_failure", c.first_failure}});
    }
    Json doc{{"max_n", std::to_string(report.max_n)},
             {"checks", std::move(checks)},
             {"status", report.passed() ? "PASS" : "FAIL"}};
    out << doc.dump(2) << '\n';
  } else if (format == Format::kTsv) {
    out << "check\tcases\tfailures\tstatus\n";
    for (const CheckResult& c : report.checks) {
      out << c.name << '\t' << c.cases << '\t' << c.failures << '\t' << (c.failures ? "FAIL" : "PASS") << '\n';
    }
  } else {
    for (const CheckResult& c : report.checks) {
      out << (c.failures ? "FAIL " : "PASS ") << c.name << " (" << c.cases << " cases";
      if (c.failures) out << ", " << c.failures << " failures, first: " << c.first_failure;
      out << ")\n";
    }
    out << "verify: " << passed << "/" << report.checks.size() << " checks passed over all graphs on <= "
        << report.max_n << " vertices\n";
  }
  return report.passed() ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Betti numbers, Boij-Soderberg coefficients and anti-lecture-hall compositions of "
               "Booth-Lueker edge ideals",
               args.empty() ? "blbetti" : args.front()};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"pretty", "json", "tsv"}))
      ->capture_default_str();
  app.add_flag("--multigraph", opts.multigraph, "Accept parallel edges in graph files");

  const auto add_graph_command = [&](const char* name, const char* help, std::vector<std::string> methods) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", opts.file, "Graph file ('-' for stdin)")->required();
    sub->add_flag("--complement", opts.complement, "Use the complement of the Booth-Lueker graph");
    if (!methods.empty()) {
      sub->add_option("--method", opts.method, "Computation route")
          ->check(CLI::IsMember(std::move(methods)))
          ->capture_default_str();
    }
    return sub;
  };
  CLI::App* bl_cmd = add_graph_command("bl", "Print the Booth-Lueker graph as a graph file", {});
  CLI::App* betti_cmd = add_graph_command("betti", "Betti vector", {"closed", "oracle", "both"});
  CLI::App* bs_cmd = add_graph_command("bs", "Boij-Soderberg coefficients", {"closed", "matrix", "both"});
  CLI::App* alhc_cmd = add_graph_command("alhc", "Anti-lecture-hall composition", {"closed", "matrix", "both"});

  CLI::App* compare_cmd = app.add_subcommand("compare", "Compare two graphs by their BL Betti signatures");
  compare_cmd->add_option("FILE1", opts.file, "First graph file")->required();
  compare_cmd->add_option("FILE2", opts.second_file, "Second graph file")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check closed forms against the oracle on small graphs");
  verify_cmd->add_option("--max-n", opts.max_n, "Largest vertex count to enumerate")
      ->check(CLI::Range(std::size_t{1}, kMaxVerifyVertices))
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (bl_cmd->parsed()) return cmd_bl(opts, out, err);
    if (betti_cmd->parsed()) return cmd_betti(opts, out, err);
    if (bs_cmd->parsed()) return cmd_bs(opts, out, err);
    if (alhc_cmd->parsed()) return cmd_alhc(opts, out, err);
    if (compare_cmd->parsed()) return cmd_compare(opts, out, err);
    if (verify_cmd->parsed()) return cmd_verify(opts, out);
  } catch (const GraphParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ApplicabilityError& e) {
    err << "not applicable: " << e.what() << '\n';
    return kApplicability;
  } catch (const SizeLimitError& e) {
    err << "not applicable: " << e.what() << '\n';
    return kApplicability;
  } catch (const MismatchError& e) {
    err << "verification mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace blbetti::cli
