#include "logres/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "logres/blowup.hpp"
#include "logres/bounds.hpp"
#include "logres/errors.hpp"
#include "logres/log_connection.hpp"
#include "logres/log_jet.hpp"
#include "logres/residues.hpp"
#include "logres/resolution.hpp"

namespace logres {

namespace {

using nlohmann::json;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json report;
  bool verified = true;
};

std::vector<BigInt> parse_list(const std::string& text, const char* what) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.emplace_back(item);
    } catch (const std::invalid_argument&) {
      throw Usage(std::string("--") + what + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

std::set<unsigned> parse_set(const std::string& text) {
  std::set<unsigned> out;
  for (const auto& v : parse_list(text, "stratum")) {
    if (v < 0) throw Usage("--stratum entries must be nonnegative");
    out.insert(static_cast<unsigned>(v.get_ui()));
  }
  return out;
}

// key: value lines, nested keys joined by '.'
void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string bounds_table(const json& r) {
  std::ostringstream os;
  const auto& e = r["effective"];
  os << "i  b_i  m_i\n";
  for (std::size_t i = 0; i < e["b"].size(); ++i) {
    os << i + 1 << "  " << e["b"][i].get<std::string>() << "  " << e["m"][i].get<std::string>() << "\n";
  }
  os << "r_min: " << e["r_min"].get<std::string>() << "\n";
  os << "applicable: " << (e["applicable"].get<bool>() ? "yes" : "no") << "\n";
  const auto& c = r["corollary"];
  os << "m_threshold: " << c["m_threshold"].get<std::string>() << "\n";
  os << "chain: " << c["chain_lhs"].get<std::string>() << " <= " << c["m_threshold"].get<std::string>() << " "
     << (c["chain_holds"].get<bool>() ? "holds" : "fails") << "\n";
  if (!c["alpha_min"].is_null()) os << "alpha_min: " << c["alpha_min"].get<std::string>() << "\n";
  return os.str();
}

Outcome do_resolve(unsigned n, unsigned c, int k_opt, int t_opt, const std::string& mode_name) {
  if (c > n) throw Usage("c = " + std::to_string(c) + " exceeds n = " + std::to_string(n));
  const unsigned k = k_opt < 0 ? c : static_cast<unsigned>(k_opt);
  const ResolutionMode mode = mode_name == "minimal" ? ResolutionMode::minimal : ResolutionMode::canonical;

  // the ideals the mode is meant to principalize
  std::vector<std::set<unsigned>> targets;
  std::set<unsigned> all;
  for (unsigned i = 1; i <= c; ++i) all.insert(i);
  if (mode == ResolutionMode::canonical) {
    targets.push_back(all);
  } else if (c >= 2) {
    for (unsigned i = 1; i <= c; ++i) {
      auto I = all;
      I.erase(i);
      targets.push_back(I);
    }
  }

  Outcome o;
  o.report = {{"n", n}, {"c", c}, {"k", k}, {"mode", to_string(mode)}};
  json charts = json::array();
  for (unsigned t = 1; t <= n; ++t) {
    if (t_opt > 0 && static_cast<unsigned>(t_opt) != t) continue;
    const JetChart jc(n, c, k, t);
    const CompatibleSystem s = build_dtilde_system(n, c, k, t);
    const ResolutionResult res = resolve_system(s, mode);
    json certs = json::array();
    for (const auto& I : targets) {
      json cert{{"ideal", subset_string(I)}, {"jcal", jcal_generators(I, jc).generators.to_strings()}};
      try {
        cert["multiplicities"] = verify_principalization(res, I, jc);
        cert["principal"] = true;
      } catch (const NotResolved& e) {
        cert["principal"] = false;
        cert["failure"] = e.what();
        o.verified = false;
      }
      certs.push_back(cert);
    }
    json r = res.to_json();
    r.erase("schema_version");
    charts.push_back({{"fiber_chart", t}, {"jet_chart", jc.id()}, {"system", system_to_json(s)},
                      {"resolution", r}, {"certificates", certs}});
  }
  o.report["charts"] = charts;
  return o;
}

Outcome do_verify_jet(unsigned n, unsigned c, int k_opt) {
  if (c > n) throw Usage("c = " + std::to_string(c) + " exceeds n = " + std::to_string(n));
  const unsigned k = k_opt < 0 ? c : static_cast<unsigned>(k_opt);
  Outcome o;
  o.report = {{"n", n}, {"c", c}, {"k", k}};
  json checks = json::array();
  for (unsigned t = 1; t <= n; ++t) {
    const JetChart jc(n, c, k, t);
    for (const auto& I : nonempty_subsets(c)) {
      const JcalCertificate cert = jcal_generators(I, jc);
      const bool gamma = gamma_generated_ideal(I, jc) == cert.generators;
      json entry = cert.to_json();
      entry["fiber_chart"] = t;
      entry["ideal"] = subset_string(I);
      entry["gamma_generates"] = gamma;
      o.verified = o.verified && cert.equal && gamma;
      checks.push_back(entry);
    }
  }
  o.report["checks"] = checks;
  return o;
}

LogTangentVector random_vector(const ConnectionContext& ctx, const std::set<unsigned>& J, RationalSampler& rng) {
  LogTangentVector xi;
  for (unsigned j = 1; j <= ctx.n; ++j) xi.basepoint.push_back(J.count(j) ? Rational() : rng.draw_nonzero());
  do {
    xi.xi0 = rng.draw();
    xi.xi.clear();
    for (unsigned j = 0; j < ctx.n; ++j) xi.xi.push_back(rng.draw());
  } while (xi.is_zero());
  return xi;
}

Outcome do_rank(unsigned n, unsigned delta, unsigned eps, unsigned r, const std::string& stratum, unsigned samples,
                std::uint64_t seed, const std::string& matrix_out) {
  const std::set<unsigned> J = parse_set(stratum);
  for (unsigned j : J) {
    if (j == 0 || j > n) throw Usage("stratum entries must lie in 1..n (tau_0 = 1 on the chart)");
  }
  const ConnectionEvaluator ev(ConnectionContext::standard(n, eps, delta, r));
  Outcome o;
  o.report = {{"n", n}, {"delta", delta}, {"epsilon", eps}, {"r", r}, {"stratum", stratum_string(J)},
              {"seed", seed}};
  json rows = json::array();
  for (unsigned s = 0; s < samples; ++s) {
    RationalSampler rng(seed, std::uint64_t{s});
    const LogTangentVector xi = random_vector(ev.context(), J, rng);
    const RankReport rep = connection_rank(ev, xi, J);
    if (s == 0 && !matrix_out.empty()) {
      std::ofstream f(matrix_out);
      if (!f) throw Usage("cannot write " + matrix_out);
      f << rep.matrix.to_text();
    }
    o.verified = o.verified && rep.satisfied && rep.block_diagonal;
    rows.push_back(rep.to_json());
  }
  o.report["samples"] = rows;
  return o;
}

Outcome do_forms(unsigned n, const std::vector<std::string>& equations) {
  if (equations.empty()) throw Usage("forms needs at least one --eq");
  const LogFormsReport rep = construct_global_log_forms(DivisorArrangement::from_strings(n, equations));
  Outcome o;
  o.report = rep.to_json();
  o.report["n"] = n;
  o.report["equations"] = equations;
  o.verified = rep.all_regular && rep.independent && rep.forms.size() + 1 == equations.size();
  return o;
}

Outcome do_bounds(unsigned n, const std::string& delta, const std::string& eps, int c_opt) {
  BoundInput in{n, parse_list(delta, "delta"), parse_list(eps, "eps")};
  const unsigned c = c_opt < 0 ? n : static_cast<unsigned>(c_opt);
  Outcome o;
  const auto eb = effective_bounds(in);
  const auto cd = corollary_degree(n, c, in.delta);
  o.report = {{"n", n}, {"c", c}, {"effective", eb.to_json()}, {"corollary", cd.to_json()}};
  o.verified = cd.chain_holds;
  return o;
}

Outcome do_sample(unsigned n, unsigned delta, unsigned eps, unsigned r, std::size_t trials, std::uint64_t seed) {
  const SamplingReport rep = sample_indeterminacy(ConnectionContext::standard(n, eps, delta, r), trials, seed);
  Outcome o;
  o.report = rep.to_json();
  o.report["n"] = n;
  o.report["delta"] = delta;
  o.report["epsilon"] = eps;
  o.report["r"] = r;
  o.report["seed"] = seed;
  o.verified = rep.failures == 0;
  return o;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"logres: resolution and log-connection checks", "logres"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output,-o", output, "write the report here instead of stdout");
  };

  unsigned n = 2, c = 2, delta = 4, eps = 1, r = 1, samples = 1;
  int k = -1, t = -1, bound_c = -1;
  std::size_t trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string mode = "canonical", stratum, delta_list, eps_list, matrix_out;
  std::vector<std::string> equations;

  auto* resolve = app.add_subcommand("resolve", "resolve the D~ system of a jet chart");
  resolve->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  resolve->add_option("--c", c)->check(CLI::PositiveNumber);
  resolve->add_option("--k", k, "components through the point (default c)")->check(CLI::NonNegativeNumber);
  resolve->add_option("--t", t, "single fiber chart (default all)")->check(CLI::PositiveNumber);
  resolve->add_option("--mode", mode)->check(CLI::IsMember({"canonical", "minimal"}));
  resolve->add_option("--seed", seed, "accepted for uniformity; the run is deterministic");
  add_common(resolve);

  auto* verify = app.add_subcommand("verify-jet", "check the J_I closed form and the gamma pullbacks");
  verify->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  verify->add_option("--c", c)->check(CLI::PositiveNumber);
  verify->add_option("--k", k)->check(CLI::NonNegativeNumber);
  add_common(verify);

  auto* rank = app.add_subcommand("rank", "rank of the restricted evaluation map at random points");
  rank->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  rank->add_option("--delta", delta)->check(CLI::PositiveNumber);
  rank->add_option("--eps", eps)->check(CLI::PositiveNumber);
  rank->add_option("--r", r)->check(CLI::PositiveNumber);
  rank->add_option("--stratum", stratum, "comma separated j with tau_j = 0");
  rank->add_option("--samples", samples)->check(CLI::PositiveNumber);
  rank->add_option("--seed", seed);
  rank->add_option("--matrix-out", matrix_out, "dense text dump of the first matrix");
  add_common(rank);

  auto* forms = app.add_subcommand("forms", "global log forms of a divisor arrangement in P^n");
  forms->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  forms->add_option("--eq", equations, "homogeneous equation in x0..xn, repeatable")->required();
  add_common(forms);

  auto* bounds = app.add_subcommand("bounds", "effective degree bounds");
  bounds->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--delta", delta_list)->required();
  bounds->add_option("--eps", eps_list)->required();
  bounds->add_option("--c", bound_c, "number of hypersurfaces (default n)")->check(CLI::PositiveNumber);
  add_common(bounds);

  auto* sample = app.add_subcommand("sample", "random search for simultaneous vanishing");
  sample->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  sample->add_option("--delta", delta)->check(CLI::PositiveNumber);
  sample->add_option("--eps", eps)->check(CLI::PositiveNumber);
  sample->add_option("--r", r)->check(CLI::PositiveNumber);
  sample->add_option("--trials", trials);
  sample->add_option("--seed", seed);
  add_common(sample);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }

  std::string verb;
  Outcome o;
  try {
    if (resolve->parsed()) {
      verb = "resolve";
      o = do_resolve(n, c, k, t, mode);
    } else if (verify->parsed()) {
      verb = "verify-jet";
      o = do_verify_jet(n, c, k);
    } else if (rank->parsed()) {
      verb = "rank";
      o = do_rank(n, delta, eps, r, stratum, samples, seed, matrix_out);
    } else if (forms->parsed()) {
      verb = "forms";
      o = do_forms(n, equations);
    } else if (bounds->parsed()) {
      verb = "bounds";
      o = do_bounds(n, delta_list, eps_list, bound_c);
    } else {
      verb = "sample";
      o = do_sample(n, delta, eps, r, trials, seed);
    }
  } catch (const Usage& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const OutOfRange& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // a library check threw: report it as a failed verification
    err << "check failed: " << e.what() << "\n";
    err << "reproduce with: logres";
    for (const auto& a : args) err << " " << a;
    err << "\n";
    return 1;
  }

  json report{{"schema_version", kSchemaVersion}, {"verb", verb}, {"verified", o.verified}};
  report.update(o.report);
  std::string text;
  if (format == "json") {
    text = report.dump(2) + "\n";
  } else if (verb == "bounds") {
    text = bounds_table(report);
  } else {
    std::ostringstream os;
    flatten(report, "", os);
    text = os.str();
  }
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      err << "usage: cannot write " << output << "\n";
      return 2;
    }
    f << text;
  }
  if (!o.verified) {
    err << "check failed: verb " << verb << " did not verify; reproduce with: logres";
    for (const auto& a : args) err << " " << a;
    err << "\n";
    return 1;
  }
  return 0;
}

}  // namespace logres
