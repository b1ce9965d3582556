// Acceptance runner: one PASS/FAIL line per criterion, each with its own
// wall-clock budget. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "logres/blowup.hpp"
#include "logres/bounds.hpp"
#include "logres/cli.hpp"
#include "logres/log_connection.hpp"
#include "logres/log_jet.hpp"
#include "logres/residues.hpp"

using namespace logres;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_s;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (pass ? "PASS" : "FAIL") << " " << id << " " << name << " (" << secs << "s / " << budget_s << "s)";
  if (!in_time) line << " over budget";
  if (!out.detail.empty()) line << " " << out.detail;
  std::cout << line.str() << std::endl;
}

Outcome jcal_closed_form() {
  std::size_t checked = 0;
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned t = 1; t <= n; ++t) {
        const JetChart jc(n, n, k, t);
        for (const auto& I : nonempty_subsets(n)) {
          if (!jcal_generators(I, jc).equal) return {false, subset_string(I) + " in " + jc.id()};
          ++checked;
        }
      }
    }
  }
  return {true, std::to_string(checked) + " ideals"};
}

Outcome intersections() {
  std::size_t checked = 0;
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned t = 1; t <= n; ++t) {
        const JetChart jc(n, n, k, t);
        for (const auto& I : nonempty_subsets(n)) {
          for (const auto& J : nonempty_subsets(n)) {
            ++checked;
            const MonomialIdeal meet = dtilde_ideal(I, jc).sum(dtilde_ideal(J, jc));
            if (meet.is_unit()) continue;
            std::set<unsigned> IJ;
            std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::inserter(IJ, IJ.begin()));
            const std::string where = subset_string(I) + "," + subset_string(J) + " in " + jc.id();
            if (IJ.empty()) return {false, where + " meet with empty I∩J"};
            const MonomialIdeal target = dtilde_ideal(IJ, jc);
            for (const auto& g : target.generators()) {
              if (!meet.contains(g)) return {false, where};
            }
          }
        }
      }
    }
  }
  return {true, std::to_string(checked) + " pairs"};
}

Outcome principalization() {
  std::size_t certificates = 0;
  for (unsigned n = 2; n <= 3; ++n) {
    std::set<unsigned> all;
    for (unsigned i = 1; i <= n; ++i) all.insert(i);
    for (unsigned k = 0; k <= n; ++k) {
      for (unsigned t = 1; t <= n; ++t) {
        const JetChart jc(n, n, k, t);
        const auto s = build_dtilde_system(n, n, k, t);
        const auto minimal = resolve_system(s, ResolutionMode::minimal);
        for (unsigned i = 1; i <= n; ++i) {
          auto I = all;
          I.erase(i);
          certificates += verify_principalization(minimal, I, jc).size();
        }
        certificates += verify_principalization(resolve_system(s, ResolutionMode::canonical), all, jc).size();
      }
    }
  }
  return {true, std::to_string(certificates) + " leaf certificates"};
}

Outcome blowup_closure() {
  std::size_t checked = 0;
  for (unsigned m = 2; m <= 5; ++m) {
    const VariableList v = gen::names("x", m);
    for (unsigned r = 2; r <= 3; ++r) {
      for (unsigned p = 0; p <= r; ++p) {
        if (2 * r - p > m) continue;
        std::vector<std::size_t> perm(m);
        for (std::size_t i = 0; i < m; ++i) perm[i] = i;
        std::set<std::vector<std::string>> seen;
        do {
          const auto J = gen::simple_ideal(v, p, r, perm);
          if (!seen.insert(J.to_strings()).second) continue;
          for (const auto& center : decompose_simple_ideal(J)) {
            for (const auto& k : blow_up_center(Chart::root(v), center, "E1.1")) {
              const auto t = transform_ideal(k, J);
              if (!(t.strict.is_unit() || t.strict.is_simple())) return {false, J.to_string() + " in " + k.id};
              ++checked;
            }
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
  return {true, std::to_string(checked) + " charts"};
}

Outcome disjoint_strict_transforms() {
  gen::Rng rng(1001);
  int first = 0, second = 0;
  while (first < 500 || second < 500) {
    const unsigned m = static_cast<unsigned>(rng.uniform(3, 6));
    const VariableList v = gen::names("x", m);
    const std::size_t d = static_cast<std::size_t>(rng.uniform(2, m - 1));
    std::vector<SimpleVariety> V;
    for (int i = 0; i < 4; ++i) V.emplace_back(gen::subset(rng, v, d));
    if (std::set<SimpleVariety>(V.begin(), V.end()).size() < 4) continue;
    const SimpleVariety meet = V[1].intersect(V[2]);
    if (!V[3].contains(meet)) continue;
    const bool inside_center = V[0].contains(meet);
    int& count = inside_center ? second : first;
    if (count >= 500) continue;
    for (const auto& k : blow_up_center(Chart::root(v), V[0], "E1.1")) {
      const auto a = strict_transform_variety(k, V[1]);
      const auto b = strict_transform_variety(k, V[2]);
      const auto c = strict_transform_variety(k, V[3]);
      if (inside_center && a && b) return {false, "strict transforms still meet in " + k.id};
      if (a && b && !(c && c->contains(a->intersect(*b)))) return {false, "containment lost in " + k.id};
    }
    ++count;
  }
  return {true, "500 + 500 quadruples"};
}

Outcome functoriality() {
  gen::Rng rng(1002);
  int pairs = 0;
  std::size_t charts = 0;
  while (pairs < 100) {
    const auto s = gen::random_system(rng, static_cast<unsigned>(rng.uniform(4, 6)),
                                      static_cast<unsigned>(rng.uniform(1, 3)), 3);
    const auto z = gen::random_slice(rng, s);
    if (!z) continue;
    for (auto mode : {ResolutionMode::canonical, ResolutionMode::minimal}) {
      const auto rep = compare_functoriality(s, *z, mode);
      if (!rep.equal) return {false, rep.mismatches.empty() ? "mismatch" : rep.mismatches.front()};
      charts += rep.compared_charts;
    }
    ++pairs;
  }
  return {true, "100 pairs, " + std::to_string(charts) + " charts"};
}

Outcome divisibility() {
  gen::Rng rng(1003);
  for (int draw = 0; draw < 240; ++draw) {
    const unsigned n = static_cast<unsigned>(rng.uniform(1, 2));
    const unsigned delta = static_cast<unsigned>(rng.uniform(1, 4));
    const unsigned r = static_cast<unsigned>(rng.uniform(1, 3));
    const auto ctx = ConnectionContext::standard(n, 2, delta, r);
    const auto indices = enumerate_multiindices(n, delta);
    const MultiIndex& I = indices[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(indices.size()) - 1))];
    const Polynomial a = gen::polynomial(rng, ctx.base, 3, 5);
    const LogForm w = nabla_component(ctx, a, I);
    const LogForm full =
        LogForm::log_connection(ctx.frame(), a.embed(ctx.variables()) * ctx.tau_power(I, r + 1), ctx.t);
    if (!(w * ctx.tau_power(I, r) == full)) return {false, "quotient does not multiply back at draw " + std::to_string(draw)};
  }
  return {true, "240 draws"};
}

Outcome rank_bound() {
  const ConnectionEvaluator ev(ConnectionContext::standard(2, 1, 4, 1));
  RationalSampler rng(1004);
  std::size_t points = 0;
  for (const std::set<unsigned>& J : std::vector<std::set<unsigned>>{{}, {1}, {2}, {1, 2}}) {
    for (int i = 0; i < 50; ++i) {
      LogTangentVector xi;
      for (unsigned j = 1; j <= 2; ++j) xi.basepoint.push_back(J.count(j) ? Rational() : rng.draw_nonzero());
      do {
        xi.xi0 = rng.draw();
        xi.xi = {rng.draw(), rng.draw()};
      } while (xi.is_zero());
      const auto rep = connection_rank(ev, xi, J);
      if (!rep.satisfied) {
        return {false, "rank " + std::to_string(rep.rank) + " < " + rep.bound.get_str() + " on " + stratum_string(J)};
      }
      ++points;
    }
  }
  return {true, std::to_string(points) + " points"};
}

Outcome tautological() {
  gen::Rng shapes(1005);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = static_cast<unsigned>(shapes.uniform(1, 2));
    const unsigned delta = static_cast<unsigned>(shapes.uniform(1, 3));
    const unsigned r = static_cast<unsigned>(shapes.uniform(1, 2));
    const auto ctx = ConnectionContext::standard(n, 1, delta, r);
    RationalSampler rng(1005, static_cast<std::uint64_t>(trial));
    for (const auto& [z, num] : tautological_residual(ctx, random_coefficients(ctx, rng))) {
      if (!num.is_zero()) return {false, "nonzero " + z + " component at trial " + std::to_string(trial)};
    }
  }
  return {true, "50 sections"};
}

Outcome indeterminacy() {
  const auto rep = sample_indeterminacy(ConnectionContext::standard(2, 1, 4, 1), 1000, kDefaultSeed);
  return {rep.failures == 0 && rep.trials == 1000, std::to_string(rep.failures) + " events in 1000"};
}

Outcome bounds() {
  for (unsigned n = 1; n <= 20; ++n) {
    if (!corollary_degree(n, n).chain_holds) return {false, "chain fails at n = " + std::to_string(n)};
  }
  if (corollary_degree(2, 2).m_threshold != 4096) return {false, "n = 2 threshold"};
  gen::Rng rng(1006);
  for (int trial = 0; trial < 100; ++trial) {
    const BigInt den = rng.uniform(1, 6);
    std::vector<BigInt> delta;
    for (int i = 0; i < 3; ++i) delta.push_back(den * rng.uniform(1, 9));
    const Rational alpha(BigInt(rng.uniform(2 * den.get_si(), 40 * den.get_si())), den);
    const auto s = split_alpha(alpha, delta);
    if (!s.identity_holds) return {false, "identity fails for alpha = " + alpha.to_string()};
  }
  return {true, "n <= 20, 100 alphas"};
}

Outcome lower_bound() {
  gen::Rng rng(1007);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t c = static_cast<std::size_t>(trial % 3 + 1);
    const auto rep = construct_global_log_forms(gen::random_arrangement(rng, c));
    if (rep.forms.size() != c - 1 || !rep.all_regular || !rep.independent) {
      return {false, "arrangement " + std::to_string(trial)};
    }
  }
  return {true, "20 arrangements"};
}

std::string run_in_process(const std::vector<std::string>& args, const char* threads) {
  setenv("LOGRES_THREADS", threads, 1);
  std::ostringstream out, err;
  if (run_command(args, out, err) != 0) throw std::runtime_error("resolve failed: " + err.str());
  unsetenv("LOGRES_THREADS");
  return out.str();
}

std::string run_binary(const std::string& cmdline) {
  FILE* pipe = popen(cmdline.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmdline);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  if (pclose(pipe) != 0) throw std::runtime_error("nonzero exit: " + cmdline);
  return out;
}

Outcome determinism() {
  std::size_t runs = 0;
  for (const std::string mode : {"canonical", "minimal"}) {
    const std::vector<std::string> args{"resolve", "--n", "3", "--c", "3", "--mode", mode, "--seed", "7"};
    const std::string ref = run_in_process(args, "1");
    for (const char* threads : {"1", "2", "4"}) {
      if (run_in_process(args, threads) != ref) return {false, mode + " differs in process"};
      ++runs;
    }
#ifdef LOGRES_BIN
    const std::string cmd = std::string(LOGRES_BIN) + " resolve --n 3 --c 3 --mode " + mode + " --seed 7";
    for (const char* threads : {"1", "3"}) {
      if (run_binary("LOGRES_THREADS=" + std::string(threads) + " " + cmd) != ref) {
        return {false, mode + " differs from the binary"};
      }
      ++runs;
    }
#endif
  }
  return {true, std::to_string(runs) + " identical runs"};
}

}  // namespace

int main() {
  criterion(1, "lift ideal closed form, n in {2,3,4}", 10, jcal_closed_form);
  criterion(2, "D~ intersection relations, n <= 4", 5, intersections);
  criterion(3, "principalization, n = c in {2,3}", 60, principalization);
  criterion(4, "blow-up closure of simple ideals, m <= 5", 60, blowup_closure);
  criterion(5, "disjoint strict transforms, 500 per case", 30, disjoint_strict_transforms);
  criterion(6, "functoriality, 100 slices", 60, functoriality);
  criterion(7, "exact division of nabla components", 60, divisibility);
  criterion(8, "rank bound, 50 points per stratum", 120, rank_bound);
  criterion(9, "tautological identity, 50 sections", 60, tautological);
  criterion(10, "no simultaneous vanishing in 1000 samples", 60, indeterminacy);
  criterion(11, "degree bounds", 5, bounds);
  criterion(12, "global log forms on P^2", 30, lower_bound);
  criterion(13, "resolve output is byte-identical", 60, determinism);
  return failures;
}
