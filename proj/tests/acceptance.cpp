// Acceptance suite: one line per criterion, non-zero exit if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "morrey/cli.hpp"
#include "morrey/constants.hpp"
#include "morrey/norm.hpp"
#include "morrey/search.hpp"
#include "morrey/witness.hpp"
#include "test_support.hpp"

using namespace morrey;
using morrey::testing::close_rel;
using morrey::testing::random_sequence;
using morrey::testing::random_space;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const std::vector<std::pair<double, double>> kExponents = {{1, 2}, {1, 4}, {1.5, 2}, {2, 3}, {2, 8}, {3, 4}};
const std::vector<double> kSValues = {1, 1.5, 2, 3};

std::string describe(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

std::string seconds(double v) {
  std::ostringstream out;
  out.precision(3);
  out << v << " s";
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  out = o.str();
  return code;
}

Outcome theorem_reproduction() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [p, q] : kExponents) {
    for (int d = 1; d <= 3; ++d) {
      std::ostringstream space;
      space << p << ',' << q << ',' << d;
      std::string out;
      const int code = run_cli({"table", "--space", space.str(), "--s-list", "1,1.5,2,3", "--format", "json"}, out);
      if (code != 0) {
        o.fail("table exit " + std::to_string(code) + " for " + space.str());
        continue;
      }
      const auto doc = nlohmann::json::parse(out);
      std::size_t kinds_seen = 0;
      for (Constant c : kAllConstants) {
        bool seen = false;
        for (const auto& row : doc["results"]) {
          if (row["constant"] != constant_name(c)) continue;
          seen = true;
          const double w = row["witness_quotient"].get<double>();
          if (row["reported"].get<double>() != 2.0 || std::abs(w - 2.0) > 1e-9 || !row["pass"].get<bool>()) {
            o.fail(space.str() + " " + std::string(constant_name(c)) + " quotient " + describe(w));
          }
        }
        kinds_seen += seen;
      }
      if (kinds_seen != 8) o.fail(space.str() + ": missing constants");
      if (doc["results"].size() != 4 * kSValues.size() + 4) o.fail(space.str() + ": wrong row count");
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 10.0) o.fail("took " + seconds(secs) + " (limit 10 s)");
  if (o.pass) o.detail = "18 spaces x 8 constants, " + seconds(secs);
  return o;
}

Outcome witness_norms() {
  Outcome o;
  double worst = 0.0;
  for (const auto& [p, q] : kExponents) {
    for (std::size_t d = 1; d <= 3; ++d) {
      const SpaceParams sp(p, q, d);
      const auto w = build_witness(sp);
      const double values[] = {norm(w.x, sp).norm, norm(w.y, sp).norm, norm(combine(w.x, w.y, +1), sp).norm,
                               norm(combine(w.x, w.y, -1), sp).norm};
      const double targets[] = {1, 1, 2, 2};
      for (int i = 0; i < 4; ++i) {
        worst = std::max(worst, std::abs(values[i] - targets[i]));
        if (std::abs(values[i] - targets[i]) > 1e-12) {
          o.fail("p=" + describe(p) + " q=" + describe(q) + " d=" + std::to_string(d) + " norm " + describe(values[i]));
        }
      }
    }
  }
  if (o.pass) o.detail = "max deviation " + describe(worst);
  return o;
}

Outcome engine_equivalence() {
  Outcome o;
  std::mt19937_64 rng(20240901);
  std::vector<SparseSequence> seqs;
  for (int i = 0; i < 200; ++i) seqs.push_back(random_sequence(rng, 1 + i % 3, 12, 6, 5.0));
  std::vector<std::pair<double, double>> exps;
  for (int i = 0; i < 10; ++i) {
    const auto sp = random_space(rng, 1, 8.0);
    exps.emplace_back(sp.p(), sp.q());
  }
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& x : seqs) {
    for (const auto& [p, q] : exps) {
      const SpaceParams sp(p, q, x.dim());
      const double a = norm_naive(x, sp).norm;
      const double b = norm_prefix(x, sp).norm;
      worst = std::max(worst, std::abs(a - b) / std::max(a, b));
      if (!close_rel(a, b, 1e-12)) o.fail("naive " + describe(a) + " vs prefix " + describe(b));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= 30.0) o.fail("took " + seconds(secs) + " (limit 30 s)");
  if (o.pass) o.detail = "2000 evaluations, max rel diff " + describe(worst) + ", " + seconds(secs);
  return o;
}

Outcome n_bound() {
  Outcome o;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const std::size_t d = 1 + i % 3;
    const auto x = random_sequence(rng, d, 12, 6, 5.0);
    const auto sp = random_space(rng, d, 8.0);
    const double reported = norm_naive(x, sp).norm;
    const double extended = norm_naive(x, sp, 0, 3 * n_max(x)).norm;
    if (extended > reported) o.fail("extended enumeration " + describe(extended) + " > " + describe(reported));
  }
  if (o.pass) o.detail = "100 instances";
  return o;
}

Outcome norm_axioms() {
  Outcome o;
  std::mt19937_64 rng(55);
  for (int i = 0; i < 200; ++i) {
    const std::size_t d = 1 + i % 3;
    const auto x = random_sequence(rng, d, 12, 6, 5.0);
    const auto y = random_sequence(rng, d, 12, 6, 5.0);
    const auto sp = random_space(rng, d, 8.0);
    const double nx = norm(x, sp).norm;
    for (double lambda : {-2.0, 0.5, 3.0}) {
      const double scaled = norm(scale(x, lambda), sp).norm;
      if (!close_rel(scaled, std::abs(lambda) * nx, 1e-10)) o.fail("homogeneity " + describe(scaled));
    }
    const double nsum = norm(combine(x, y, +1), sp).norm;
    if (nsum > nx + norm(y, sp).norm + 1e-10) o.fail("triangle inequality " + describe(nsum));

    const SpaceParams flat(sp.p(), sp.p(), d);
    double psum = 0.0;
    for (const auto& [k, v] : x.entries()) psum += std::pow(std::abs(v), sp.p());
    const double plain = std::pow(psum, 1.0 / sp.p());
    if (!close_rel(norm(x, flat).norm, plain, 1e-12)) o.fail("p=q reduction " + describe(plain));
  }
  if (o.pass) o.detail = "200 pairs";
  return o;
}

Outcome quotient_chain() {
  Outcome o;
  std::mt19937_64 rng(808);
  for (int i = 0; i < 500; ++i) {
    const std::size_t d = 1 + i % 3;
    const auto x = random_sequence(rng, d, 8, 4, 5.0);
    const auto y = random_sequence(rng, d, 8, 4, 5.0);
    const auto sp = random_space(rng, d, 8.0);
    for (double s : {1.0, 2.0, 3.5}) {
      const double ninf = quotient(ConstantKind(Constant::ninf_gen, s), x, y, sp).value;
      const double zb = quotient(ConstantKind(Constant::zbaganu_gen, s), x, y, sp).value;
      const double nj = quotient(ConstantKind(Constant::nj_gen, s), x, y, sp).value;
      if (!(ninf <= zb + 1e-10 && zb <= nj + 1e-10)) {
        o.fail("chain broken: " + describe(ninf) + ", " + describe(zb) + ", " + describe(nj));
      }
    }
  }
  if (o.pass) o.detail = "500 pairs x 3 values of s";
  return o;
}

Outcome hilbert_case() {
  Outcome o;
  SearchConfig cfg;
  cfg.radius = 3;
  cfg.restarts = 8;
  const auto cert = maximize_quotient(ConstantKind(Constant::nj_gen, 2), SpaceParams(2, 2, 1), cfg);
  if (std::abs(cert.value - 1.0) > 1e-6) o.fail("value " + describe(cert.value));
  o.detail = "value " + describe(cert.value);
  return o;
}

Outcome l1_case() {
  Outcome o;
  const SpaceParams sp(1, 1, 1);
  SearchConfig cfg;
  cfg.radius = 2;
  cfg.restarts = 1;
  cfg.max_iters = 1;
  const auto cert = maximize_quotient(ConstantKind(Constant::nj_gen, 2), sp, cfg);
  const std::size_t seeded = seeded_restarts(sp, cfg.radius).size();
  if (cert.value < 2.0 - 1e-9) o.fail("value " + describe(cert.value));
  if (cert.restart >= seeded) o.fail("best pair came from a random restart");
  o.detail = "value " + describe(cert.value) + " from seeded restart " + std::to_string(cert.restart);
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> args{"constant", "--name", "ninf-gen", "--space", "1.5,3,2", "--s", "2.5",
                                      "--radius", "1", "--restarts", "4", "--iters", "30", "--seed", "42",
                                      "--format", "json"};
  std::string a, b;
  if (run_cli(args, a) != 0 || run_cli(args, b) != 0) o.fail("constant command failed");
  if (a != b) o.fail("reports differ");
  if (o.pass) o.detail = std::to_string(a.size()) + " identical bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 theorem reproduction", theorem_reproduction},
      {"2 witness norms", witness_norms},
      {"3 engine oracle equivalence", engine_equivalence},
      {"4 N-bound validation", n_bound},
      {"5 norm axioms", norm_axioms},
      {"6 pointwise quotient chain", quotient_chain},
      {"7 Hilbert-case sanity", hilbert_case},
      {"8 l1 sanity", l1_case},
      {"9 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << outcome.detail << std::endl;
    failures += !outcome.pass;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
