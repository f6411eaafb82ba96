// Command-line interface: convex-analytic height predictions and the
// desk-scale verification experiments on P^1 x P^1.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "toric/io_json.hpp"

using namespace toric;

namespace {

struct CommonOpts {
  std::string problem;
  std::string out;
  long prime_lo = 101, prime_hi = 401;
  long budget = 1 << 18;
  std::uint64_t seed = 1;
  int grid = 64;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_problem = true) {
  auto* p = cmd->add_option("--problem", o.problem, "problem JSON file");
  if (need_problem) p->required();
  cmd->add_option("--out", o.out, "output path (stdout when omitted)");
  cmd->add_option("--budget", o.budget, "QMC node budget");
  cmd->add_option("--seed", o.seed, "RNG seed");
  cmd->add_option("--grid", o.grid, "grid resolution (power of two)");
  cmd->add_option_function<std::string>(
      "--primes",
      [&o](const std::string& s) {
        auto dots = s.find("..");
        if (dots == std::string::npos)
          throw CLI::ValidationError("--primes expects a..b");
        o.prime_lo = std::stol(s.substr(0, dots));
        o.prime_hi = std::stol(s.substr(dots + 2));
      },
      "prime window a..b");
}

std::ostream& open_out(const CommonOpts& o, std::ofstream& file) {
  if (o.out.empty()) return std::cout;
  file.open(o.out);
  if (!file) throw std::runtime_error("cannot open output: " + o.out);
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "adelic heights of toric intersections: predictions and verification"};
  app.require_subcommand(1);

  CommonOpts opt;

  auto* predict = app.add_subcommand(
      "predict", "limit height prediction for a problem file");
  add_common(predict, opt);
  predict->callback([&]() {
    auto problem = load_problem(opt.problem);
    PredictorParams params;
    params.grid_res = opt.grid;
    params.budget = opt.budget;
    params.seed = opt.seed;
    params.mi_grid = Rat(1, opt.grid);
    auto report = limit_height(problem.laurents, problem.divisors, params);
    std::ofstream file;
    open_out(opt, file) << report_to_json(report).dump(2) << "\n";
  });

  auto* degree = app.add_subcommand(
      "degree", "mixed-volume degree prediction for a problem file");
  add_common(degree, opt);
  degree->callback([&]() {
    auto problem = load_problem(opt.problem);
    std::vector<Polytope> ps;
    for (size_t i = 0; i + problem.laurents.size() <
                       problem.divisors.size() + problem.laurents.size();
         ++i) {
      if (i < problem.divisors.size() - 0) break;
    }
    // divisors beyond the 0th slot enter the degree (D_1, ..., D_{n-k})
    for (size_t i = 1; i < problem.divisors.size(); ++i)
      ps.push_back(problem.divisors[i].polytope);
    Rat mv = degree_prediction(problem.laurents, ps);
    std::ofstream file;
    open_out(opt, file) << nlohmann::json{{"degree", mv.get_str()}}.dump(2)
                        << "\n";
  });

  auto* verify = app.add_subcommand(
      "verify", "exact cycle heights of a twisted family vs the prediction");
  add_common(verify, opt);
  std::string kind = "seeded";
  verify->add_option("--kind", kind, "exponent rule: seeded | sqrt");
  verify->callback([&]() {
    auto problem = load_problem(opt.problem);
    if (problem.laurents.empty())
      throw std::runtime_error("verify: problem needs laurent polynomials");
    ExperimentConfig cfg;
    cfg.f = problem.laurents[0];
    cfg.g = problem.laurents.size() > 1 ? problem.laurents[1]
                                        : problem.laurents[0];
    cfg.prime_lo = opt.prime_lo;
    cfg.prime_hi = opt.prime_hi;
    cfg.seed = opt.seed;
    cfg.budget = opt.budget;
    cfg.grid_res = opt.grid;
    cfg.kind = (kind == "sqrt") ? SequenceKind::kSqrtExponent
                                : SequenceKind::kSeeded;
    auto res = convergence_experiment(cfg);
    std::ofstream file;
    auto& os = open_out(opt, file);
    write_rows_csv(os, res.rows);
    nlohmann::json summary = {{"rhs", res.rhs},
                              {"rhs_error", res.rhs_error},
                              {"max_tail_dev", res.max_tail_dev}};
    std::cerr << summary.dump(2) << "\n";
  });

  auto* tail = app.add_subcommand(
      "tail", "adelic tail rows over good primes up to the window bound");
  add_common(tail, opt);
  long seq_lo = 101, seq_hi = 401;
  tail->add_option("--orders", [&](auto res) {
    (void)res; return true; }, "")->group("");  // hidden placeholder
  tail->callback([&]() {
    auto problem = load_problem(opt.problem);
    ExperimentConfig cfg;
    cfg.f = problem.laurents.at(0);
    cfg.g = problem.laurents.size() > 1 ? problem.laurents[1]
                                        : problem.laurents[0];
    auto seq = quasi_strict_sequence(SequenceKind::kSeeded, 1 << 20, seq_lo,
                                     seq_hi, opt.seed);
    auto rows = adelic_tail(cfg.f, cfg.g, seq, opt.prime_hi);
    std::ofstream file;
    write_tail_csv(open_out(opt, file), rows);
  });

  auto* equidist = app.add_subcommand(
      "equidist", "orbit averages of log|h| against the Mahler measure");
  add_common(equidist, opt);
  long s_exp = 0;
  equidist->add_option("--exponent", s_exp,
                       "fixed orbit exponent (0: sqrt-of-order rule)");
  equidist->callback([&]() {
    auto problem = load_problem(opt.problem);
    std::vector<long> orders;
    for (long n = opt.prime_lo; n <= opt.prime_hi; ++n)
      if (is_prime_u64(static_cast<unsigned long>(n))) orders.push_back(n);
    auto rows = equidistribution_demo(problem.laurents.at(0), orders, s_exp);
    std::ofstream file;
    write_equidist_csv(open_out(opt, file), rows);
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}
