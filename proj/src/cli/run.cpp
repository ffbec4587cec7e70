#include "starci/cli/run.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "starci/certificate.hpp"
#include "starci/cli/arrangement_file.hpp"
#include "starci/cli/certificate_file.hpp"
#include "starci/cli/report.hpp"
#include "starci/schmitt_vogel.hpp"

namespace starci::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Options {
  std::string field_text;
  std::uint64_t seed = 0;
  double budget_seconds = 0.0;
  std::string permute;
  bool all_j = false;
  std::string input;
  std::string cert;
  std::string output;
  std::optional<std::size_t> j;
  std::size_t s = 0;
  std::size_t a = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::string mode = "both";
  bool check_only = false;
};

/// Everything one command needs, plus the report under construction.
struct Context {
  Options opt;
  std::optional<FieldSpec> field_override;
  std::optional<Budget> budget;
  std::optional<ArrangementFile> file;
  std::optional<StciCertificate> cert;
  Json args = Json::object();
  Json results = Json::object();
  Json timings = Json::object();

  const Budget* budget_ptr() const { return budget ? &*budget : nullptr; }
  const Arrangement& arrangement() const { return file->arrangement; }
  std::span<const std::string> names() const { return file->variables; }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseErrorKind::Malformed, "cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<std::size_t> parse_permutation(const std::string& text, std::size_t n) {
  std::vector<std::size_t> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument("label");
      order.push_back(static_cast<std::size_t>(v) - 1);
    } catch (const std::exception&) {
      throw UsageError("--permute expects comma-separated labels, got \"" + text + "\"");
    }
  }
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (sorted != identity) throw UsageError("--permute must list each label 1.." + std::to_string(n) + " once");
  return order;
}

void apply_permutation(Context& ctx) {
  if (ctx.opt.permute.empty()) return;
  const auto order = parse_permutation(ctx.opt.permute, ctx.arrangement().size());
  ctx.file->arrangement = ctx.arrangement().permuted(order);
  if (!ctx.file->labels.empty()) {
    std::vector<std::string> labels;
    for (std::size_t i : order) labels.push_back(ctx.file->labels[i]);
    ctx.file->labels = std::move(labels);
  }
  ctx.args["permute"] = ctx.opt.permute;
}

Json label_list(std::span<const std::size_t> indices) {
  Json out = Json::array();
  for (std::size_t i : indices) out.push_back(i + 1);
  return out;
}

std::size_t require_j(const Context& ctx) {
  if (!ctx.opt.j) throw UsageError("--j is required (or use --all-j)");
  return *ctx.opt.j;
}

/// Runs `body` for the requested j, or for every j in [lo, hi] under --all-j.
template <typename Body>
int for_each_j(Context& ctx, std::size_t lo, std::size_t hi, Body body) {
  if (!ctx.opt.all_j) {
    Json result;
    const std::size_t j = require_j(ctx);
    int code = body(j, result);
    ctx.results = std::move(result);
    return code;
  }
  Json sweep = Json::array();
  int worst = kHolds;
  for (std::size_t j = lo; j <= hi; ++j) {
    Json result;
    result["j"] = j;
    int code = body(j, result);
    sweep.push_back(std::move(result));
    if (code == kFails || (code == kInconclusive && worst == kHolds)) worst = code;
  }
  ctx.results["sweep"] = std::move(sweep);
  return worst;
}

int check_generic(Context& ctx) {
  const Arrangement& a = ctx.arrangement();
  ctx.args["s"] = ctx.opt.s;
  if (ctx.opt.s < 2 || ctx.opt.s > a.num_vars()) {
    throw UsageError("--s must lie in 2.." + std::to_string(a.num_vars()));
  }
  auto witness = genericity_witness(a, ctx.opt.s);
  ctx.results["s"] = ctx.opt.s;
  ctx.results["generic"] = !witness.has_value();
  if (witness) {
    ctx.results["witness"] = Json{{"forms", label_list(*witness)},
                                  {"rank", subset_rank(a, *witness)}};
    return kFails;
  }
  return kHolds;
}

int afold(Context& ctx) {
  const Arrangement& a = ctx.arrangement();
  ctx.args["a"] = ctx.opt.a;
  if (ctx.opt.a < 1 || ctx.opt.a > a.size()) {
    throw UsageError("--a must lie in 1.." + std::to_string(a.size()));
  }
  Json gens = Json::array();
  for (const auto& subset : combinations(a.size(), ctx.opt.a)) {
    ProductOfForms p = subset_product(a, subset);
    gens.push_back(Json{{"product", p.name()},
                        {"polynomial", p.expand().to_string(ctx.names())}});
  }
  ctx.results["a"] = ctx.opt.a;
  ctx.results["count"] = gens.size();
  ctx.results["generators"] = std::move(gens);
  return kHolds;
}

int min_primes(Context& ctx) {
  const Arrangement& a = ctx.arrangement();
  return for_each_j(ctx, 0, a.size() - 1, [&](std::size_t j, Json& out) {
    Json primes = Json::array();
    for (const LinearPrime& p : minimal_linear_primes(a, j)) {
      primes.push_back(Json{{"ideal", p.to_string(ctx.names())},
                            {"height", p.height()},
                            {"forms", label_list(p.support())}});
    }
    out["j"] = j;
    out["a"] = a.size() - j;
    out["primes"] = std::move(primes);
    return int{kHolds};
  });
}

int radical(Context& ctx) {
  const Arrangement& a = ctx.arrangement();
  return for_each_j(ctx, 0, a.size() - 1, [&](std::size_t j, Json& out) {
    const auto start = Clock::now();
    Ideal rad = combinatorial_radical(a, j, ctx.budget_ptr());
    Json gens = Json::array();
    for (const Polynomial& g : rad.groebner_basis(MonomialOrder::grevlex(), ctx.budget_ptr())) {
      gens.push_back(g.to_string(ctx.names()));
    }
    ctx.timings["radical j=" + std::to_string(j)] = seconds_since(start);
    out["j"] = j;
    out["a"] = a.size() - j;
    out["generators"] = std::move(gens);
    return int{kHolds};
  });
}

int height(Context& ctx) {
  const Arrangement& a = ctx.arrangement();
  return for_each_j(ctx, 0, a.size() - 1, [&](std::size_t j, Json& out) {
    out["j"] = j;
    out["a"] = a.size() - j;
    out["height"] = height_afold(a, j);
    return int{kHolds};
  });
}

int min_distance_cmd(Context& ctx) {
  ctx.results["min_distance"] = min_distance(ctx.arrangement());
  return kHolds;
}

std::size_t max_theorem_j(const Arrangement& a) { return a.num_vars() >= 2 ? a.num_vars() - 2 : 0; }

int stci_gens(Context& ctx) {
  const Arrangement& a = ctx.arrangement();
  return for_each_j(ctx, 0, std::min(max_theorem_j(a), a.size() - 1), [&](std::size_t j, Json& out) {
    StciCertificate cert = theorem_generators(a, j);
    Json gens = Json::array();
    const auto labels = cert.generator_names();
    for (std::size_t i = 0; i < cert.f_terms.size(); ++i) {
      gens.push_back(Json{{"name", labels[i]},
                          {"symbolic", cert.f_terms[i].name()},
                          {"polynomial", cert.f_gens[i].to_string(ctx.names())}});
    }
    gens.push_back(Json{{"name", "tail"},
                        {"symbolic", cert.tail.name()},
                        {"polynomial", cert.tail_poly.to_string(ctx.names())}});
    out["j"] = j;
    out["a"] = cert.fold();
    out["generators"] = std::move(gens);
    out["certificate"] = certificate_to_json(*ctx.file, cert);
    return int{kHolds};
  });
}

VerifyMode parse_mode(const std::string& mode) {
  if (mode == "groebner") return VerifyMode::GroebnerOnly;
  if (mode == "combinatorial") return VerifyMode::CombinatorialOnly;
  if (mode == "both") return VerifyMode::Both;
  throw UsageError("--mode must be groebner, combinatorial or both");
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Holds: return kHolds;
    case Verdict::Fails: return kFails;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kFails;
}

int verify(Context& ctx) {
  const VerifyMode mode = parse_mode(ctx.opt.mode);
  ctx.args["mode"] = ctx.opt.mode;
  auto check = [&](const StciCertificate& cert, Json& out) {
    const auto start = Clock::now();
    VerificationReport report = verify_certificate(cert, mode, ctx.budget_ptr());
    Json steps = Json::object();
    out["j"] = cert.j;
    out["a"] = cert.fold();
    out["generators"] = cert.generator_names();
    out["verification"] = verification_to_json(report, steps);
    ctx.timings["verify j=" + std::to_string(cert.j)] =
        Json{{"total", seconds_since(start)}, {"steps", std::move(steps)}};
    return verdict_code(report.verdict);
  };
  if (ctx.cert) {
    if (ctx.opt.all_j) throw UsageError("--all-j cannot be combined with --cert");
    ctx.results["source"] = "certificate";
    int code = check(*ctx.cert, ctx.results);
    return code;
  }
  const Arrangement& a = ctx.arrangement();
  int code = for_each_j(ctx, 0, std::min(max_theorem_j(a), a.size() - 1), [&](std::size_t j, Json& out) {
    return check(theorem_generators(a, j), out);
  });
  ctx.results["source"] = "theorem";
  return code;
}

int sv_partition(Context& ctx) {
  const Arrangement& a = ctx.arrangement();
  if (ctx.opt.check_only) ctx.args["check_only"] = true;
  return for_each_j(ctx, 0, a.size() - 1, [&](std::size_t j, Json& out) {
    const auto start = Clock::now();
    SVPartition p = sv_ara_partition(a, j);
    Json parts = Json::array();
    for (const auto& part : p.parts) {
      Json names = Json::array();
      for (std::size_t i : part) names.push_back(p.ground[i].name());
      parts.push_back(std::move(names));
    }
    out["j"] = j;
    out["parts"] = std::move(parts);
    out["exponents"] = p.exponents;
    Json steps = Json::object();
    VerificationReport conditions = sv_check_partition(p);
    out["conditions"] = verification_to_json(conditions, steps);
    int code = verdict_code(conditions.verdict);
    if (code == kHolds && !ctx.opt.check_only) {
      Json sums = Json::array();
      std::vector<Polynomial> q = sv_sums(p);
      for (const Polynomial& s : q) sums.push_back(s.to_string(ctx.names()));
      out["sums"] = std::move(sums);
      const bool eq = radical_eq(Ideal::generated_by(q), combinatorial_radical(a, j, ctx.budget_ptr()),
                                 ctx.budget_ptr());
      out["radical_matches"] = eq;
      if (!eq) code = kFails;
    }
    ctx.timings["sv-partition j=" + std::to_string(j)] = seconds_since(start);
    return code;
  });
}

int random_cmd(Context& ctx) {
  const FieldSpec field = ctx.field_override.value_or(FieldSpec::prime(kDefaultPrime));
  ctx.args["k"] = ctx.opt.k;
  ctx.args["n"] = ctx.opt.n;
  ArrangementFile file = with_default_names(random_generic_arrangement(ctx.opt.k, ctx.opt.n, field, ctx.opt.seed));
  ctx.results["k"] = ctx.opt.k;
  ctx.results["n"] = ctx.opt.n;
  ctx.results["arrangement"] = arrangement_to_json(file);
  if (!ctx.opt.output.empty()) {
    std::ofstream out(ctx.opt.output, std::ios::binary);
    if (!out) throw UsageError("cannot write " + ctx.opt.output);
    out << serialize_arrangement(file);
    ctx.args["output"] = ctx.opt.output;
  }
  ctx.file = std::move(file);
  return kHolds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  Context ctx;
  Options& opt = ctx.opt;

  CLI::App app{"Star-configuration ideals: generators, radicals and complete-intersection checks",
               "starci"};
  app.require_subcommand(1);
  app.add_option("--field", opt.field_text, "Coefficient field: rational, QQ, GF(p) or p");
  app.add_option("--seed", opt.seed, "Seed for random arrangements");
  app.add_option("--budget-seconds", opt.budget_seconds, "Time budget for ideal computations (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--permute", opt.permute, "Relabel forms: comma-separated 1-based labels");
  app.add_flag("--all-j", opt.all_j, "Sweep every valid j");

  auto with_input = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("input", opt.input, "Arrangement file (- for stdin)");
    if (required) o->required();
    sub->fallthrough();
    return sub;
  };
  auto with_j = [&](CLI::App* sub) {
    sub->add_option("--j", opt.j, "Number of F generators (a = n - j)");
    return sub;
  };

  std::vector<std::pair<CLI::App*, int (*)(Context&)>> commands;
  auto* c = with_input(app.add_subcommand("check-generic", "Check that every s forms are independent"));
  c->add_option("--s", opt.s, "Genericity level")->required();
  commands.emplace_back(c, check_generic);
  c = with_input(app.add_subcommand("afold", "Generators of the a-fold product ideal"));
  c->add_option("--a", opt.a, "Product size")->required();
  commands.emplace_back(c, afold);
  commands.emplace_back(with_j(with_input(app.add_subcommand("min-primes", "Minimal primes over I(A, n-j)"))),
                        min_primes);
  commands.emplace_back(with_j(with_input(app.add_subcommand("radical", "Generators of rad I(A, n-j)"))), radical);
  commands.emplace_back(with_j(with_input(app.add_subcommand("height", "Height of I(A, n-j)"))), height);
  commands.emplace_back(with_input(app.add_subcommand("min-distance", "Minimum distance of the associated code")),
                        min_distance_cmd);
  commands.emplace_back(with_j(with_input(app.add_subcommand("stci-gens", "Complete-intersection generators"))),
                        stci_gens);
  c = with_j(with_input(app.add_subcommand("verify", "Verify a radical equality for generators"), false));
  c->add_option("--mode", opt.mode, "groebner, combinatorial or both");
  c->add_option("--cert", opt.cert, "Certificate file to verify instead of the generated one");
  commands.emplace_back(c, verify);
  c = with_j(with_input(app.add_subcommand("sv-partition", "Arithmetic-rank partition for I(A, n-j)")));
  c->add_flag("--check-only", opt.check_only, "Only check the partition conditions");
  commands.emplace_back(c, sv_partition);
  c = app.add_subcommand("random", "Seeded random generic arrangement");
  c->fallthrough();
  c->add_option("--k", opt.k, "Number of variables")->required();
  c->add_option("--n", opt.n, "Number of forms")->required();
  c->add_option("--output", opt.output, "Also write the arrangement file here");
  commands.emplace_back(c, random_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  int (*handler)(Context&) = nullptr;
  for (const auto& [sub, fn] : commands) {
    if (sub == chosen) handler = fn;
  }

  Json report;
  report["command"] = chosen->get_name();
  int code = kUsage;
  try {
    if (!opt.field_text.empty()) ctx.field_override = parse_field(opt.field_text);
    if (opt.budget_seconds > 0) ctx.budget.emplace(std::chrono::duration<double>(opt.budget_seconds));
    if (opt.j) ctx.args["j"] = *opt.j;
    if (opt.all_j) ctx.args["all_j"] = true;

    std::optional<std::string> digest;
    if (!opt.cert.empty()) {
      if (!opt.input.empty()) throw UsageError("give either an arrangement file or --cert, not both");
      const std::string text = read_input(opt.cert);
      digest = sha256_hex(text);
      CertificateFile cf = parse_certificate(text, ctx.field_override);
      ctx.file = std::move(cf.arrangement);
      ctx.cert = std::move(cf.certificate);
      ctx.args["cert"] = opt.cert;
      if (!opt.permute.empty()) throw UsageError("--permute cannot be combined with --cert");
    } else if (!opt.input.empty()) {
      const std::string text = read_input(opt.input);
      digest = sha256_hex(text);
      ctx.file = parse_arrangement(text, ctx.field_override);
      ctx.args["input"] = opt.input;
      apply_permutation(ctx);
    } else if (handler != random_cmd) {
      throw UsageError("an arrangement file or --cert is required");
    }

    code = handler(ctx);

    report["args"] = ctx.args;
    report["input_digest"] = digest ? Json("sha256:" + *digest) : Json(nullptr);
    report["field"] = ctx.file ? Json(ctx.file->arrangement.field().to_string()) : Json(nullptr);
    report["seed"] = opt.seed;
    if (ctx.file && chosen->get_name() != "random") {
      report["arrangement"] = Json{{"k", ctx.arrangement().num_vars()}, {"n", ctx.arrangement().size()}};
    }
    report["results"] = ctx.results;
  } catch (const BudgetExceeded& e) {
    report["args"] = ctx.args;
    report["results"] = Json{{"verdict", "inconclusive"}, {"reason", e.what()}};
    code = kInconclusive;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  report["exit_code"] = code;
  report["wall_time"] = Json{{"total", seconds_since(start)}, {"steps", ctx.timings}};
  out << report.dump(2) << "\n";
  return code;
}

}  // namespace starci::cli
