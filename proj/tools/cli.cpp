#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "hankel/determinant.hpp"
#include "hankel/errors.hpp"
#include "hankel/heine.hpp"
#include "hankel/identity.hpp"
#include "hankel/json_io.hpp"
#include "hankel/random.hpp"
#include "hankel/recurrence.hpp"
#include "hankel/sequences.hpp"

namespace hankel::cli {

namespace {

struct Options {
  std::string coeffs_file;
  std::string points;
  std::string lambda;
  std::string measure_file;
  std::string sequence;
  std::size_t n = 0;
  std::size_t shift = 0;
  std::optional<std::uint64_t> seed;
  bool pretty = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return Json::parse(in);
}

// Recurrence data from --coeffs or --sequence; random when neither is given and --seed is.
struct CoeffSource {
  RecurrenceCoeffs coeffs;
  std::optional<MomentSequence> moments;
};

CoeffSource load_coeffs(const Options& opt, InstanceGenerator* gen) {
  if (!opt.coeffs_file.empty() && !opt.sequence.empty()) {
    throw std::invalid_argument("--coeffs and --sequence are mutually exclusive");
  }
  if (!opt.coeffs_file.empty()) {
    const Json doc = read_json_file(opt.coeffs_file);
    return {coeffs_from_json(doc), moments_from_json(doc)};
  }
  if (!opt.sequence.empty()) return {find_sequence(opt.sequence).coeffs, std::nullopt};
  if (gen != nullptr) return {gen->coeffs(), std::nullopt};
  throw std::invalid_argument("one of --coeffs, --sequence or --seed is required");
}

LinearCombination load_lambda(const Options& opt, InstanceGenerator* gen) {
  if (!opt.lambda.empty() && !opt.points.empty()) {
    throw std::invalid_argument("--lambda and --points are mutually exclusive");
  }
  if (!opt.lambda.empty()) return LinearCombination(parse_rational_list(opt.lambda));
  if (!opt.points.empty()) return lambda_from_points(PointConfiguration::from_list(parse_rational_list(opt.points)));
  if (gen != nullptr) return gen->lambda(static_cast<std::size_t>(gen->integer(1, 3)));
  return LinearCombination({Rational(1)});
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ", ") + cell(e);
    return "[" + s + "]";
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, e] : v.items()) s += (s.empty() ? "" : ", ") + k + "=" + cell(e);
    return "{" + s + "}";
  }
  return v.dump();
}

void emit(std::ostream& out, const Json& doc, bool pretty) {
  if (!pretty) {
    out << doc.dump() << '\n';
    return;
  }
  auto table = [&](const Json& obj) {
    std::size_t width = 0;
    for (const auto& [k, v] : obj.items()) width = std::max(width, k.size());
    for (const auto& [k, v] : obj.items()) out << std::left << std::setw(static_cast<int>(width) + 2) << k << cell(v) << '\n';
  };
  if (doc.is_array()) {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      if (i > 0) out << '\n';
      table(doc[i]);
    }
  } else {
    table(doc);
  }
}

void attach_seed(Json& doc, const Options& opt) {
  doc["seed"] = opt.seed ? Json(*opt.seed) : Json(nullptr);
}

int cmd_verify(const Options& opt, std::ostream& out) {
  std::optional<InstanceGenerator> gen;
  if (opt.seed) gen.emplace(*opt.seed);
  const CoeffSource src = load_coeffs(opt, gen ? &*gen : nullptr);
  PointConfiguration cfg;
  if (!opt.points.empty()) {
    cfg = PointConfiguration::from_list(parse_rational_list(opt.points));
  } else if (gen) {
    cfg = PointConfiguration::from_list(gen->distinct_points(static_cast<std::size_t>(gen->integer(0, 3))));
  } else {
    throw std::invalid_argument("--points is required without --seed");
  }
  // Every size up to n is checked so a bad moment is located at the first size that sees it.
  std::optional<std::size_t> first_failing;
  IdentityReport report;
  for (std::size_t k = 0; k <= opt.n; ++k) {
    report = verify_theorem1(src.coeffs, cfg, k, src.moments);
    if (!report.equal && !first_failing) first_failing = k;
  }
  Json doc = to_json(report);
  doc["equal"] = !first_failing.has_value();
  doc["first_failing_n"] = first_failing ? Json(*first_failing) : Json(nullptr);
  doc["coeffs"] = to_json(src.coeffs);
  doc["points"] = to_json(cfg.expanded());
  doc["moment_source"] = to_string(src.moments ? MomentSource::UserSupplied : MomentSource::FromCoefficients);
  attach_seed(doc, opt);
  emit(out, doc, opt.pretty);
  return first_failing ? kMismatch : kOk;
}

int cmd_hankel(const Options& opt, std::ostream& out) {
  std::optional<InstanceGenerator> gen;
  if (opt.seed) gen.emplace(*opt.seed);
  const CoeffSource src = load_coeffs(opt, gen ? &*gen : nullptr);
  const LinearCombination lc = load_lambda(opt, nullptr);
  const std::size_t needed = opt.n == 0 ? 0 : 2 * opt.n - 1 + lc.d() + opt.shift;
  const MomentSequence m = src.moments ? *src.moments : moments_from_coeffs(src.coeffs, needed);
  std::vector<Rational> weights(opt.shift, Rational(0));
  weights.insert(weights.end(), lc.lambda().begin(), lc.lambda().end());
  const Rational value = combined_hankel_det(m, weights, opt.n);
  Json doc = {{"value", to_json(value)},
              {"n", opt.n},
              {"shift", opt.shift},
              {"lambda", to_json(lc.lambda())},
              {"base_det", to_json(hankel_base_det(src.coeffs, opt.n))}};
  if (!opt.sequence.empty()) doc["sequence"] = opt.sequence;
  attach_seed(doc, opt);
  emit(out, doc, opt.pretty);
  return kOk;
}

int cmd_recurrence(const Options& opt, std::ostream& out) {
  std::optional<InstanceGenerator> gen;
  if (opt.seed) gen.emplace(*opt.seed);
  const CoeffSource src = load_coeffs(opt, gen ? &*gen : nullptr);
  const LinearCombination lc = load_lambda(opt, gen ? &*gen : nullptr);
  const RecurrenceSpec spec = synthesize_recurrence(src.coeffs, lc);
  // Cross-check against the Hankel determinants themselves.
  const std::size_t instances = std::max(spec.order + 8, opt.n);
  const std::size_t count = spec.validity_start + std::max(instances, 2 * spec.order + 2);
  const ScaledHankelSeq h = scaled_hankel_seq(src.coeffs, lc, count);
  const bool holds = verify_recurrence(h, spec);
  const auto fit = fit_recurrence_detailed(h.values, spec.order, spec.validity_start);
  const bool fit_matches = fit && (fit->spec.c == spec.c || !fit->unique());

  Json doc = to_json(spec);
  doc["lambda"] = to_json(lc.lambda());
  doc["verified_instances"] = count - spec.validity_start;
  doc["verified"] = holds;
  doc["fit_unique"] = fit ? Json(fit->unique()) : Json(nullptr);
  doc["fit_matches"] = fit_matches;
  doc["symmetric"] = lc.d() > 0 ? Json(symmetry_check(spec, src.coeffs.t_tail(), lc.d())) : Json(nullptr);
  doc["h"] = to_json(std::vector<Rational>(h.values.begin(), h.values.begin() + static_cast<long>(std::min<std::size_t>(h.values.size(), 12))));
  attach_seed(doc, opt);
  emit(out, doc, opt.pretty);
  return holds && fit_matches ? kOk : kMismatch;
}

int cmd_heine(const Options& opt, std::ostream& out) {
  std::optional<InstanceGenerator> gen;
  if (opt.seed) gen.emplace(*opt.seed);
  DiscreteMeasure m;
  if (!opt.measure_file.empty()) {
    m = measure_from_json(read_json_file(opt.measure_file));
  } else if (gen) {
    m = gen->measure(static_cast<std::size_t>(gen->integer(1, 4)));
  } else {
    throw std::invalid_argument("--measure is required without --seed");
  }
  const PointConfiguration cfg =
      opt.points.empty() ? PointConfiguration() : PointConfiguration::from_list(parse_rational_list(opt.points));
  const DiscreteMeasure twisted = twist_measure(m, cfg);
  const Rational multisum = heine_multisum(twisted, opt.n);
  const bool equal = heine_check(m, cfg, opt.n);
  Json doc = {{"n", opt.n},
              {"measure", to_json(m)},
              {"points", to_json(cfg.expanded())},
              {"twisted", to_json(twisted)},
              {"multisum", to_json(multisum)},
              {"equal", equal}};
  attach_seed(doc, opt);
  emit(out, doc, opt.pretty);
  return equal ? kOk : kMismatch;
}

Json describe(const SequenceSpec& s, std::size_t terms) {
  const std::size_t shown = std::min(terms, s.known_terms.size());
  const MomentSequence dp = moments_from_coeffs(s.coeffs, s.known_terms.size());
  return {{"name", s.name},
          {"coeffs", to_json(s.coeffs)},
          {"base_hankel", s.base_hankel_closed_form ? Json(*s.base_hankel_closed_form) : Json(nullptr)},
          {"params_provenance", to_string(s.params_provenance)},
          {"terms_provenance", to_string(s.terms_provenance)},
          {"bundled_terms", s.known_terms.size()},
          {"terms", to_json(std::vector<Rational>(s.known_terms.begin(), s.known_terms.begin() + static_cast<long>(shown)))},
          {"dp_match", dp.values == s.known_terms}};
}

int cmd_sequences(const Options& opt, std::ostream& out) {
  const std::size_t terms = opt.n == 0 ? 8 : opt.n;
  Json doc;
  bool all_match = true;
  if (!opt.sequence.empty()) {
    doc = describe(find_sequence(opt.sequence), terms);
    all_match = doc["dp_match"].get<bool>();
  } else {
    doc = Json::array();
    for (const auto& s : registry()) {
      doc.push_back(describe(s, terms));
      all_match = all_match && doc.back()["dp_match"].get<bool>();
    }
  }
  emit(out, doc, opt.pretty);
  return all_match ? kOk : kMismatch;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  const std::size_t size = opt.n == 0 ? 12 : opt.n;
  const SequenceSpec& seq = find_sequence(opt.sequence.empty() ? "schroeder_large" : opt.sequence);
  const MomentSequence m = moments_from_coeffs(seq.coeffs, 2 * size + opt.shift);
  const RatMatrix a = hankel_matrix<Rational>(m.values, size, opt.shift);
  using Clock = std::chrono::steady_clock;
  auto time = [&](auto&& kernel) {
    const auto t0 = Clock::now();
    Rational v = kernel(a);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return std::pair{v, ms};
  };
  const auto [ff, ff_ms] = time([](const RatMatrix& x) { return det_fraction_free<Rational>(x); });
  const auto [dc, dc_ms] = time([](const RatMatrix& x) { return det_condensation<Rational>(x); });
  Json doc = {{"sequence", seq.name},
              {"size", size},
              {"shift", opt.shift},
              {"value", to_json(ff)},
              {"agree", ff == dc},
              {"fraction_free_ms", ff_ms},
              {"condensation_ms", dc_ms}};
  emit(out, doc, opt.pretty);
  return ff == dc ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hankel determinant identities over the rationals", "hankel-cli"};
  app.require_subcommand(1);
  Options opt;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--pretty", opt.pretty, "Human-readable table instead of JSON");
    sub->add_option("--n", opt.n, "Determinant size / instance count");
  };
  std::vector<CLI::Option*> seed_options;
  auto add_seed = [&](CLI::App* sub) {
    seed_options.push_back(sub->add_option("--seed", seed, "Seed for randomized instances"));
  };
  auto add_coeffs = [&](CLI::App* sub) {
    sub->add_option("--coeffs", opt.coeffs_file, "Recurrence coefficient JSON file");
    sub->add_option("--sequence", opt.sequence, "Registered sequence name");
  };

  auto* verify = app.add_subcommand("verify-theorem1", "Check the Hankel/orthogonal-polynomial identity for sizes 0..n");
  add_common(verify);
  add_coeffs(verify);
  add_seed(verify);
  verify->add_option("--points", opt.points, "Comma-separated rationals; repeats give confluent points");

  auto* hankel = app.add_subcommand("hankel", "det(sum_k lambda_k mu_{i+j+k+shift})");
  add_common(hankel);
  add_coeffs(hankel);
  add_seed(hankel);
  hankel->add_option("--shift", opt.shift, "Index shift");
  hankel->add_option("--lambda", opt.lambda, "Comma-separated lambda_0..lambda_d, last entry 1");
  hankel->add_option("--points", opt.points, "Points x_l, lambda from prod (X + x_l)");

  auto* recurrence = app.add_subcommand("recurrence", "Order-2^d recurrence of the scaled Hankel sequence");
  add_common(recurrence);
  add_coeffs(recurrence);
  add_seed(recurrence);
  recurrence->add_option("--lambda", opt.lambda, "Comma-separated lambda_0..lambda_d, last entry 1");
  recurrence->add_option("--points", opt.points, "Points x_l, lambda from prod (X + x_l)");

  auto* heine = app.add_subcommand("heine", "Discrete Heine multisum against the Hankel determinant");
  add_common(heine);
  add_seed(heine);
  heine->add_option("--measure", opt.measure_file, "DiscreteMeasure JSON file");
  heine->add_option("--points", opt.points, "Twist points x_l");

  auto* sequences = app.add_subcommand("sequences", "List registered sequences");
  add_common(sequences);
  sequences->add_option("--sequence", opt.sequence, "Show one sequence");

  auto* bench = app.add_subcommand("bench", "Time both determinant kernels on a Hankel matrix");
  add_common(bench);
  bench->add_option("--sequence", opt.sequence, "Sequence (default schroeder_large)");
  bench->add_option("--shift", opt.shift, "Index shift");

  std::vector<const char*> argv{"hankel-cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  for (const auto* o : seed_options) {
    if (o->count() > 0) opt.seed = seed;
  }

  try {
    if (verify->parsed()) return cmd_verify(opt, out);
    if (hankel->parsed()) return cmd_hankel(opt, out);
    if (recurrence->parsed()) return cmd_recurrence(opt, out);
    if (heine->parsed()) return cmd_heine(opt, out);
    if (sequences->parsed()) return cmd_sequences(opt, out);
    return cmd_bench(opt, out);
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace hankel::cli
