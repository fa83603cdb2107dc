#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "svg.hpp"
#include "toricdp/toricdp.h"

namespace toricdp::cli {

namespace {

using Json = nlohmann::ordered_json;
using FanHandle = std::unique_ptr<toricdp_fan, decltype(&toricdp_fan_free)>;
using PolytopeHandle =
    std::unique_ptr<toricdp_polytope, decltype(&toricdp_polytope_free)>;

// A command failed; carries the exit code and the message for stderr.
struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void raise(toricdp_status status, const std::string& context) {
  const int code = status == TORICDP_ERR_PARSE ? kExitIo : kExitDomain;
  throw Failure{code, context + ": " + toricdp_last_error()};
}

void check(toricdp_status status, const std::string& context) {
  if (status != TORICDP_OK) raise(status, context);
}

std::string take_string(char* s) {
  std::string out(s);
  toricdp_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitIo, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FanHandle load_fan(const std::string& path) {
  const std::string text = read_file(path);
  toricdp_fan* raw = nullptr;
  const toricdp_status s = toricdp_fan_from_json(text.c_str(), &raw);
  if (s == TORICDP_ERR_INVALID_FAN) {
    throw Failure{kExitDomain, std::string("invalid fan: ") + toricdp_last_error()};
  }
  check(s, path);
  return FanHandle(raw, &toricdp_fan_free);
}

std::vector<std::int64_t> fan_values(
    const toricdp_fan* fan,
    toricdp_status (*getter)(const toricdp_fan*, int64_t*, size_t),
    std::size_t count) {
  std::vector<std::int64_t> v(count);
  check(getter(fan, v.data(), v.size()), "fan");
  return v;
}

template <typename Range>
std::string tuple_string(const Range& values) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << ')';
  return os.str();
}

std::string set_string(const Json& indices) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) os << ',';
    os << indices[i].get<std::int64_t>();
  }
  os << '}';
  return os.str();
}

std::vector<Point> fan_rays(const toricdp_fan* fan) {
  std::vector<Point> rays(toricdp_fan_size(fan));
  for (std::size_t i = 0; i < rays.size(); ++i) {
    check(toricdp_fan_ray(fan, i, &rays[i].x, &rays[i].y), "fan");
  }
  return rays;
}

int cmd_fan_summary(const RunConfig& config, bool detailed, std::ostream& out) {
  const FanHandle fan = load_fan(*config.input_path);
  const std::size_t n = toricdp_fan_size(fan.get());
  const auto gammas = fan_values(fan.get(), &toricdp_fan_gammas, n);
  const auto matrix =
      fan_values(fan.get(), &toricdp_fan_intersection_matrix, n * n);
  std::vector<std::string> rays;
  for (const Point& p : fan_rays(fan.get())) {
    rays.push_back("(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")");
  }

  out << "valid complete smooth fan\n";
  out << "n: " << n << '\n';
  out << "rays:";
  for (const auto& r : rays) out << ' ' << r;
  out << '\n';
  out << "gamma: " << tuple_string(gammas) << '\n';
  out << "picard_rank: " << toricdp_fan_picard_rank(fan.get()) << '\n';
  out << "intersection_matrix:\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "  [";
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << matrix[i * n + j];
    }
    out << "]\n";
  }
  if (!detailed) return kExitOk;

  const auto key = fan_values(fan.get(), &toricdp_fan_canonical_key, n);
  std::int64_t sum = 0;
  for (auto g : gammas) sum += g;
  out << "canonical_key: " << tuple_string(key) << '\n';
  out << "gamma_sum: " << sum << " (3n - 12 = " << 3 * static_cast<std::int64_t>(n) - 12
      << ")\n";
  const std::vector<std::int64_t> anticanonical(n, 1);
  std::vector<std::int64_t> kleiman(n);
  int ample = 0;
  std::int64_t witness = -1;
  check(toricdp_divisor_kleiman(fan.get(), anticanonical.data(), n,
                                kleiman.data(), &ample, &witness),
        "fan");
  out << "anticanonical_kleiman: " << tuple_string(kleiman) << '\n';
  out << "del_pezzo: " << (ample ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
  if (config.rays.size() != 1) {
    throw Failure{kExitIo, "fan enumerate takes a single --rays value"};
  }
  char* raw = nullptr;
  check(toricdp_enumerate_json(config.rays.front(), config.gamma_bound, &raw),
        "enumerate");
  const std::string text = take_string(raw);
  switch (config.output_format) {
    case OutputFormat::Json:
      out << text << '\n';
      break;
    case OutputFormat::Csv: {
      const Json doc = Json::parse(text);
      out << "rays,gamma_bound,key\n";
      for (const Json& k : doc["keys"]) {
        out << doc["rays"] << ',' << doc["gamma_bound"] << ",\""
            << tuple_string(k) << "\"\n";
      }
      break;
    }
    case OutputFormat::Table: {
      const Json doc = Json::parse(text);
      for (const Json& k : doc["keys"]) out << tuple_string(k) << '\n';
      break;
    }
  }
  return kExitOk;
}

int cmd_classify(const RunConfig& config, std::ostream& out) {
  const FanHandle fan = load_fan(*config.input_path);
  char* raw = nullptr;
  check(toricdp_classify_json(fan.get(), &raw), "classify");
  const std::string text = take_string(raw);
  if (config.output_format == OutputFormat::Json) {
    out << text << '\n';
    return kExitOk;
  }
  const Json doc = Json::parse(text);
  const std::string key = tuple_string(doc["fan"]);
  if (config.output_format == OutputFormat::Csv) {
    out << "fan,delta,ample,kleiman,witness\n";
    for (const Json& rec : doc["records"]) {
      out << '"' << key << "\",\"" << set_string(rec["delta"]) << "\","
          << (rec["ample"].get<bool>() ? "true" : "false") << ",\""
          << tuple_string(rec["kleiman"]) << "\","
          << (rec["witness"].is_null() ? std::string()
                                       : rec["witness"].dump())
          << '\n';
    }
    return kExitOk;
  }
  std::size_t ample = 0;
  for (const Json& rec : doc["records"]) ample += rec["ample"].get<bool>();
  out << "fan " << key << ", " << doc["rays"].size() << " rays, "
      << doc["records"].size() << " supports, " << ample << " ample\n";
  out << "  " << std::left << std::setw(22) << "delta" << std::setw(7)
      << "ample" << std::setw(28) << "kleiman" << "witness\n";
  for (const Json& rec : doc["records"]) {
    const bool is_ample = rec["ample"].get<bool>();
    std::string delta = set_string(rec["delta"]);
    if (rec["delta"].empty()) delta += " (-K)";
    out << (is_ample ? "* " : "  ") << std::setw(22) << delta << std::setw(7)
        << (is_ample ? "yes" : "no") << std::setw(28)
        << tuple_string(rec["kleiman"])
        << (rec["witness"].is_null() ? std::string("-")
                                     : rec["witness"].dump())
        << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  char* raw = nullptr;
  int pass = 0;
  switch (config.suite) {
    case Suite::T1:
      check(toricdp_verify_t1_json(config.rays.data(), config.rays.size(),
                                   config.gamma_bound, &raw, &pass),
            "verify t1");
      break;
    case Suite::T2:
      check(toricdp_verify_t2_json(&raw, &pass), "verify t2");
      break;
    case Suite::T3:
      check(toricdp_verify_t3_json(config.r_max, &raw, &pass), "verify t3");
      break;
    case Suite::Volumes:
      check(toricdp_verify_volumes_json(config.samples, config.seed, &raw,
                                        &pass),
            "verify volumes");
      break;
  }
  const std::string text = take_string(raw);
  const Json doc = Json::parse(text);
  if (config.output_format == OutputFormat::Json) {
    out << text << '\n';
  } else {
    out << "suite: " << doc["suite"].get<std::string>() << '\n';
    for (const Json& s : doc["scope"]) {
      out << "scope: " << s.get<std::string>() << '\n';
    }
    out << "fans examined: " << doc["fans_examined"] << '\n';
    out << "verdicts checked: " << doc["verdicts_checked"] << '\n';
    out << "result: " << (pass ? "PASS" : "FAIL") << '\n';
  }
  if (!pass && !doc["counterexample"].is_null()) {
    const Json& c = doc["counterexample"];
    err << "counterexample: fan " << tuple_string(c["fan"]) << ", delta "
        << set_string(c["delta"]) << ", kleiman "
        << tuple_string(c["kleiman"]) << ", witness "
        << (c["witness"].is_null() ? std::string("-") : c["witness"].dump())
        << ": " << c["note"].get<std::string>() << '\n';
  }
  return pass ? kExitOk : kExitDomain;
}

int cmd_draw(const RunConfig& config, std::ostream& out) {
  const FanHandle fan = load_fan(*config.input_path);
  std::vector<Point> vertices;
  if (config.coeffs) {
    const auto& a = *config.coeffs;
    toricdp_polytope* raw = nullptr;
    const toricdp_status s =
        toricdp_polytope_create(fan.get(), a.data(), a.size(), &raw);
    if (s != TORICDP_OK) {
      throw Failure{kExitDomain, std::string(toricdp_last_error())};
    }
    const PolytopeHandle polytope(raw, &toricdp_polytope_free);
    vertices.resize(toricdp_polytope_size(polytope.get()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      check(toricdp_polytope_vertex(polytope.get(), i, &vertices[i].x,
                                    &vertices[i].y),
            "polytope");
    }
  }
  const std::string svg = render_svg(fan_rays(fan.get()), vertices);
  std::ofstream file(*config.svg_path, std::ios::binary);
  if (!file || !(file << svg)) {
    throw Failure{kExitIo, "cannot write " + *config.svg_path};
  }
  out << "wrote " << *config.svg_path << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig config;
  CLI::App app{"Complete smooth toric surfaces and toric log del Pezzo pairs",
               "toricdp"};
  app.require_subcommand(1);

  const std::map<std::string, OutputFormat> formats{
      {"table", OutputFormat::Table},
      {"json", OutputFormat::Json},
      {"csv", OutputFormat::Csv}};
  const std::map<std::string, Suite> suites{{"t1", Suite::T1},
                                            {"t2", Suite::T2},
                                            {"t3", Suite::T3},
                                            {"volumes", Suite::Volumes}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", config.output_format, "table, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* fan = app.add_subcommand("fan", "fan validation and enumeration");
  fan->require_subcommand(1);
  auto* validate = fan->add_subcommand("validate", "validate a fan file");
  validate->add_option("file", config.input_path)->required();
  auto* info = fan->add_subcommand("info", "validate and describe a fan file");
  info->add_option("file", config.input_path)->required();
  auto* enumerate = fan->add_subcommand(
      "enumerate", "list fans up to lattice equivalence by gamma bound");
  enumerate->add_option("--rays", config.rays, "number of rays")
      ->required()
      ->expected(1)
      ->check(CLI::Range(std::size_t{3}, std::size_t{64}));
  enumerate->add_option("--gamma-bound", config.gamma_bound)
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_format(enumerate);

  auto* pair = app.add_subcommand("pair", "log del Pezzo pairs");
  pair->require_subcommand(1);
  auto* classify = pair->add_subcommand(
      "classify", "decide -(K+D) ampleness for every invariant reduced D");
  classify->add_option("file", config.input_path)->required();
  add_format(classify);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", config.suite, "t1, t2, t3 or volumes")
      ->required()
      ->transform(CLI::CheckedTransformer(suites, CLI::ignore_case));
  verify->add_option("--r-max", config.r_max, "largest Hirzebruch index (t3)")
      ->check(CLI::Range(std::int64_t{2}, std::int64_t{1000000}));
  verify->add_option("--rays", config.rays, "ray counts, e.g. 5,6,7 (t1)")
      ->delimiter(',')
      ->check(CLI::Range(std::size_t{5}, std::size_t{20}));
  verify->add_option("--gamma-bound", config.gamma_bound, "max |gamma_i| (t1)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--samples", config.samples, "ample samples (volumes)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed, "random seed (volumes)");
  add_format(verify);

  auto* draw = app.add_subcommand("draw", "render a fan and polytope as SVG");
  draw->add_option("file", config.input_path)->required();
  std::vector<std::int64_t> coeffs;
  auto* coeffs_opt =
      draw->add_option("--coeffs", coeffs, "divisor coefficients a0,a1,...")
          ->delimiter(',')
          ->allow_extra_args(false);
  draw->add_option("--out", config.svg_path, "SVG output path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }

  if (validate->parsed()) config.command = Command::FanValidate;
  if (info->parsed()) config.command = Command::FanInfo;
  if (enumerate->parsed()) config.command = Command::FanEnumerate;
  if (classify->parsed()) config.command = Command::PairClassify;
  if (verify->parsed()) config.command = Command::Verify;
  if (draw->parsed()) config.command = Command::Draw;
  if (coeffs_opt->count() > 0) config.coeffs = coeffs;

  try {
    switch (config.command) {
      case Command::FanValidate: return cmd_fan_summary(config, false, out);
      case Command::FanInfo: return cmd_fan_summary(config, true, out);
      case Command::FanEnumerate: return cmd_enumerate(config, out);
      case Command::PairClassify: return cmd_classify(config, out);
      case Command::Verify: return cmd_verify(config, out, err);
      case Command::Draw: return cmd_draw(config, out);
    }
  } catch (const Failure& f) {
    err << f.message << '\n';
    return f.code;
  } catch (const nlohmann::json::exception& e) {
    err << "malformed report: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace toricdp::cli
