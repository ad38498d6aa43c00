// holocontact: command-line front end.
//
//   holocontact <command> [--input FILE] [options]
//
// Commands: linear-analyze, linear-morseify, contact-solve, contact-trace,
// leaf-flow, leaf-hessian, scan, index-pugh, index-audit. The two-word spelling
// ("linear analyze") is accepted too. The report goes to stdout, diagnostics
// to stderr. Exit status: 0 ok, 2 bad input, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "holocontact/holocontact.hpp"
#include "json_io.hpp"

namespace hc = holocontact;
using nlohmann::json;

namespace {

const std::set<std::string> kCommands = {"linear-analyze", "linear-morseify", "contact-solve",
                                         "contact-trace",  "leaf-flow",       "leaf-hessian",
                                         "scan",           "index-pugh",      "index-audit"};

struct RunConfig {
  std::string command;
  std::string input_path;
  double radius = 1.0;
  int seeds = 50;
  int samples = 10000;
  double tol = 1e-9;
  std::uint64_t rng_seed = 1;
  double c_re = 1.0;
  double c_im = 0.0;
  bool c_given = false;
  std::string output = "json";
  std::string direction = "descend";
  double eps = 1e-4;
  double r_min = 0.0;
  double r_max = 0.0;
  int steps = 17;
  int max_steps = 10000;
  int n = 4;
  std::optional<int> i;
  std::string counts;
  unsigned threads = 1;
};

json read_json_file(const std::string& path) {
  if (path.empty()) {
    throw hc::InputError("--input is required for this command");
  }
  std::ifstream in(path);
  if (!in) {
    throw hc::InputError("cannot open input file " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw hc::InputError(std::string("malformed JSON in ") + path + ": " + e.what());
  }
}

json config_json(const RunConfig& c) {
  // threads only changes scheduling, never the report, so it is not echoed
  json j{{"input", c.input_path},   {"radius", c.radius},     {"seeds", c.seeds},
         {"samples", c.samples},    {"tol", c.tol},           {"rng_seed", c.rng_seed},
         {"c", {{"re", c.c_re}, {"im", c.c_im}}},             {"output", c.output},
         {"direction", c.direction}, {"eps", c.eps},          {"r_min", c.r_min},
         {"r_max", c.r_max},        {"steps", c.steps},       {"max_steps", c.max_steps},
         {"n", c.n},                {"i", c.i ? json(*c.i) : json(nullptr)},
         {"counts", c.counts}};
  return j;
}

json cmd_linear_analyze(const RunConfig& cfg) {
  const hc::SymMatrix A = hc::io::matrix_from(read_json_file(cfg.input_path));
  const hc::LinearAnalysis a = hc::analyze(A);
  std::optional<hc::ContactLineSet> indexed;
  if (a.verdict.is_morse) {
    indexed = hc::morse_indices(A);
  }
  json lines = json::array();
  for (std::size_t j = 0; j < a.lines.lines.size(); ++j) {
    const auto& l = a.lines.lines[j];
    std::optional<int> idx;
    if (indexed) {
      idx = indexed->lines[j].morse_index;
    }
    lines.push_back(json{{"direction", hc::io::to_json(l.direction)},
                         {"sigma", l.sigma},
                         {"mu_modulus", l.mu_modulus},
                         {"morse_index", idx ? json(*idx) : json(nullptr)},
                         {"residual", l.residual}});
  }
  return json{{"is_morse", a.verdict.is_morse}, {"sigma", hc::io::to_json(a.verdict.sigma)},
              {"min_gap", a.verdict.min_gap},   {"gap_tol", a.verdict.gap_tol},
              {"lines", lines},                 {"diagnostics", a.lines.diagnostics}};
}

json cmd_linear_morseify(const RunConfig& cfg) {
  const hc::SymMatrix A = hc::io::matrix_from(read_json_file(cfg.input_path));
  const hc::SymMatrix M = hc::morseify(A, cfg.eps);
  const auto before = hc::takagi(A).sigma;
  const auto after = hc::takagi(M).sigma;
  return json{{"changed", M.entries() != A.entries()},
              {"frobenius_distance", (M.entries() - A.entries()).norm()},
              {"sigma_before", hc::io::to_json(before)},
              {"sigma_after", hc::io::to_json(after)},
              {"is_morse", hc::morse_verdict(after, hc::LinearOptions{}.gap_tol).is_morse},
              {"matrix", hc::io::to_json(M)}};
}

hc::ContactOptions contact_options(const RunConfig& cfg) {
  hc::ContactOptions opt;
  opt.accept_tol = cfg.tol;
  opt.threads = cfg.threads;
  return opt;
}

json cmd_contact_solve(const RunConfig& cfg) {
  const hc::PolyOneForm form = hc::io::form_from(read_json_file(cfg.input_path));
  const auto rep = hc::solve_on_sphere(form, cfg.radius, cfg.seeds, cfg.rng_seed, cfg.tol, contact_options(cfg));
  json pts = json::array();
  for (const auto& p : rep.points) {
    pts.push_back(hc::io::to_json(p));
  }
  return json{{"form_id", hc::form_id(form)},
              {"radius", cfg.radius},
              {"seeds_tried", rep.seeds_tried},
              {"seeds_converged", rep.seeds_converged},
              {"points", pts}};
}

json cmd_contact_trace(const RunConfig& cfg) {
  const hc::PolyOneForm form = hc::io::form_from(read_json_file(cfg.input_path));
  const auto opt = contact_options(cfg);
  const auto rep = hc::solve_on_sphere(form, cfg.radius, cfg.seeds, cfg.rng_seed, cfg.tol, opt);
  json paths = json::array();
  for (const auto& start : rep.points) {
    const auto path = hc::continue_radially(form, start, cfg.r_min, cfg.r_max, cfg.steps, opt);
    json pts = json::array();
    for (const auto& p : path.points) {
      pts.push_back(hc::io::to_json(p));
    }
    paths.push_back(json{{"form_id", path.form_id},
                         {"truncated", path.truncated},
                         {"diagnostic", path.diagnostic},
                         {"points", pts}});
  }
  return json{{"form_id", hc::form_id(form)}, {"paths", paths}};
}

struct LeafInput {
  hc::FirstIntegral integral;
  hc::Complex c;
  std::optional<hc::CVec> point;
};

LeafInput leaf_input(const RunConfig& cfg) {
  const json doc = read_json_file(cfg.input_path);
  const json& form_doc = doc.is_object() && doc.contains("form") ? doc.at("form") : doc;
  LeafInput in{hc::FirstIntegral::from_form(hc::io::form_from(form_doc)), {cfg.c_re, cfg.c_im}, std::nullopt};
  if (doc.is_object() && doc.contains("point")) {
    in.point = hc::io::cvec_from(doc.at("point"), "point");
    in.integral.form.check_dim(*in.point);
  }
  // leaf value: flags, then the document, then the leaf through the given point
  if (!cfg.c_given) {
    if (doc.is_object() && doc.contains("c")) {
      in.c = hc::io::complex_from(doc.at("c"), "c");
    } else if (in.point) {
      in.c = in.integral.value(*in.point);
    }
  }
  return in;
}

json flow_json(const hc::FlowResult& r) {
  return json{{"point", hc::io::to_json(r.point)},
              {"steps", r.steps},
              {"accepted", r.accepted},
              {"rejected", r.rejected},
              {"polish_iterations", r.polish_iterations},
              {"pivot", r.pivot},
              {"phi_trace", r.phi_trace}};
}

json cmd_leaf_flow(const RunConfig& cfg, const LeafInput& in) {
  const hc::CVec seed = in.point ? *in.point : hc::random_leaf_point(in.integral, in.c, cfg.rng_seed, 0);
  const auto chart = hc::LeafChart::at(in.integral, seed, in.c);
  const auto dir = cfg.direction == "ascend" ? hc::FlowDirection::ascend : hc::FlowDirection::descend;
  const auto r = hc::flow_to_critical(chart, seed, dir, cfg.tol, cfg.max_steps);
  json j = flow_json(r);
  j["seed"] = hc::io::to_json(seed);
  j["c"] = hc::io::to_json(in.c);
  j["direction"] = cfg.direction;
  return j;
}

json cmd_leaf_hessian(const RunConfig& cfg, const LeafInput& in) {
  hc::CVec p;
  std::string source = "input";
  if (in.point) {
    p = *in.point;
  } else {
    const hc::CVec seed = hc::random_leaf_point(in.integral, in.c, cfg.rng_seed, 0);
    const auto chart = hc::LeafChart::at(in.integral, seed, in.c);
    p = hc::flow_to_critical(chart, seed, hc::FlowDirection::descend, cfg.tol, cfg.max_steps).point.z;
    source = "descent";
  }
  const auto chart = hc::LeafChart::at(in.integral, p, in.c);
  const auto h = hc::leaf_hessian(chart, p);
  return json{{"matrix", hc::io::to_json(h.matrix)},
              {"eigenvalues", hc::io::to_json(h.eigenvalues)},
              {"negative_count", h.negative_count},
              {"point", hc::io::to_json(h.point)},
              {"pivot", h.pivot},
              {"point_source", source},
              {"c", hc::io::to_json(in.c)}};
}

json cmd_scan(const RunConfig& cfg) {
  const hc::PolyOneForm form = hc::io::form_from(read_json_file(cfg.input_path));
  const auto s = hc::transversality_scan(form, cfg.radius, cfg.samples, cfg.rng_seed);
  json worst = json::array();
  for (const auto& w : s.worst) {
    worst.push_back(json{{"z", hc::io::to_json(w.z)}, {"ratio", w.ratio}, {"sample_index", w.sample_index}});
  }
  return json{{"min_ratio", s.min_ratio}, {"samples", s.samples}, {"skipped", s.skipped}, {"worst", worst}};
}

std::vector<long long> parse_counts(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw hc::InputError("--counts must be a comma-separated list of integers");
    }
  }
  return out;
}

json cmd_index_pugh(const RunConfig& cfg) {
  json checks = json::array();
  int lo = 0;
  int hi = cfg.n;
  if (cfg.i) {
    lo = hi = *cfg.i;
  }
  bool all = true;
  for (int i = lo; i <= hi; ++i) {
    const auto c = hc::morse_sphere_identity(cfg.n, i);
    all = all && c.holds;
    checks.push_back(json{{"i", i}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}});
  }
  json j{{"n", cfg.n}, {"checks", checks}, {"all_hold", all}};
  if (!cfg.counts.empty()) {
    const auto counts = parse_counts(cfg.counts);
    j["counts"] = counts;
    j["pugh_sum"] = hc::pugh_sum(counts);
  }
  return j;
}

json cmd_index_audit(const RunConfig& cfg) {
  return hc::io::to_json(hc::disc_tangency_audit(hc::io::samples_from(read_json_file(cfg.input_path))));
}

json dispatch(const RunConfig& cfg) {
  const std::string& c = cfg.command;
  if (c == "linear-analyze") return cmd_linear_analyze(cfg);
  if (c == "linear-morseify") return cmd_linear_morseify(cfg);
  if (c == "contact-solve") return cmd_contact_solve(cfg);
  if (c == "contact-trace") return cmd_contact_trace(cfg);
  if (c == "leaf-flow") return cmd_leaf_flow(cfg, leaf_input(cfg));
  if (c == "leaf-hessian") return cmd_leaf_hessian(cfg, leaf_input(cfg));
  if (c == "scan") return cmd_scan(cfg);
  if (c == "index-pugh") return cmd_index_pugh(cfg);
  return cmd_index_audit(cfg);
}

void validate(RunConfig& cfg) {
  if (!kCommands.count(cfg.command)) {
    throw hc::InputError("unknown command '" + cfg.command + "'");
  }
  if (!(cfg.radius > 0.0)) throw hc::InputError("--radius must be > 0");
  if (!(cfg.tol > 0.0)) throw hc::InputError("--tol must be > 0");
  if (cfg.seeds < 1) throw hc::InputError("--seeds must be >= 1");
  if (cfg.samples < 1) throw hc::InputError("--samples must be >= 1");
  if (cfg.steps < 2) throw hc::InputError("--steps must be >= 2");
  if (cfg.max_steps < 1) throw hc::InputError("--max-steps must be >= 1");
  if (!(cfg.eps > 0.0)) throw hc::InputError("--eps must be > 0");
  if (cfg.r_min == 0.0) cfg.r_min = 0.5 * cfg.radius;
  if (cfg.r_max == 0.0) cfg.r_max = 2.0 * cfg.radius;
}

} // namespace

int main(int argc, char** argv) {
  // "linear analyze" -> "linear-analyze"
  std::vector<std::string> args(argv, argv + argc);
  if (args.size() >= 3 && kCommands.count(args[1] + "-" + args[2])) {
    args[1] += "-" + args[2];
    args.erase(args.begin() + 2);
  }
  std::vector<char*> cargv;
  for (auto& a : args) {
    cargv.push_back(a.data());
  }

  RunConfig cfg;
  CLI::App app{"Contacts between holomorphic foliations and spheres about the origin"};
  app.add_option("command", cfg.command, "linear-analyze | linear-morseify | contact-solve | contact-trace | "
                                         "leaf-flow | leaf-hessian | scan | index-pugh | index-audit")
      ->required();
  app.add_option("--input", cfg.input_path, "input JSON (matrix, form, leaf or boundary samples)");
  app.add_option("--radius", cfg.radius, "sphere radius")->capture_default_str();
  app.add_option("--seeds", cfg.seeds, "random Newton seeds")->capture_default_str();
  app.add_option("--samples", cfg.samples, "scan sample count")->capture_default_str();
  app.add_option("--tol", cfg.tol, "acceptance / critical-point tolerance")->capture_default_str();
  app.add_option("--rng-seed", cfg.rng_seed, "random stream key")->capture_default_str();
  auto* cre = app.add_option("--c-re", cfg.c_re, "leaf value, real part")->capture_default_str();
  auto* cim = app.add_option("--c-im", cfg.c_im, "leaf value, imaginary part")->capture_default_str();
  app.add_option("--output", cfg.output, "json | pretty")->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();
  app.add_option("--direction", cfg.direction, "descend | ascend")->check(CLI::IsMember({"descend", "ascend"}))
      ->capture_default_str();
  app.add_option("--eps", cfg.eps, "morseify budget (Frobenius norm)")->capture_default_str();
  app.add_option("--r-min", cfg.r_min, "continuation lower radius (default radius / 2)");
  app.add_option("--r-max", cfg.r_max, "continuation upper radius (default 2 radius)");
  app.add_option("--steps", cfg.steps, "continuation grid size")->capture_default_str();
  app.add_option("--max-steps", cfg.max_steps, "flow step limit")->capture_default_str();
  app.add_option("--n", cfg.n, "leaf real dimension for index-pugh")->capture_default_str();
  app.add_option("--i", cfg.i, "Morse index for index-pugh (default: all)");
  app.add_option("--counts", cfg.counts, "zero counts n_0,n_1,... for pugh_sum");
  app.add_option("--threads", cfg.threads, "worker threads for contact-solve")->capture_default_str();

  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.c_given = cre->count() > 0 || cim->count() > 0;

  try {
    validate(cfg);
    json result = dispatch(cfg);
    if (!cfg.c_given && (cfg.command == "leaf-flow" || cfg.command == "leaf-hessian")) {
      const auto c = hc::io::complex_from(result.at("c"), "c");
      cfg.c_re = c.real();
      cfg.c_im = c.imag();
    }
    const json report{{"tool", "holocontact"},
                      {"version", hc::version},
                      {"command", cfg.command},
                      {"config", config_json(cfg)},
                      {"result", std::move(result)}};
    std::cout << (cfg.output == "pretty" ? report.dump(2) : report.dump()) << "\n";
    return 0;
  } catch (const hc::InputError& e) {
    std::cerr << "holocontact: input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "holocontact: input error: " << e.what() << "\n";
    return 2;
  } catch (const hc::NumericalError& e) {
    std::cerr << "holocontact: numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "holocontact: numerical failure: " << e.what() << "\n";
    return 3;
  }
}
