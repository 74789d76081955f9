#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hnpoly.h"

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPropertyFailure = 3;
constexpr int kExitResource = 4;

struct BundleDeleter {
  void operator()(hnp_bundle* b) const { hnp_bundle_free(b); }
};
using BundlePtr = std::unique_ptr<hnp_bundle, BundleDeleter>;

struct StringDeleter {
  void operator()(char* s) const { hnp_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

struct CliError {
  int code;
  std::string message;
};

int status_exit_code(hnp_status st) {
  switch (st) {
    case HNP_OK: return kExitTrue;
    case HNP_ERROR_NOMEM: return kExitResource;
    default: return kExitUsage;
  }
}

BundlePtr parse_bundle_arg(const std::string& text) {
  hnp_bundle* b = nullptr;
  const hnp_status st = hnp_bundle_parse(text.c_str(), &b);
  if (st != HNP_OK)
    throw CliError{status_exit_code(st),
                   "bad bundle '" + text + "': " + hnp_last_error()};
  return BundlePtr(b);
}

void parse_slope_arg(const std::string& text, int64_t& num, int64_t& den) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      num = std::stoll(text, &used);
      den = 1;
      if (used != text.size()) throw std::invalid_argument("trailing characters");
    } else {
      num = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument("trailing characters");
      const std::string d = text.substr(slash + 1);
      den = std::stoll(d, &used);
      if (used != d.size()) throw std::invalid_argument("trailing characters");
      if (den <= 0) throw std::invalid_argument("denominator must be positive");
    }
  } catch (const std::exception& e) {
    throw CliError{kExitUsage, "bad slope '" + text + "': " + e.what()};
  }
}

std::string fmt_slope(int64_t num, int64_t den) {
  std::string s = std::to_string(num);
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

std::string fmt(const hnp_bundle* b) {
  char* raw = nullptr;
  if (hnp_format(b, &raw) != HNP_OK) throw CliError{kExitResource, hnp_last_error()};
  CStr s(raw);
  return std::string(s.get());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitUsage, "cannot open '" + path + "' for writing"};
  out << content;
  if (!out) throw CliError{kExitUsage, "write to '" + path + "' failed"};
}

const char* fail_condition_name(hnp_fail_condition c) {
  switch (c) {
    case HNP_FAIL_RANK_INEQUALITY: return "rank-inequality";
    case HNP_FAIL_EQUALITY_CASE: return "equality-case";
    case HNP_FAIL_POLYGON_SLOPE: return "polygon-slope";
    case HNP_FAIL_POLYGON_VERTEX: return "polygon-vertex";
    default: return "none";
  }
}

int cmd_info(const std::string& text) {
  const BundlePtr b = parse_bundle_arg(text);
  std::cout << "bundle: " << fmt(b.get()) << "\n";
  std::cout << "rank: " << hnp_rank(b.get()) << "\n";
  std::cout << "degree: " << hnp_degree(b.get()) << "\n";
  if (!hnp_is_zero(b.get())) {
    int64_t n = 0, d = 1;
    hnp_mu(b.get(), &n, &d);
    std::cout << "mu: " << fmt_slope(n, d) << "\n";
    hnp_mu_max(b.get(), &n, &d);
    std::cout << "mu_max: " << fmt_slope(n, d) << "\n";
    hnp_mu_min(b.get(), &n, &d);
    std::cout << "mu_min: " << fmt_slope(n, d) << "\n";
  }
  std::cout << "semistable: " << (hnp_is_semistable(b.get()) ? "true" : "false") << "\n";
  return kExitTrue;
}

int cmd_binary_op(const std::string& a_text, const std::string& b_text, bool is_tensor) {
  const BundlePtr a = parse_bundle_arg(a_text);
  const BundlePtr b = parse_bundle_arg(b_text);
  hnp_bundle* r = nullptr;
  const hnp_status st = is_tensor ? hnp_tensor(a.get(), b.get(), &r)
                                  : hnp_direct_sum(a.get(), b.get(), &r);
  if (st != HNP_OK) throw CliError{status_exit_code(st), hnp_last_error()};
  const BundlePtr result(r);
  std::cout << fmt(result.get()) << "\n";
  return kExitTrue;
}

int cmd_dual(const std::string& text) {
  const BundlePtr b = parse_bundle_arg(text);
  hnp_bundle* r = nullptr;
  if (hnp_dual(b.get(), &r) != HNP_OK) throw CliError{kExitUsage, hnp_last_error()};
  const BundlePtr result(r);
  std::cout << fmt(result.get()) << "\n";
  return kExitTrue;
}

int cmd_slice(const std::string& text, const std::string& mu, const std::string& mode) {
  const BundlePtr b = parse_bundle_arg(text);
  int64_t num = 0, den = 1;
  parse_slope_arg(mu, num, den);
  hnp_slice_mode m;
  if (mode == "le" || mode == "<=") m = HNP_SLICE_LE;
  else if (mode == "lt" || mode == "<") m = HNP_SLICE_LT;
  else if (mode == "ge" || mode == ">=") m = HNP_SLICE_GE;
  else if (mode == "gt" || mode == ">") m = HNP_SLICE_GT;
  else throw CliError{kExitUsage, "bad mode '" + mode + "' (expected le, lt, ge or gt)"};
  hnp_bundle* r = nullptr;
  if (hnp_slice(b.get(), num, den, m, &r) != HNP_OK)
    throw CliError{kExitUsage, hnp_last_error()};
  const BundlePtr result(r);
  std::cout << fmt(result.get()) << "\n";
  return kExitTrue;
}

int cmd_quotient(const std::string& e_text, const std::string& f_text, bool explain) {
  const BundlePtr e = parse_bundle_arg(e_text);
  const BundlePtr f = parse_bundle_arg(f_text);
  hnp_verdict v{};
  if (hnp_is_quotient(e.get(), f.get(), &v) != HNP_OK)
    throw CliError{kExitUsage, hnp_last_error()};
  std::cout << (v.answer ? "true" : "false") << "\n";
  if (explain && !v.answer && v.has_witness)
    std::cout << "fails at mu = " << fmt_slope(v.witness_num, v.witness_den) << " ("
              << fail_condition_name(v.failed) << ")\n";
  return v.answer ? kExitTrue : kExitFalse;
}

int cmd_sub(const std::string& e_text, const std::string& d_text, bool conjecture) {
  const BundlePtr e = parse_bundle_arg(e_text);
  const BundlePtr d = parse_bundle_arg(d_text);
  hnp_verdict v{};
  if (hnp_subbundle_sufficient(e.get(), d.get(), &v) != HNP_OK)
    throw CliError{kExitUsage, hnp_last_error()};
  if (!conjecture) {
    // the criterion is sufficient only: a miss proves nothing
    std::cout << (v.answer ? "true" : "inconclusive") << "\n";
    return v.answer ? kExitTrue : kExitFalse;
  }
  const int necessary = hnp_subbundle_necessary(e.get(), d.get());
  std::cout << "sufficient condition: " << (v.answer ? "true" : "false") << "\n";
  std::cout << "necessary condition (conjecturally sufficient): "
            << (necessary ? "true" : "false") << "\n";
  if (v.answer) {
    std::cout << "true\n";
    return kExitTrue;
  }
  std::cout << (necessary ? "inconclusive\n" : "false\n");
  return kExitFalse;
}

int cmd_globgen(const std::string& f_text, int64_t n) {
  const BundlePtr f = parse_bundle_arg(f_text);
  int answer = 0;
  if (hnp_is_globally_generated(f.get(), n, &answer) != HNP_OK)
    throw CliError{kExitUsage, hnp_last_error()};
  std::cout << (answer ? "true" : "false") << "\n";
  return answer ? kExitTrue : kExitFalse;
}

int cmd_c(const std::string& e_text, const std::string& f_text, const std::string& q_text) {
  const BundlePtr e = parse_bundle_arg(e_text);
  const BundlePtr f = parse_bundle_arg(f_text);
  const BundlePtr q = parse_bundle_arg(q_text);
  int64_t c = 0;
  if (hnp_c_value(e.get(), f.get(), q.get(), &c) != HNP_OK)
    throw CliError{kExitUsage, hnp_last_error()};
  std::cout << c << "\n";
  return kExitTrue;
}

int cmd_reduce(const std::string& e_text, const std::string& f_text,
               const std::string& q_text, const std::string& trace_path) {
  const BundlePtr e = parse_bundle_arg(e_text);
  const BundlePtr f = parse_bundle_arg(f_text);
  const BundlePtr q = parse_bundle_arg(q_text);
  char* raw = nullptr;
  size_t steps = 0;
  int terminated = 0;
  hnp_bundle* final_raw = nullptr;
  const hnp_status st =
      hnp_slope_reduction(e.get(), f.get(), q.get(), &raw, &steps, &terminated, &final_raw);
  if (st != HNP_OK) throw CliError{status_exit_code(st), hnp_last_error()};
  const CStr trace(raw);
  const BundlePtr final_bundle(final_raw);
  const auto parsed = nlohmann::json::parse(trace.get());
  for (size_t i = 0; i < steps; ++i) {
    const auto& step = parsed["steps"][i];
    hnp_bundle* fb = nullptr;
    hnp_bundle* ub = nullptr;
    // rebuild handles for pretty printing
    const auto from_json = [](const nlohmann::json& j, hnp_bundle** out) {
      std::vector<int64_t> nums, dens, mults;
      for (const auto& fac : j["factors"]) {
        nums.push_back(fac["slope"]["num"].get<int64_t>());
        dens.push_back(fac["slope"]["den"].get<int64_t>());
        mults.push_back(fac["mult"].get<int64_t>());
      }
      return hnp_bundle_from_factors(nums.size(), nums.data(), dens.data(), mults.data(), out);
    };
    if (from_json(step["f"], &fb) != HNP_OK || from_json(step["u"], &ub) != HNP_OK)
      throw CliError{kExitResource, hnp_last_error()};
    const BundlePtr fp(fb), up(ub);
    std::cout << "step " << i << ": f = " << fmt(fp.get()) << "; u = " << fmt(up.get())
              << "; c = " << step["c"].get<int64_t>() << "\n";
  }
  std::cout << "final: " << fmt(final_bundle.get())
            << (terminated ? "" : " (not terminated)") << "\n";
  if (!trace_path.empty()) write_file(trace_path, std::string(trace.get()) + "\n");
  return kExitTrue;
}

int cmd_verify(int64_t max_rank, int64_t max_deg, int64_t max_den, int jobs,
               const std::string& report_path) {
  const hnp_enum_bounds bounds{max_rank, max_deg, max_den, 1};
  char* raw = nullptr;
  int all_pass = 0;
  const hnp_status st = hnp_run_property_suite(&bounds, jobs, &raw, &all_pass);
  if (st != HNP_OK) throw CliError{status_exit_code(st), hnp_last_error()};
  const CStr report(raw);
  const auto parsed = nlohmann::json::parse(report.get());
  std::int64_t checked = 0, failures = 0;
  for (const auto& [name, r] : parsed["properties"].items()) {
    const auto nf = r["failures"].size();
    checked += r["checked"].get<std::int64_t>();
    failures += static_cast<std::int64_t>(nf);
    std::cout << name << ": " << r["checked"].get<std::int64_t>() << " checked";
    if (nf) {
      std::cout << ", " << nf << " FAILED";
      for (const auto& f : r["failures"]) std::cout << "\n    " << f.get<std::string>();
    }
    std::cout << "\n";
  }
  std::cout << (all_pass ? "PASS" : "FAIL") << " (" << checked << " instances";
  if (failures) std::cout << ", " << failures << " counterexamples";
  std::cout << ")\n";
  if (!report_path.empty()) write_file(report_path, std::string(report.get()) + "\n");
  return all_pass ? kExitTrue : kExitPropertyFailure;
}

int cmd_svg(const std::vector<std::string>& bundle_texts, const std::string& align,
            const std::string& out_path) {
  if (align != "left" && align != "right")
    throw CliError{kExitUsage, "bad alignment '" + align + "' (expected left or right)"};
  std::vector<BundlePtr> owned;
  std::vector<const hnp_bundle*> raw;
  for (const auto& text : bundle_texts) {
    owned.push_back(parse_bundle_arg(text));
    raw.push_back(owned.back().get());
  }
  char* svg_raw = nullptr;
  const hnp_status st =
      hnp_render_svg(raw.data(), raw.size(), align == "right" ? 1 : 0, &svg_raw);
  if (st != HNP_OK) throw CliError{status_exit_code(st), hnp_last_error()};
  const CStr svg(svg_raw);
  if (out_path.empty())
    std::cout << svg.get();
  else
    write_file(out_path, svg.get());
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Harder-Narasimhan polygon calculus for vector bundles"};
  app.require_subcommand(1);

  std::string arg_a, arg_b, arg_c, arg_mu, arg_mode;
  bool flag_explain = false, flag_conjecture = false;
  int64_t arg_n = 1;
  std::string trace_path, report_path, out_path, align = "left";
  int64_t max_rank = 4, max_deg = 4, max_den = 2;
  int jobs = 1;
  std::vector<std::string> svg_bundles;

  auto* info = app.add_subcommand("info", "rank, degree, slopes, semistability");
  info->add_option("bundle", arg_a)->required();

  auto* tensor = app.add_subcommand("tensor", "tensor product of two bundles");
  tensor->add_option("a", arg_a)->required();
  tensor->add_option("b", arg_b)->required();

  auto* sum = app.add_subcommand("sum", "direct sum of two bundles");
  sum->add_option("a", arg_a)->required();
  sum->add_option("b", arg_b)->required();

  auto* dual_cmd = app.add_subcommand("dual", "dual bundle");
  dual_cmd->add_option("bundle", arg_a)->required();

  auto* slice_cmd = app.add_subcommand("slice", "sub-sum of HN blocks by slope");
  slice_cmd->add_option("bundle", arg_a)->required();
  slice_cmd->add_option("mu", arg_mu)->required();
  slice_cmd->add_option("mode", arg_mode)->required()->description("le, lt, ge or gt");

  auto* quotient = app.add_subcommand("quotient", "is F a quotient bundle of E?");
  quotient->add_option("E", arg_a)->required();
  quotient->add_option("F", arg_b)->required();
  quotient->add_flag("--explain", flag_explain, "show the failing condition");

  auto* sub = app.add_subcommand("sub", "does D embed into E as a subbundle?");
  sub->add_option("E", arg_a)->required();
  sub->add_option("D", arg_b)->required();
  sub->add_flag("--conjecture", flag_conjecture,
                "also report the necessary, conjecturally sufficient condition");

  auto* globgen = app.add_subcommand("globgen", "is F generated by n global sections?");
  globgen->add_option("F", arg_a)->required();
  globgen->add_option("n", arg_n)->required();

  auto* cval = app.add_subcommand("c", "the quantity c_{E,F}(Q)");
  cval->add_option("E", arg_a)->required();
  cval->add_option("F", arg_b)->required();
  cval->add_option("Q", arg_c)->required();

  auto* reduce = app.add_subcommand("reduce", "slope reduction sequence of F towards Q");
  reduce->add_option("E", arg_a)->required();
  reduce->add_option("F", arg_b)->required();
  reduce->add_option("Q", arg_c)->required();
  reduce->add_option("--trace", trace_path, "write the trace as JSON");

  auto* verify = app.add_subcommand("verify", "run the exhaustive property suite");
  verify->add_option("--max-rank", max_rank, "rank bound (default 4)");
  verify->add_option("--max-deg", max_deg, "polygon height bound (default 4)");
  verify->add_option("--max-den", max_den, "slope denominator bound (default 2)");
  verify->add_option("--jobs", jobs, "parallel workers (default 1)");
  verify->add_option("--report", report_path, "write the report as JSON");

  auto* svg = app.add_subcommand("svg", "render HN polygons as SVG");
  svg->add_option("bundles", svg_bundles)->required()->expected(-1);
  svg->add_option("--align", align, "left or right (default left)");
  svg->add_option("-o,--output", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*info) return cmd_info(arg_a);
    if (*tensor) return cmd_binary_op(arg_a, arg_b, true);
    if (*sum) return cmd_binary_op(arg_a, arg_b, false);
    if (*dual_cmd) return cmd_dual(arg_a);
    if (*slice_cmd) return cmd_slice(arg_a, arg_mu, arg_mode);
    if (*quotient) return cmd_quotient(arg_a, arg_b, flag_explain);
    if (*sub) return cmd_sub(arg_a, arg_b, flag_conjecture);
    if (*globgen) return cmd_globgen(arg_a, arg_n);
    if (*cval) return cmd_c(arg_a, arg_b, arg_c);
    if (*reduce) return cmd_reduce(arg_a, arg_b, arg_c, trace_path);
    if (*verify) return cmd_verify(max_rank, max_deg, max_den, jobs, report_path);
    if (*svg) return cmd_svg(svg_bundles, align, out_path);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
