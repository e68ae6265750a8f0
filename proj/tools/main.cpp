#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apseries/registry.hpp"

namespace {

// Writes reports in the requested format; returns the process exit code
// (0 all pass, 1 any fail or unreached tolerance, 2 usage/output problem).
int emit(const std::vector<apseries::VerificationReport>& reports,
         const std::string& format, const std::string& out_path) {
  std::string text;
  if (format == "json")
    text = apseries::format_json(reports);
  else if (format == "csv")
    text = apseries::format_csv(reports);
  else
    text = apseries::format_text(reports);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return 2;
    }
    out << text;
  }
  return apseries::exit_code_for(reports);
}

apseries::ParamMap parse_params(const std::vector<std::string>& kvs) {
  apseries::ParamMap pm;
  for (const std::string& s : kvs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("--param expects key=value, got '" + s + "'");
    pm[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return pm;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numeric verification of central-binomial and hypergeometric "
               "series identities"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from an INI-style key=value file");

  auto* list = app.add_subcommand("list", "list the registered identity checks");

  auto* verify = app.add_subcommand("verify", "run one identity check");
  std::string id;
  std::vector<std::string> params;
  std::string tol;
  long bits = 256;
  std::string format = "text";
  std::string out_path;
  verify->add_option("--id", id, "identity id (see `list`)")->required();
  verify->add_option("--param", params,
                     "key=value narrowing the sample grid; repeatable");
  verify->add_option("--tol", tol,
                     "comparison tolerance overriding the per-sample default");
  verify->add_option("--prec-bits,--bits", bits, "working precision in bits")
      ->check(CLI::Range(64L, 16384L));
  verify->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--out", out_path, "write the report here instead of stdout");

  auto* suite = app.add_subcommand("suite", "run many identity checks");
  std::vector<std::string> ids;
  int jobs = 1;
  suite->add_option("--ids", ids, "comma-separated identity ids; default all")
      ->delimiter(',');
  suite->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
  suite->add_option("--prec-bits,--bits", bits, "working precision in bits")
      ->check(CLI::Range(64L, 16384L));
  suite->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  suite->add_option("--out", out_path, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // 0 covers --help and --version
  }

  try {
    if (list->parsed()) {
      for (const apseries::IdentityCase& c : apseries::identity_cases()) {
        std::printf("%-4s  tol=%-6s %s\n", c.id.c_str(), c.default_tolerance.c_str(),
                    c.title.c_str());
        std::printf("      grid: %s\n", c.params_doc.c_str());
      }
      return 0;
    }
    if (verify->parsed()) {
      const apseries::IdentityCase* c = apseries::find_case(id);
      if (!c) {
        std::cerr << "unknown identity id: " << id << "\n";
        return 2;
      }
      apseries::ParamMap pm = parse_params(params);
      if (!tol.empty()) pm["tol"] = tol;
      auto reports = c->run(pm, bits);
      return emit(reports, format, out_path);
    }
    apseries::SuiteOptions opt;
    opt.ids = ids;
    opt.jobs = jobs;
    opt.precision_bits = bits;
    auto reports = apseries::run_suite(opt);
    return emit(reports, format, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
