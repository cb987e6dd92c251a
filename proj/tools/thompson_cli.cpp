// Command line front end. Talks to the library only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "thompson/thompson.h"

namespace {

// Prints a returned string or the error; returns the process exit code.
int emit(tf_status status, char** text) {
  if (status != TF_OK) {
    std::cerr << "error (" << tf_status_name(status) << "): " << tf_last_error_message() << "\n";
    return 2;
  }
  std::cout << *text;
  tf_string_free(*text);
  return 0;
}

// --gens names a file if one exists at that path, otherwise it is the list
// itself with ';' between elements.
std::string read_gens(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-diagram calculus of Thompson's group F: counting, certificates, sampling"};
  app.require_subcommand(1);
  app.fallthrough();
  bool no_meta = false;
  app.add_flag("--no-meta", no_meta, "Omit the timestamped meta object from JSON output");

  unsigned max_n = 20;
  auto* count = app.add_subcommand("count", "CSV of n, r_n, r_(n-1)/r_n and the gap to 1/mu");
  count->add_option("--max-n", max_n, "Largest n")->default_val(20);

  unsigned k = 2, n = 10;
  std::string model = "sum";
  auto add_sphere_flags = [&](CLI::App* cmd) {
    cmd->add_option("--k", k, "Tuple arity")->required();
    cmd->add_option("--n", n, "Radius")->required();
    cmd->add_option("--model", model, "Stratification: sum or max")->default_val("sum");
  };
  auto* sphere = app.add_subcommand("sphere", "Exact sphere size with its bounds (JSON)");
  add_sphere_flags(sphere);
  auto* density = app.add_subcommand("density-s", "Exact density of the Phi image in a sphere (JSON)");
  add_sphere_flags(density);

  std::string gens;
  std::size_t depth = 3;
  auto* certify = app.add_subcommand("certify", "Try to certify that a finite set generates F (JSON)");
  certify->add_option("--gens", gens, "File with one element per line, or ';'-separated elements")->required();
  certify->add_option("--depth", depth, "Witness search depth")->default_val(3);

  unsigned long long samples = 1000, seed = 1;
  std::size_t exp_depth = 2;
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo estimate of the generating fraction (JSON)");
  experiment->add_option("--k", k, "Tuple arity")->required();
  experiment->add_option("--n", n, "Radius")->required();
  experiment->add_option("--model", model, "Stratification: sum or max")->default_val("sum");
  experiment->add_option("--samples", samples, "Number of sampled ordered tuples")->default_val(1000);
  experiment->add_option("--depth", exp_depth, "Certificate depth")->default_val(2);
  experiment->add_option("--seed", seed, "Random seed")->default_val(1);

  std::string u;
  unsigned nat_k = 0;
  auto* nat = app.add_subcommand("nat", "Plan of the tuple map for a subgroup containing F_[u] (JSON)");
  nat->add_option("--gens", gens, "File with one element per line, or ';'-separated elements")->required();
  nat->add_option("--u", u, "Binary word u (use \"\" for the empty word)")->required();
  nat->add_option("--k", nat_k, "Tuple arity, at least m + 2")->required();

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance suite; exit 0 iff every criterion passes");

  CLI11_PARSE(app, argc, argv);
  const int meta = no_meta ? 0 : 1;
  char* out = nullptr;

  if (*count) return emit(tf_report_count_csv(max_n, &out), &out);
  if (*sphere) return emit(tf_report_sphere(k, n, model.c_str(), meta, &out), &out);
  if (*density) return emit(tf_report_density(k, n, model.c_str(), meta, &out), &out);
  if (*certify) return emit(tf_report_certify(read_gens(gens).c_str(), depth, meta, &out), &out);
  if (*experiment) {
    return emit(tf_report_experiment(k, n, model.c_str(), samples, exp_depth, seed, worker_count(), meta, &out), &out);
  }
  if (*nat) return emit(tf_report_nat(read_gens(gens).c_str(), u.c_str(), nat_k, meta, &out), &out);
  if (*verify) {
    int all_passed = 0;
    const tf_status status = tf_run_acceptance(
        nullptr, 0, worker_count(),
        [](int, int, const char* text, void*) {
          std::fputs(text, stdout);
          std::fflush(stdout);
        },
        nullptr, &all_passed);
    if (status != TF_OK) {
      std::cerr << "error (" << tf_status_name(status) << "): " << tf_last_error_message() << "\n";
      return 2;
    }
    std::cout << (all_passed ? "all criteria passed\n" : "some criteria failed\n");
    return all_passed ? 0 : 1;
  }
  return 0;
}
