/*
   Copyright 2026 The eldiv authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end.
//
//   eldiv identities --q Q --max-deg N
//   eldiv survey --config PATH [--out PATH] [--resume]
//   eldiv report density   --records PATH [--d POLY] [--cutoff N] [--csv PATH]
//   eldiv report exponent  --records PATH [--cutoff N] [--csv PATH]
//   eldiv report splitting --records PATH --m POLY [--csv PATH]
//   eldiv density --q Q --d POLY --cutoff N [--zywina]
//
// Exit codes: 0 success, 1 identity or consistency failure, 2 usage error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "eldiv/analytic.hpp"
#include "eldiv/identities.hpp"
#include "eldiv/report.hpp"
#include "eldiv/survey.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

int cmd_identities(unsigned q, int max_deg) {
  const auto checks = eldiv::run_identities(q, max_deg);
  int failed = 0;
  for (const auto& c : checks) {
    if (c.passed) {
      std::cout << "PASS " << c.name << " (" << c.detail << ")\n";
    } else {
      std::cout << "FAIL " << c.name << ": " << c.detail << "\n";
      ++failed;
    }
  }
  std::cout << "identities: " << checks.size() - failed << "/" << checks.size()
            << " passed for q=" << q << ", max_deg=" << max_deg << "\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_survey(const std::string& config_path, std::string out_path,
               bool resume) {
  eldiv::SurveyConfig cfg = eldiv::parse_survey_config(read_file(config_path));
  if (out_path.empty()) out_path = cfg.out;
  if (out_path.empty())
    throw std::runtime_error(
        "no output path: pass --out or set out= in the config");
  std::string resume_from;
  if (resume && std::filesystem::exists(out_path)) resume_from = out_path;
  const eldiv::RecordFile rf = eldiv::run_survey(cfg, resume_from);
  const eldiv::PolyRing R{eldiv::Fq(rf.q)};
  eldiv::save_record_file(out_path, R, rf);
  std::cout << "surveyed " << rf.records.size() + rf.bad_primes.size()
            << " primes (" << rf.records.size() << " good, "
            << rf.bad_primes.size() << " bad) -> " << out_path << "\n";
  return kExitOk;
}

struct ReportArgs {
  std::string records;
  std::string d = "1";
  std::string m;
  int cutoff = 3;
  std::string csv;
};

int cmd_report(const std::string& kind, const ReportArgs& args) {
  const eldiv::RecordFile rf = eldiv::load_record_file(args.records);
  const eldiv::PolyRing R{eldiv::Fq(rf.q)};
  const auto dm = eldiv::DegreeModel::full_gl(rf.rank, 1);
  const auto cm = eldiv::ConstantFieldModel::trivial();
  eldiv::ReportTable table;
  if (kind == "density") {
    table = eldiv::render_density(
        R, eldiv::report_density(R, rf, R.from_text(args.d), dm, cm,
                                 args.cutoff));
  } else if (kind == "exponent") {
    table = eldiv::render_exponent(
        eldiv::report_exponent(R, rf, dm, cm, args.cutoff));
  } else {
    table = eldiv::render_splitting(
        R, eldiv::report_splitting(R, rf, R.from_text(args.m), dm, cm));
  }
  std::cout << eldiv::to_report_text(table);
  if (!args.csv.empty()) write_file(args.csv, eldiv::to_csv(table));
  return kExitOk;
}

int cmd_density(unsigned q, const std::string& d_text, int cutoff,
                bool zywina) {
  const eldiv::PolyRing R{eldiv::Fq(q)};
  const eldiv::PolyA d = R.from_text(d_text);
  const auto dm = eldiv::DegreeModel::full_gl(2, 1);
  const auto value = eldiv::truncated_delta(R, d, dm, cutoff);
  std::cout << "series value at cutoff " << cutoff << ": "
            << eldiv::decimal_string(value.value) << " (= "
            << eldiv::exact_string(value.value) << "), tail "
            << eldiv::decimal_string(value.tail) << " (= "
            << eldiv::exact_string(value.tail) << ")\n";
  if (zywina) {
    const auto prod = eldiv::zywina_product(R, d, cutoff);
    std::cout << "product form at cutoff " << cutoff << ": "
              << eldiv::decimal_string(prod.value) << " (= "
              << eldiv::exact_string(prod.value) << "), tail "
              << eldiv::decimal_string(prod.tail) << " (= "
              << eldiv::exact_string(prod.tail) << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "survey of elementary divisors of rank-2 module reductions over "
      "F_q[T]"};
  app.require_subcommand(1);

  unsigned q = 0;
  int max_deg = 0;
  auto* identities = app.add_subcommand(
      "identities", "run the exact arithmetic self-checks");
  identities->add_option("--q", q, "field size (2, 3, 4, or 5)")->required();
  identities->add_option("--max-deg", max_deg, "enumeration depth")
      ->required();

  std::string config_path, out_path;
  bool resume = false;
  auto* survey =
      app.add_subcommand("survey", "compute records for every prime in range");
  survey->add_option("--config", config_path, "key=value config file")
      ->required();
  survey->add_option("--out", out_path,
                     "output records path (overrides the config)");
  survey->add_flag("--resume", resume,
                   "keep primes already present in the output file");

  ReportArgs rargs;
  auto* report =
      app.add_subcommand("report", "summarize a record file against the "
                                   "analytic main terms");
  report->require_subcommand(1);
  auto* density_rep = report->add_subcommand(
      "density", "per-degree counts of a fixed first divisor");
  auto* exponent_rep = report->add_subcommand(
      "exponent", "per-degree second-divisor statistics");
  auto* splitting_rep = report->add_subcommand(
      "splitting", "per-degree complete-splitting counts for a modulus");
  for (auto* sub : {density_rep, exponent_rep, splitting_rep}) {
    sub->add_option("--records", rargs.records, "record file path")
        ->required();
    sub->add_option("--csv", rargs.csv, "also write the table as CSV");
  }
  density_rep->add_option("--d", rargs.d, "target first divisor (monic)");
  density_rep->add_option("--cutoff", rargs.cutoff, "series cutoff degree");
  exponent_rep->add_option("--cutoff", rargs.cutoff, "series cutoff degree");
  splitting_rep->add_option("--m", rargs.m, "tracked modulus (monic)")
      ->required();

  std::string d_text;
  int cutoff = 0;
  bool zywina = false;
  auto* density = app.add_subcommand(
      "density", "evaluate the truncated density series exactly");
  density->add_option("--q", q, "field size (2, 3, 4, or 5)")->required();
  density->add_option("--d", d_text, "target first divisor (monic)")
      ->required();
  density->add_option("--cutoff", cutoff, "series cutoff degree")->required();
  density->add_flag("--zywina", zywina, "also evaluate the product form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(identities)) return cmd_identities(q, max_deg);
    if (app.got_subcommand(survey))
      return cmd_survey(config_path, out_path, resume);
    if (app.got_subcommand(report)) {
      const std::string kind = report->get_subcommands().front()->get_name();
      return cmd_report(kind, rargs);
    }
    return cmd_density(q, d_text, cutoff, zywina);
  } catch (const eldiv::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
