#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ohl/error.hpp"
#include "ohl/io.hpp"

namespace fs = std::filesystem;
using namespace ohl;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string utc_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::OutOfBounds, "cannot write " + path.string());
  out << text;
}

// The flag wins over OHL_MAX_APEX, which wins over the built-in default.
std::size_t search_bound(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("OHL_MAX_APEX"); env && *env) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(Errc::OutOfBounds, "OHL_MAX_APEX must be a non-negative integer");
  }
  return io::RunOptions{}.search_bound;
}

struct Checked {
  io::RunResult result;
  std::string report;
};

Checked check_text(const std::string& text, std::size_t bound) {
  io::RunResult r = io::run_structure(io::parse_structure(text), io::RunOptions{bound});
  return {r, io::report_json(r, io::fnv1a64(text), utc_now()).dump(2) + "\n"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ohl: check oplax Hopf structures in spans of enriched families"};
  app.require_subcommand(1);

  std::string file, report_path;
  std::optional<std::size_t> bounds;
  bool quiet = false;
  auto* check = app.add_subcommand("check", "verify a structure file");
  check->add_option("file", file, "structure file (JSON)")->required();
  check->add_option("--bounds", bounds, "permutation search bound for 2-cell comparison");
  check->add_option("--report", report_path, "write the machine-readable report here");
  check->add_flag("--quiet", quiet, "print only the summary line");

  std::string demo_name, out_dir = ".";
  io::DemoParams params;
  auto* demo = app.add_subcommand("demo", "generate a structure and its report");
  demo->add_option("name", demo_name, "x2, groupoid, group-hopf or mat")->required();
  demo->add_option("--size", params.size, "carrier or object count (1..4)");
  demo->add_option("--group", params.group, "z2 or z3");
  demo->add_option("--p", params.p, "field characteristic (prime, at most 97)");
  demo->add_option("--max-n", params.max_n, "largest matrix dimension (1..4)");
  demo->add_option("--out", out_dir, "output directory");
  demo->add_option("--bounds", bounds, "permutation search bound for 2-cell comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*check) {
      Checked c = check_text(read_file(file), search_bound(bounds));
      if (!report_path.empty()) write_file(report_path, c.report);
      std::string text = io::report_text(c.result);
      if (quiet) text = text.substr(text.rfind('\n', text.size() - 2) + 1);
      std::cout << text;
      return c.result.report.passed() ? kExitPass : kExitFail;
    }
    std::string doc = io::demo_structure(demo_name, params).dump(2) + "\n";
    Checked c = check_text(doc, search_bound(bounds));
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / (demo_name + ".json"), doc);
    write_file(fs::path(out_dir) / (demo_name + ".report.json"), c.report);
    std::cout << io::report_text(c.result);
    return c.result.report.passed() ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "ohl: " << e.what() << "\n";
    return kExitInput;
  }
}
