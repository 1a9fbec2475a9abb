#pragma once

// Command-line front end shared by the hkverify tool and the tests.
// run() parses arguments, executes one subcommand, prints a report and
// returns the exit code: 0 all checks passed, 1 some check failed,
// 2 usage or input error.

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hurwitzkit/bmf.hpp"
#include "hurwitzkit/braid.hpp"
#include "hurwitzkit/f2.hpp"
#include "hurwitzkit/hurwitz.hpp"
#include "hurwitzkit/json_io.hpp"
#include "hurwitzkit/s4orbit.hpp"

namespace hurwitzkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct Check {
  std::string name;
  std::string status;  // pass | fail | skipped
  std::string details;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  Json params = Json::object();
  Json result = Json::object();
  std::vector<std::string> conventions;
  bool has_seed = false;
  std::uint64_t seed = 0;
  int trials = 0;

  void check(const std::string& name, bool ok, const std::string& details = "") {
    checks_.push_back({name, ok ? "pass" : "fail", details});
  }
  void skip(const std::string& name, const std::string& details) { checks_.push_back({name, "skipped", details}); }

  bool ok() const {
    for (const auto& c : checks_)
      if (c.status == "fail") return false;
    return true;
  }
  const std::vector<Check>& checks() const { return checks_; }
  const std::string& command() const { return command_; }

  Json to_json(const double* elapsed_ms) const {
    Json j;
    j["schema"] = 1;
    j["command"] = command_;
    j["params"] = params;
    j["conventions"] = conventions;
    if (has_seed) {
      j["seed"] = seed;
      j["trials"] = trials;
    }
    Json cs = Json::array();
    for (const auto& c : checks_) cs.push_back(Json{{"name", c.name}, {"status", c.status}, {"details", c.details}});
    j["checks"] = cs;
    j["result"] = result;
    j["ok"] = ok();
    if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
    return j;
  }

  void print_table(std::ostream& os, const double* elapsed_ms) const {
    os << command_ << '\n';
    if (!params.empty()) os << "  params: " << params.dump() << '\n';
    if (has_seed) os << "  seed: " << seed << "  trials: " << trials << '\n';
    for (const auto& c : conventions) os << "  convention: " << c << '\n';
    for (const auto& [k, v] : result.items()) {
      std::string s = v.dump();
      if (s.size() > 160) s = s.substr(0, 157) + "...";
      os << "  " << k << ": " << s << '\n';
    }
    for (const auto& c : checks_) {
      std::string tag = c.status == "pass" ? "PASS" : (c.status == "fail" ? "FAIL" : "SKIP");
      os << "  [" << tag << "] " << c.name;
      if (!c.details.empty()) os << " -- " << c.details;
      os << '\n';
    }
    if (elapsed_ms) os << "  elapsed: " << std::fixed << std::setprecision(1) << *elapsed_ms << " ms\n";
    os << (ok() ? "OK" : "FAILED") << '\n';
  }

 private:
  std::string command_;
  std::vector<Check> checks_;
};

std::vector<int> parse_letters(const std::string& s);
SurfaceParams parse_params(const std::string& s);

Report verify_s7(int b, int d, int trials, std::uint64_t seed, int max_len);
Report verify_snake_table(int b, int d);
Report verify_nonconj(int b, int d, int trials, std::uint64_t seed, int max_len);
Report verify_cluster(int depth);
Report bmf_counts(const SurfaceParams& p);
Report bmf_gen(const SurfaceParams& p, const std::string& out_path, bool include_factorization);
Report bmf_distinguish(const SurfaceParams& p, const SurfaceParams& q);
Report arf_report(int a, int c);
Report classify_report(int a, int c, const std::string& diagram, bool enumerate);
Report obstruct_report(int a, int c, int a2, int c2);
Report braid_eq_report(int n, const std::string& w1, const std::string& w2);
Report hurwitz_act_report(const std::string& in, const std::string& word);
Report hurwitz_search_report(const std::string& from, const std::string& to, int depth, std::size_t max_nodes);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hurwitzkit::cli
