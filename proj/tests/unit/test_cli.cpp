#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "rsshape/cli.hpp"

namespace fs = std::filesystem;
using rsshape::cli::run;

namespace {

struct Case {
  const char* name;
  std::vector<std::string> args;
  int exit_code;
};

// Every text output of the command line is pinned by a file in golden/.
// Set RSSHAPE_UPDATE_GOLDEN=1 to rewrite them after an intended change.
const std::vector<Case> kCases = {
    {"rs_apply", {"rs", "apply", "--sigma", "(3,5,4,7)(1,2,6)"}, 0},
    {"rs_apply_json", {"rs", "apply", "--sigma", "2 6 5 7 4 1 3", "--format", "json"}, 0},
    {"rs_apply_latex", {"rs", "apply", "--sigma", "3 1 2", "--format", "latex"}, 0},
    {"rs_apply_bogus", {"rs", "apply", "--sigma", "bogus"}, 1},
    {"rs_invert", {"rs", "invert", "--p", "1,3,7/2,4/5/6", "--q", "1,2,4/3,7/5/6"}, 0},
    {"rs_invert_mismatch", {"rs", "invert", "--p", "1,2/3", "--q", "1,2,3"}, 1},
    {"rs_shape", {"rs", "shape", "--sigma", "(1,2,6)(3,5,4,7)"}, 0},
    {"rs_trace", {"rs", "trace", "--sigma", "2 6 5 7 4 1 3"}, 0},
    {"rs_trace_json", {"rs", "trace", "--sigma", "2 1", "--format", "json"}, 0},
    {"salpha_brute", {"salpha", "--alpha", "4,2"}, 0},
    {"salpha_construct", {"salpha", "--alpha", "4,4", "--method", "construct"}, 0},
    {"salpha_json", {"salpha", "--alpha", "3,3", "--histogram", "--format", "json"}, 0},
    {"salpha_over_budget", {"salpha", "--alpha", "4,3", "--budget", "10"}, 1},
    {"salpha_sampled", {"salpha", "--alpha", "4,3", "--budget", "10", "--sample", "300", "--seed", "5"}, 0},
    {"salpha_bad_method", {"salpha", "--alpha", "4,3", "--method", "guess"}, 1},
    {"balpha", {"balpha", "--alpha", "4,2"}, 0},
    {"balpha_json", {"balpha", "--alpha", "3,1,1", "--format", "json"}, 0},
    {"color_construct", {"color", "construct", "--alpha", "8,7", "--shape", "5,3,3,3,1"}, 0},
    {"color_construct_latex", {"color", "construct", "--alpha", "5,3", "--shape", "4,2,2", "--render", "latex"}, 0},
    {"color_construct_json", {"color", "construct", "--alpha", "4,2", "--shape", "3,2,1", "--render", "json"}, 0},
    {"color_construct_cycle", {"color", "construct", "--alpha", "6", "--shape", "3,2,1"}, 0},
    {"color_construct_exception", {"color", "construct", "--alpha", "4,2", "--shape", "2,2,2"}, 0},
    {"color_construct_outside", {"color", "construct", "--alpha", "4,2", "--shape", "6"}, 1},
    {"color_search", {"color", "search", "--alpha", "5,3,2", "--shape", "4,3,2,1"}, 0},
    {"color_search_absent", {"color", "search", "--alpha", "4,2", "--shape", "2,2,2", "--count-all"}, 0},
    {"color_validate",
     {"color", "validate", "--alpha", "7,6", "--coloring", "2,2,1/1,1,1/2,2,1/2,1/1/2"},
     0},
    {"color_validate_rejected", {"color", "validate", "--alpha", "2,1", "--coloring", "2,1/1"}, 2},
    {"color_validate_wrong_counts", {"color", "validate", "--alpha", "3", "--coloring", "2,1/1"}, 1},
    {"verify_theorem", {"verify", "theorem", "--n", "6"}, 0},
    {"verify_theorem_json", {"verify", "theorem", "--n", "4", "--format", "json"}, 0},
    {"verify_containment", {"verify", "containment", "--n", "5"}, 0},
    {"conjecture_strict", {"conjecture", "strict", "--n", "8"}, 0},
    {"conjecture_coloring", {"conjecture", "coloring", "--n", "6"}, 0},
    {"conjecture_pieri", {"conjecture", "pieri", "--n", "7"}, 2},
    {"conjecture_involutions", {"conjecture", "involutions", "--n", "6"}, 0},
    {"conjecture_fixed_points", {"conjecture", "fixed-points", "--n", "6"}, 0},
    {"admissible", {"admissible", "--n", "6"}, 0},
    {"render_shape", {"render", "--shape", "4,2,1"}, 0},
    {"render_shape_latex", {"render", "--shape", "4,2,1", "--format", "latex"}, 0},
    {"render_canonical_up", {"render", "--shape", "3,3,3,2,1,1", "--canonical", "--up"}, 0},
    {"render_canonical_json", {"render", "--shape", "3,3,3,2,1,1", "--canonical", "--up", "--format", "json"}, 0},
    {"render_tableau_latex", {"render", "--tableau", "1,3/2", "--format", "latex"}, 0},
    {"render_coloring", {"render", "--coloring", "2,1/1", "--canonical", "--up"}, 0},
    {"render_empty", {"render", "--shape", ""}, 1},
    {"unknown_flag", {"rs", "apply", "--sigma", "1", "--frobnicate"}, 1},
    {"no_command", {}, 1},
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden outputs") {
  ::unsetenv("RSSHAPE_CACHE_DIR");
  const fs::path dir = RSSHAPE_GOLDEN_DIR;
  const bool update = std::getenv("RSSHAPE_UPDATE_GOLDEN") != nullptr;
  for (const Case& c : kCases) {
    const std::string name = c.name;
    CAPTURE(name);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(c.args, out, err);
    CHECK(code == c.exit_code);
    // mismatches are reports on stdout; only failures write to stderr
    CHECK(err.str().empty() == (c.exit_code != 1));
    const fs::path out_file = dir / (std::string(c.name) + ".out");
    const fs::path err_file = dir / (std::string(c.name) + ".err");
    if (update) {
      std::ofstream(out_file, std::ios::binary) << out.str();
      if (!err.str().empty()) std::ofstream(err_file, std::ios::binary) << err.str();
      continue;
    }
    REQUIRE(fs::exists(out_file));
    CHECK(out.str() == slurp(out_file));
    if (fs::exists(err_file)) CHECK(err.str() == slurp(err_file));
  }
}

TEST_CASE("job count never changes the output") {
  for (const std::vector<std::string> base : {std::vector<std::string>{"salpha", "--alpha", "5,3,1", "--histogram"},
                                               std::vector<std::string>{"verify", "theorem", "--n", "8"},
                                               std::vector<std::string>{"conjecture", "strict", "--n", "8"}}) {
    std::string first;
    for (const char* jobs : {"1", "3", "8"}) {
      for (const char* format : {"text", "json"}) {
        std::vector<std::string> args = base;
        args.insert(args.end(), {"--jobs", jobs, "--format", format});
        std::ostringstream out;
        std::ostringstream err;
        CHECK(run(args, out, err) == 0);
        if (std::string(format) == "json") {
          if (first.empty()) first = out.str();
          CHECK(out.str() == first);
        }
      }
    }
  }
}

TEST_CASE("cache directory from the environment") {
  const fs::path dir = fs::temp_directory_path() / ("rsshape-cli-cache-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  ::setenv("RSSHAPE_CACHE_DIR", dir.c_str(), 1);
  std::ostringstream out1;
  std::ostringstream out2;
  std::ostringstream err;
  CHECK(run({"salpha", "--alpha", "3,2"}, out1, err) == 0);
  CHECK(run({"salpha", "--alpha", "3,2"}, out2, err) == 0);
  CHECK(fs::exists(dir / "salpha-n5.json"));
  CHECK(out2.str().find("method = cached") != std::string::npos);
  ::unsetenv("RSSHAPE_CACHE_DIR");
  fs::remove_all(dir);
}

TEST_CASE("tableau text parsing") {
  CHECK(rsshape::cli::compact(rsshape::cli::parse_tableau("1,3,7/2,4/5/6")) == "1,3,7/2,4/5/6");
  CHECK(rsshape::cli::compact(rsshape::cli::parse_tableau(R"({"rows":[[1,2],[3]]})")) == "1,2/3");
  CHECK_THROWS(rsshape::cli::parse_tableau("1,x/2"));
  CHECK_THROWS(rsshape::cli::parse_tableau("{bad json"));
  CHECK(rsshape::cli::parse_coloring("2,1/1").counts() == std::vector<int>{2, 1});
}
