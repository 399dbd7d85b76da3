#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "linclon/cli.hpp"
#include "linclon/json_io.hpp"

using namespace linclon;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "linclon_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("bound") {
  const auto r = run({"bound", "--F", R"({"p":2})", "--K", R"({"p":3})"});
  CHECK(r.code == cli::kSuccess);
  CHECK(json::parse(r.out).at("bound") == 15);
}

TEST_CASE("enumerate writes JSON and a DOT file with one node per submodule") {
  const auto dot = scratch("enum.dot");
  const auto r = run({"enumerate", "--p", "2", "--K", R"({"p":3})", "--dot", dot.string()});
  REQUIRE(r.code == cli::kSuccess);
  const json j = json::parse(r.out);
  CHECK(j.at("size") == 6);
  CHECK(j.at("bound") == 15);
  const std::string text = slurp(dot);
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = text.find("label=", pos)) != std::string::npos; ++pos) ++nodes;
  CHECK(nodes == 6);
  // a single prime field --F works in place of --p
  CHECK(json::parse(run({"enumerate", "--F", R"({"p":2})", "--K", R"({"p":3})"}).out).at("size") == 6);
}

TEST_CASE("decompose of a constant has one nonzero component") {
  const auto f = scratch("const.json");
  write(f, R"({"arity":1,"table":[3,3,3,3,3,3]})");
  const auto r = run({"decompose", "--K", R"([{"p":2},{"p":3}])", "--F", R"({"p":5})", f.string()});
  REQUIRE(r.code == cli::kSuccess);
  const json j = json::parse(r.out);
  CHECK(j.at("components").size() == 4);
  int nonzero = 0;
  for (const auto& c : j.at("components")) nonzero += !c.at("zero").get<bool>();
  CHECK(nonzero == 1);
  CHECK(j.at("reconstructs") == true);
}

TEST_CASE("decompose samples from the seed") {
  const std::vector<std::string> args{"decompose", "--K", R"({"p":3})", "--F", R"({"p":2})", "--arity", "2", "--seed", "9"};
  CHECK(run(args).out == run(args).out);
  auto other = args;
  other.back() = "10";
  CHECK(run(args).out != run(other).out);
}

TEST_CASE("closure, unary-check and tk") {
  const auto g = scratch("gens.json");
  write(g, R"([{"arity":2,"table":[0,1,0,1,0,0,1,1,0]}])");
  auto r = run({"closure", "--K", R"({"p":3})", "--F", R"({"p":2})", "--arity", "2", g.string()});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(json::parse(r.out).at("arity") == 2);
  r = run({"unary-check", "--K", R"({"p":3})", "--F", R"({"p":2})", "--k-max", "2", g.string()});
  CHECK(r.code == cli::kSuccess);
  CHECK(json::parse(r.out).at("equal") == true);

  const auto u = scratch("unary.json");
  write(u, R"({"arity":1,"table":[0,1,1]})");
  r = run({"tk", "--K", R"({"p":3})", "--F", R"({"p":2})", "--arity", "3", u.string()});
  CHECK(r.code == cli::kSuccess);
  CHECK(json::parse(r.out).at("consistent") == true);
}

TEST_CASE("assemble") {
  const auto r = run({"assemble", "--K", R"({"p":3})", "--F", R"([{"p":2},{"p":5}])"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(json::parse(r.out).at("size") == 48);
}

TEST_CASE("exit codes") {
  CHECK(run({"bound", "--F", R"({"p":3})", "--K", R"({"p":3})"}).code == cli::kHypothesisViolated);
  CHECK(run({"bound", "--F", R"({"p":4})", "--K", R"({"p":3})"}).code == cli::kMalformedInput);
  CHECK(run({"bound", "--F", "{not json", "--K", R"({"p":3})"}).code == cli::kMalformedInput);
  CHECK(run({"frobnicate"}).code == cli::kMalformedInput);
  CHECK(run({"decompose", "--K", R"({"p":3})", "--F", R"({"p":2})", "--arity", "12", "--budget", "1000"}).code ==
        cli::kBudgetExceeded);
  CHECK(run({"enumerate", "--p", "2", "--K", R"({"p":3})", "--strategy", "sideways"}).code == cli::kMalformedInput);
  CHECK(cli::exit_code_for(ErrorKind::StrategyMismatch) == cli::kInternalBreach);
}

TEST_CASE("--out and @file inputs") {
  const auto k = scratch("K.json"), out = scratch("bound.json");
  write(k, R"({"factors":[{"p":3}]})");
  const auto r = run({"bound", "--F", R"({"p":2})", "--K", "@" + k.string(), "--out", out.string()});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.empty());
  CHECK(json::parse(slurp(out)).at("bound") == 15);
  CHECK(!std::filesystem::exists(out.string() + ".tmp"));
}
