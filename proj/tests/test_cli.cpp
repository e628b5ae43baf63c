#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "gtrim/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gtrim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = gtrim::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) {
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("gen") {
  const auto g2 = json_of(run({"gen", "--m", "2"}));
  const auto gens = g2["generators"].get<std::vector<std::string>>();
  CHECK(std::find(gens.begin(), gens.end(), "x*y - z^2") != gens.end());
  CHECK(g2["d"] == "x*y - z^2");
  CHECK(g2["pfaffians"].size() == 5);

  const auto g1 = json_of(run({"gen", "--m", "1"}));
  auto g1_gens = g1["generators"].get<std::vector<std::string>>();
  std::sort(g1_gens.begin(), g1_gens.end());
  CHECK(g1_gens == std::vector<std::string>{"x", "y", "z"});

  const auto bad = run({"gen", "--m", "0"});
  CHECK(bad.code == gtrim::kExitUsage);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"gen", "--m", "-3"}).code == gtrim::kExitUsage);
  CHECK(run({"gen"}).code == gtrim::kExitUsage);

  const auto t = json_of(run({"gen", "--m", "3", "--trim", "x1"}));
  CHECK(t["trim"]["selector"] == "x1");
  CHECK(t["generators"].size() == 9);
}

TEST_CASE("classify") {
  const auto d = json_of(run({"classify", "--m", "3", "--trim", "d"}));
  CHECK(d["label"] == "G(4)");
  CHECK(d["class"] == "G");
  CHECK(d["mu"] == 7);
  CHECK(d["type"] == 2);

  const auto xz = json_of(run({"classify", "--m", "2", "--trim", "x1"}));
  CHECK(xz["label"] == "H(3,2)");
  CHECK(xz["mu"] == 4);
  CHECK(xz["class_params"] == nlohmann::json({{"p", 3}, {"q", 2}}));

  const auto g3 = json_of(run({"classify", "--m", "3"}));
  CHECK(g3["gorenstein"] == true);
  CHECK(g3["label"] == "Gorenstein(7)");

  const auto xy = temp_file("gtrim_xy.json", R"({"generators": ["x", "y"]})");
  const auto r = run({"classify", "--ideal", xy.string()});
  CHECK(r.code == gtrim::kExitPrecondition);
  CHECK_FALSE(r.err.empty());

  const auto nonhom = temp_file("gtrim_nonhom.json", R"({"generators": ["x + y^2", "y^3", "z^3"]})");
  CHECK(run({"classify", "--ideal", nonhom.string()}).code == gtrim::kExitPrecondition);

  const auto garbage = temp_file("gtrim_garbage.json", "{not json");
  CHECK(run({"classify", "--ideal", garbage.string()}).code == gtrim::kExitUsage);
  CHECK(run({"classify", "--ideal", "/nonexistent/gtrim.json"}).code == gtrim::kExitUsage);
  CHECK(run({"classify", "--m", "3", "--trim", "q7"}).code == gtrim::kExitUsage);
}

TEST_CASE("classify accepts an ideal file") {
  const auto ci = temp_file("gtrim_ci.json", R"({"generators": ["x^3", "x^2*y", "x^2*z", "y^2", "z^2"]})");
  const auto j = json_of(run({"classify", "--ideal", ci.string()}));
  CHECK(j["label"] == "B");
  CHECK(j["mu"] == 5);
  CHECK(j["ranks"] == nlohmann::json({1, 5, 6, 2}));
}

TEST_CASE("gen output round-trips into classify") {
  const auto gen = run({"gen", "--m", "4", "--trim", "y2"});
  REQUIRE(gen.code == 0);
  const auto file = temp_file("gtrim_family.json", gen.out);
  const auto from_file = json_of(run({"classify", "--ideal", file.string()}));
  const auto direct = json_of(run({"classify", "--m", "4", "--trim", "y2"}));
  CHECK(from_file == direct);
  CHECK(direct["label"] == "G(5)");
}

TEST_CASE("table") {
  auto labels = [](const nlohmann::json& rows) {
    std::map<std::string, int> count;
    for (const auto& row : rows) ++count[row["class"].get<std::string>()];
    return count;
  };
  const auto t3 = json_of(run({"table", "--m", "3..3"}));
  CHECK(t3.size() == 7);
  CHECK(labels(t3) == std::map<std::string, int>{{"G(3)", 4}, {"G(4)", 3}});

  const auto t2 = json_of(run({"table", "--m", "2..2"}));
  CHECK(labels(t2) == std::map<std::string, int>{{"B", 3}, {"H(3,2)", 2}});

  const auto t4 = json_of(run({"table", "--m", "4..4"}));
  CHECK(t4.size() == 9);
  for (const auto& row : t4) {
    const int r = row["r"];
    CHECK((r == 5 || r == 6));
  }

  const auto csv = run({"--format", "csv", "table", "--m", "2..3"});
  REQUIRE(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "m,selector,g,mu,type,p,q,r,class");
  int n = 0;
  for (std::string line; std::getline(lines, line);) n += !line.empty();
  CHECK(n == 12);
  CHECK(csv.out.find("2,x1,\"x*z\",4,2,3,2,2,\"H(3,2)\"") != std::string::npos);

  CHECK(run({"table", "--m", "1..2"}).code == gtrim::kExitUsage);
  CHECK(run({"table", "--m", "3..2"}).code == gtrim::kExitUsage);
  CHECK(run({"table", "--m", "three"}).code == gtrim::kExitUsage);
}

TEST_CASE("hilbert") {
  const auto h2 = json_of(run({"hilbert", "--m", "2"}));
  CHECK(h2["hilbert"] == nlohmann::json({1, 3, 1}));
  CHECK(h2["agrees"] == true);
  const auto h4 = json_of(run({"hilbert", "--m", "4"}));
  CHECK(h4["hilbert"] == nlohmann::json({1, 3, 6, 10, 6, 3, 1}));
  CHECK(h4["total"] == 30);
  CHECK(run({"hilbert", "--m", "1"}).code == gtrim::kExitUsage);
}

TEST_CASE("global options") {
  CHECK(run({"--char", "4", "gen", "--m", "2"}).code == gtrim::kExitUsage);
  CHECK(run({"--format", "xml", "gen", "--m", "2"}).code == gtrim::kExitUsage);
  CHECK(run({"--order", "deglex", "gen", "--m", "2"}).code == gtrim::kExitUsage);
  CHECK(run({"frobnicate"}).code == gtrim::kExitUsage);
  CHECK(run({}).code == gtrim::kExitUsage);

  const auto q = json_of(run({"--char", "0", "classify", "--m", "3", "--trim", "x0"}));
  CHECK(q["label"] == "G(4)");
  const auto lex = json_of(run({"--order", "lex", "classify", "--m", "3", "--trim", "x2"}));
  CHECK(lex["label"] == "G(3)");

  const auto text = run({"--format", "text", "classify", "--m", "2", "--trim", "x1"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("H(3,2)") != std::string::npos);
}

TEST_CASE("deterministic output and --out") {
  const std::vector<std::string> args{"--format", "csv", "table", "--m", "2..4"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const auto path = std::filesystem::temp_directory_path() / "gtrim_out.csv";
  std::filesystem::remove(path);
  auto with_out = args;
  with_out.insert(with_out.begin(), {"--out", path.string()});
  const auto c = run(with_out);
  CHECK(c.code == 0);
  CHECK(c.out.empty());
  std::ifstream in(path);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == a.out);
}
