#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "hypersep/constructions.hpp"
#include "hypersep/io.hpp"

using namespace hypersep;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  args.insert(args.begin(), "hypersep");
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json last_json(const Run& r) {
  const auto end = r.out.find_last_not_of('\n');
  const auto start = r.out.rfind('\n', end);
  return Json::parse(r.out.substr(start == std::string::npos ? 0 : start + 1));
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / "hypersep_cli_test") {
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("csv fields are quoted only when needed") {
  CHECK(cli::csv_field("2134/1") == "2134/1");
  CHECK(cli::csv_field("") == "");
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(cli::csv_field("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("construct, verify and audit") {
  TempDir dir;
  const std::string doc = dir / "e1.json";
  const Run built = run({"construct", "example1", "--s", "1", "--r", "3", "--c", "1", "-o", doc});
  REQUIRE(built.code == cli::kExitOk);
  const Json summary = last_json(built);
  CHECK(summary["edges"] == 2134);
  CHECK(summary["prediction_matches"] == true);
  CHECK(summary["certificate_valid"] == true);

  const Json file = Json::parse(read_file(doc));
  CHECK(parse_hypergraph_json(file["hypergraph"].dump()) == example1(1, 3, 1).graph);
  write_file(dir / "h.json", file["hypergraph"].dump());
  write_file(dir / "t.json", file["tree"].dump());

  const Run ok = run({"verify", "tree", "-H", dir / "h.json", "-T", dir / "t.json", "--k", "6", "--c", "1"});
  CHECK(ok.code == cli::kExitOk);
  CHECK(last_json(ok)["valid"] == true);
  const Run tight = run({"verify", "tree", "-H", doc, "-T", doc, "--k", "6", "--c", "1/2"});
  CHECK(tight.code == cli::kExitInvalid);
  CHECK(last_json(tight)["valid"] == false);

  const Run audit = run({"audit", "-H", doc, "-T", doc});
  CHECK(audit.code == cli::kExitOk);

  const Run chain = run({"construct", "example1-chain", "--s", "1", "--r", "3", "--c", "3", "--m", "2", "-o", dir / "c.json"});
  CHECK(chain.code == cli::kExitOk);
  const Run p = run({"construct", "example2", "--s", "1", "--r", "3", "--p-num", "1", "--p-den", "6", "-o", dir / "p.json"});
  CHECK(p.code == cli::kExitOk);
  CHECK(last_json(p)["edges"] == 2826);
}

TEST_CASE("decompose and membership") {
  TempDir dir;
  write_file(dir / "m.json", hypergraph_json(mader_hypergraph(2, 3, 3).graph));
  const Run member = run({"verify", "membership", "-H", dir / "m.json", "--k", "3", "--min-size", "5"});
  CHECK(member.code == cli::kExitOk);
  CHECK(last_json(member)["member"] == true);

  write_file(dir / "k.json", hypergraph_json(Hypergraph::complete(3, 6)));
  const Run found = run({"verify", "membership", "-H", dir / "k.json", "--k", "3", "--min-size", "5"});
  CHECK(found.code == cli::kExitInvalid);
  CHECK(last_json(found)["witness"].size() == 6);

  write_file(dir / "e.json", hypergraph_json(example1(1, 3, 1).graph));
  const Run dec = run({"decompose", "-H", dir / "e.json", "--k", "6", "--c", "1", "-o", dir / "tree.json"});
  CHECK(dec.code == cli::kExitOk);
  CHECK(last_json(dec)["atoms"] == 4);
  const Run again = run({"verify", "tree", "-H", dir / "e.json", "-T", dir / "tree.json", "--k", "6", "--c", "1"});
  CHECK(again.code == cli::kExitOk);

  write_file(dir / "k9.json", hypergraph_json(Hypergraph::complete(3, 9)));
  const Run stuck = run({"decompose", "-H", dir / "k9.json", "--k", "3", "--c", "1", "-o", dir / "k9t.json"});
  CHECK(stuck.code == cli::kExitInvalid);
  CHECK(last_json(stuck)["stuck_is_k1_connected"] == true);
}

TEST_CASE("bounds reports are byte-reproducible") {
  TempDir dir;
  const Run a = run({"bounds", "--n", "30", "--k", "6", "--r", "3", "--c", "1", "--csv", dir / "a.csv"});
  const Run b = run({"bounds", "--n", "30", "--k", "6", "--r", "3", "--c", "1", "--csv", dir / "b.csv"});
  REQUIRE(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  CHECK(read_file(dir / "a.csv") == read_file(dir / "b.csv"));
  CHECK(last_json(a)["N_bound"]["value"] == "2134/1");

  const Run grid = run({"bounds", "--r", "3", "--c", "1", "--grid", "n=30:32,k=6", "--csv", dir / "g.csv"});
  REQUIRE(grid.code == cli::kExitOk);
  CHECK(last_json(grid).size() == 3);
  const std::string csv = read_file(dir / "g.csv");
  CHECK(csv.rfind("n,k,r,c,N_bound,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.find("\r\n") != std::string::npos);
}

TEST_CASE("oracle reports") {
  const Run a = run({"oracle", "--n", "5", "--k", "1", "--r", "3", "--min-size", "3", "--threads", "1"});
  const Run b = run({"oracle", "--n", "5", "--k", "1", "--r", "3", "--min-size", "3", "--threads", "3"});
  REQUIRE(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  CHECK(last_json(a)["witness_verified"] == true);
}

TEST_CASE("exit codes") {
  TempDir dir;
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"construct", "example1", "--s", "1", "--r", "3", "--c", "1"}).code == cli::kExitUsage);
  CHECK(run({"construct", "example1", "--s", "1", "--r", "3", "--c", "1", "--q", "2", "-o", dir / "x.json"}).code ==
        cli::kExitUsage);
  CHECK(run({"bounds", "--n", "30", "--k", "6", "--r", "3", "--c", "one"}).code == cli::kExitUsage);
  CHECK(run({"verify", "tree", "-H", dir / "missing.json", "-T", dir / "missing.json", "--k", "1", "--c", "1"}).code ==
        cli::kExitUsage);
  write_file(dir / "bad.json", R"({"r":3,"n":4,"edges":[[0,1]]})");
  const Run bad = run({"verify", "membership", "-H", dir / "bad.json", "--k", "1", "--min-size", "3"});
  CHECK(bad.code == cli::kExitInvalid);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"--help"}).code == cli::kExitOk);
}

}
