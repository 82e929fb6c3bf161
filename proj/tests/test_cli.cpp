#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef ORBICOUNT_CLI_PATH
#error "ORBICOUNT_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with stderr dropped; stdout and the exit code come back.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ORBICOUNT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("count tables over the symmetric family", "[cli]") {
  const auto r = run_cli("count --m 1 --max-n 5 --format csv");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out == "n,count\n0,1\n1,1\n2,2\n3,6\n4,24\n5,120\n");

  const auto pairs = run_cli("count --m 2 --max-n 4 --format csv");
  REQUIRE(pairs.out == "n,count\n0,1\n1,1\n2,4\n3,18\n4,120\n");

  const auto triples = run_cli("count --m 3 --max-n 3 --format csv");
  REQUIRE(triples.out.find("3,48\n") != std::string::npos);

  const auto text = run_cli("count --m 2 --max-n 2");
  REQUIRE(text.exit_code == 0);
  REQUIRE(text.out == "# |Com(S_n, 2)| for n = 0..2\n0 1\n1 1\n2 4\n");
}

TEST_CASE("count tables over wreath products", "[cli]") {
  const auto r = run_cli("count --m 2 --max-n 2 --wreath-i 2 --format csv");
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out == "n,count\n0,1\n1,4\n2,40\n");

  // m = 1 rows are the group orders
  const auto orders = run_cli("count --m 1 --max-n 3 --wreath-i 3 --format csv");
  REQUIRE(orders.out == "n,count\n0,1\n1,3\n2,18\n3,162\n");
}

TEST_CASE("orbifold characteristic tables", "[cli]") {
  const auto part = run_cli("chi --m 2 --chi 1 --max-n 6 --format csv");
  REQUIRE(part.exit_code == 0);
  REQUIRE(part.out == "n,count\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n6,11\n");

  const auto zero = run_cli("chi --m 3 --chi 0 --max-n 3 --format csv");
  REQUIRE(zero.out == "n,count\n0,1\n1,0\n2,0\n3,0\n");

  const auto mac = run_cli("chi --m 1 --chi 2 --max-n 2 --format csv");
  REQUIRE(mac.out == "n,count\n0,1\n1,2\n2,3\n");

  const auto neg = run_cli("chi --m 2 --chi=-1 --max-n 4 --format csv");
  REQUIRE(neg.exit_code == 0);
  REQUIRE(neg.out == "n,count\n0,1\n1,-1\n2,-1\n3,0\n4,0\n");
}

TEST_CASE("series coefficients", "[cli]") {
  const auto r = run_cli("series --m 2 --chi 1 --order 5 --format csv");
  REQUIRE(r.out == "n,count\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n");

  const auto m3 = run_cli("series --m 3 --chi 1 --order 3 --format csv");
  REQUIRE(m3.out == "n,count\n0,1\n1,1\n2,4\n3,8\n");

  const auto egf = run_cli("series --m 2 --chi 1 --order 3 --egf --format csv");
  REQUIRE(egf.exit_code == 0);
  REQUIRE(egf.out == "n,numerator,denominator\n0,1,1\n1,1,1\n2,4,1\n3,18,1\n");
}

TEST_CASE("json output parses and round-trips", "[cli]") {
  const auto r = run_cli("count --m 1 --max-n 5 --format json");
  REQUIRE(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.at("params").at("family") == "symmetric");
  REQUIRE(j.at("params").at("m") == "1");
  REQUIRE(j.at("rows").size() == 6);
  REQUIRE(j.at("rows").at(4).at("n") == 4);
  REQUIRE(j.at("rows").at(4).at("count") == "24");
  REQUIRE(j.dump(2) + "\n" == r.out);  // re-serialization is the identity

  const auto v = run_cli("verify --suite structure --i 1,2 --format json");
  REQUIRE(v.exit_code == 0);
  const auto vj = nlohmann::json::parse(v.out);
  REQUIRE(vj.at("suite") == "structure");
  REQUIRE(vj.at("pass") == true);
  REQUIRE(vj.dump(2) + "\n" == v.out);
}

TEST_CASE("identical flags give byte-identical output", "[cli]") {
  const std::string flags = "series --m 3 --chi 2 --order 12 --format json";
  const auto a = run_cli(flags), b = run_cli(flags);
  REQUIRE(a.exit_code == 0);
  REQUIRE(a.out == b.out);
}

TEST_CASE("verification subcommand exit codes", "[cli]") {
  REQUIRE(run_cli("verify --suite eq1").exit_code == 0);
  REQUIRE(run_cli("verify --suite t1 --chi 0,1,2").exit_code == 0);
  REQUIRE(run_cli("verify --suite induction --i 1,2 --max-n 3").exit_code == 0);

  const auto text = run_cli("verify --suite structure --i 1,2");
  REQUIRE(text.exit_code == 0);
  REQUIRE(text.out.find("suite structure: PASS") != std::string::npos);
  REQUIRE(text.out.find("all checks passed") != std::string::npos);

  // fault injection: a deliberately corrupted exponent table must fail
  const auto fault = run_cli("verify --suite eq1 --inject-fault --format json");
  REQUIRE(fault.exit_code == 1);
  const auto fj = nlohmann::json::parse(fault.out);
  REQUIRE(fj.is_array());
  REQUIRE(fj.size() == 2);
  REQUIRE(fj.at(1).at("suite") == "fault-injection");
  REQUIRE(fj.at(1).at("pass") == false);

  const auto fault_text = run_cli("verify --suite eq1 --inject-fault");
  REQUIRE(fault_text.exit_code == 1);
  REQUIRE(fault_text.out.find("CHECKS FAILED") != std::string::npos);
}

TEST_CASE("usage errors exit 2", "[cli]") {
  REQUIRE(run_cli("nonsense").exit_code == 2);
  REQUIRE(run_cli("count --max-n 4").exit_code == 2);              // missing --m
  REQUIRE(run_cli("count --m 2 --max-n 4 --format yaml").exit_code == 2);
  REQUIRE(run_cli("count --m 0 --max-n 4").exit_code == 2);        // domain error from the library
  REQUIRE(run_cli("verify --suite t1 --chi=-1").exit_code == 2);   // t1 needs natural chi
  REQUIRE(run_cli("").exit_code == 2);                             // subcommand required
  REQUIRE(run_cli("--help").exit_code == 0);
}

TEST_CASE("guard overrides and guard failures", "[cli]") {
  // a starved node budget aborts the recursion path
  const auto starved = run_cli("verify --suite induction --i 1 --max-n 20 --m-set 2 --node-budget 50");
  REQUIRE(starved.exit_code == 3);

  // a raised group-order guard admits C_2 Wr S_4 into the brute-force sweep
  const auto raised = run_cli("verify --suite induction --i 2 --max-n 4 --m-set 2 --max-group-order 400 --format json");
  REQUIRE(raised.exit_code == 0);
  const auto j = nlohmann::json::parse(raised.out);
  REQUIRE(j.at("params").at("skipped_rows") == "0");
  REQUIRE(j.at("params").at("max_group_order") == "400");
}
