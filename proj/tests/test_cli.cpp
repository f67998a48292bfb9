#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(RINGCOVER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "ringcover_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cover reports the covering number") {
  const Run r = run("cover --family Rnq --n 2 --q 2 --side left");
  CHECK(r.status == 0);
  CHECK(r.out.find("eta=7") != std::string::npos);
  CHECK(r.out.find("certificate:") != std::string::npos);
  const Run inf = run("cover --family Rnq --n 1 --q 2 --side right --format csv");
  CHECK(inf.status == 0);
  CHECK(inf.out.find("right,infinity,uncoverable-proof") != std::string::npos);
}

TEST_CASE("verify prints a PASS table") {
  const Run r = run("verify --theorem main --qmax 4 --nmax 2 --format csv");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("q,n,order,eta_computed,eta_formula,match,elementary,forced,maximal,elapsed_ms\n", 0) == 0);
  CHECK(r.out.find("3,2,729,13,13,true,true,13,13,") != std::string::npos);
  CHECK(r.out.find("false") == std::string::npos);
  const Run t = run("verify --theorem two-sided --pmax 5");
  CHECK(t.status == 0);
  CHECK(t.out.find("PASS p=5") != std::string::npos);
}

TEST_CASE("radical of a null-ring file is the whole ring") {
  const auto path = scratch() / "null.ring";
  CHECK(run("construct --family null --p 3 --r 2 --format text --out " + path.string()).status == 0);
  const Run r = run("radical --ring " + path.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("whole ring: yes") != std::string::npos);
  const Run d = run("radical --ring " + path.string() + " --decompose --format text");
  CHECK(d.out.find("\"j_splits\": true") != std::string::npos);
}

TEST_CASE("exit statuses") {
  CHECK(run("cover").status == 2);
  CHECK(run("cover --family Rnq --ring x.ring").status == 2);
  CHECK(run("cover --ring /nonexistent/file.ring").status == 2);
  CHECK(run("cover --family bogus").status == 2);
  CHECK(run("cover --family Rnq --q 6").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("cover --family Rnq --n 3 --q 2 --max-elements 100").status == 3);
  CHECK(run("ideals --family null --p 2 --r 4 --max-ideals 3").status == 3);
  CHECK(run("scan --p 2 --d 3").status == 3);
  const auto bad = scratch() / "bad.ring";
  std::ofstream(bad) << R"({"p": 2, "dim": 2, "table": [[[0,1],[1,0]],[[0,0],[0,0]]]})";
  CHECK(run("cover --ring " + bad.string()).status == 2);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  for (const std::string args : {"cover --family Rnq --n 2 --q 3 --format text", "ideals --family Rnq --n 2 --q 2",
                                 "elementary --family null --p 3 --r 2 --side two-sided --format csv",
                                 "scan --p 2 --d 2 --format text", "verify --theorem main --qmax 3 --nmax 2 --format text"}) {
    CAPTURE(args);
    const Run a = run(args + " --threads 1");
    const Run b = run(args + " --threads 3");
    const Run c = run(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}

TEST_CASE("output directory from the environment") {
  const auto dir = scratch() / "outdir";
  std::filesystem::remove_all(dir);
  const Run r = run("cover --family Rnq --n 1 --q 3 --format csv", "RINGCOVER_OUTPUT_DIR=" + dir.string());
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream f(dir / "cover.csv");
  std::string header;
  std::getline(f, header);
  CHECK(header == "side,eta,certificate,maximal,forced,nodes,elapsed_ms");
  std::filesystem::remove_all(scratch());
}
