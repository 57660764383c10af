#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "lzscan/cli.hpp"
#include "lzscan/output.hpp"

using namespace lzscan;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("lzscan_cli_" + std::to_string(std::rand()) + "_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = path / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int tool(const std::string& args) {
  std::string cmd = std::string("\"") + LZSCAN_TOOL_PATH + "\" " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("parse one file to stdout") {
  TempDir d;
  Run r = run({"parse", d.file("ex.txt", "abbabbabbcabab")});
  CHECK(r.code == 0);
  CHECK(r.out == "lit 'a'\nlit 'b'\n1 @1\n6 @0\nlit 'c'\n2 @0\n2 @0\n");
}

TEST_CASE("verify, oracle and stats") {
  TempDir d;
  Run r = run({"parse", "--verify", "--oracle", "--stats", "--format", "jsonl", d.file("m.txt", "mississippi")});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.err.substr(0, r.err.find('\n')));
  CHECK(j["symbols"] == 11);
  CHECK(j["tiers"].contains("long"));
  CHECK(j["aux_bytes_per_symbol"].get<double>() > 0);
}

TEST_CASE("binary output to a file") {
  TempDir d;
  std::string in = d.file("in.txt", "to be or not to be, that is the question");
  fs::path out = d.path / "out.bin";
  Run r = run({"parse", "--format", "binary", "-o", out.string(), in});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::string bin = slurp(out);
  auto bytes = expand(decode_binary(std::vector<std::uint8_t>(bin.begin(), bin.end())));
  CHECK(std::string(bytes.begin(), bytes.end()) == slurp(in));
}

TEST_CASE("several files into a directory") {
  TempDir d;
  std::string a = d.file("a.txt", "aaaa"), b = d.file("b.txt", "abab");
  fs::path outdir = d.path / "out";
  fs::create_directories(outdir);
  CHECK(run({"parse", "-o", outdir.string(), a, b}).code == 0);
  CHECK(slurp(outdir / "a.txt.txt") == "lit 'a'\n3 @0\n");
  CHECK(slurp(outdir / "b.txt.txt") == "lit 'a'\nlit 'b'\n2 @0\n");
  CHECK(run({"parse", a, b}).code == 2);
}

TEST_CASE("usage errors") {
  TempDir d;
  std::string f = d.file("x.txt", "xyz");
  CHECK(run({}).code == 2);
  CHECK(run({"parse"}).code == 2);
  CHECK(run({"parse", "--epsilon", "0", f}).code == 2);
  CHECK(run({"parse", "--format", "xml", f}).code == 2);
  CHECK(run({"parse", (d.path / "missing").string()}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("injected fault is caught") {
  TempDir d;
  Run r = run({"parse", "--verify", "--inject-fault", d.file("x.txt", "abcabcabc")});
  CHECK(r.code == 1);
  CHECK(r.err.find("clause") != std::string::npos);
}

TEST_CASE("small selftest") {
  Run r = run({"selftest", "--binary", "6", "--ternary", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failures") != std::string::npos);
}

TEST_CASE("installed binary exit codes") {
  TempDir d;
  std::string empty = d.file("empty.txt", "");
  std::string f = d.file("f.txt", "hello hello hello");
  CHECK(tool("parse --verify " + empty) == 0);
  CHECK(tool("parse --verify " + f) == 0);
  CHECK(tool("parse --verify --inject-fault " + f) == 1);
  CHECK(tool("parse " + (d.path / "missing").string()) == 2);
  CHECK(tool("parse " + f + " " + empty) == 2);
}
