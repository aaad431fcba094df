// Exercises the command-line front end as a black box: spawns the binary,
// captures stdout, and checks outputs and the 0/1/2 exit-code contract.
// Usage: cli_driver <cli-path> <fixture-dir> <scratch-dir>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

int failures = 0;

void check(bool ok, const std::string& what) {
  std::cout << (ok ? "[ok] " : "[FAIL] ") << what << "\n";
  if (!ok) ++failures;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& cli, const std::string& args, const fs::path& scratch,
              const std::string& env = "") {
  const fs::path out = scratch / "stdout.txt";
  const std::string cmd = (env.empty() ? "" : env + " ") + "\"" + cli + "\" " + args + " > \"" +
                          out.string() + "\" 2> \"" + (scratch / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.output = read_file(out);
  return result;
}

bool starts_with(const std::string& text, const std::string& prefix) {
  return text.rfind(prefix, 0) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::cerr << "usage: cli_driver <cli-path> <fixture-dir> <scratch-dir>\n";
    return 2;
  }
  unsetenv("FINALG_DEFAULT_TOL");
  const std::string cli = argv[1];
  const fs::path fixtures = argv[2];
  const fs::path scratch = argv[3];
  fs::create_directories(scratch);

  const std::string z2 = (fixtures / "z2.tbl").string();
  const std::string delta1 = (fixtures / "z2_delta1.elem").string();

  {
    const RunResult r = run(cli, "validate-semigroup \"" + z2 + "\"", scratch);
    check(r.exit_code == 0 && r.output == "OK\n", "validate-semigroup accepts Z/2");
  }
  {
    write_file(scratch / "assoc_broken.tbl", "3 0\n0 1 2\n1 2 1\n2 0 1\n");
    const RunResult r = run(cli, "validate-semigroup \"" + (scratch / "assoc_broken.tbl").string() + "\"", scratch);
    check(r.exit_code == 1 && starts_with(r.output, "ASSOC-FAIL "),
          "broken associativity reports a witness and exits 1");
  }
  {
    write_file(scratch / "bad_theta.tbl", "2 1\n0 1\n1 0\n");
    const RunResult r = run(cli, "validate-semigroup \"" + (scratch / "bad_theta.tbl").string() + "\"", scratch);
    check(r.exit_code == 1 && starts_with(r.output, "IDENT-FAIL "),
          "wrong theta reports IDENT-FAIL and exits 1");
  }
  {
    write_file(scratch / "out_of_range.tbl", "2 0\n0 7\n1 0\n");
    const RunResult r = run(cli, "validate-semigroup \"" + (scratch / "out_of_range.tbl").string() + "\"", scratch);
    check(r.exit_code == 2, "out-of-range index is a parse error (exit 2)");
  }
  {
    const RunResult r = run(cli, "spectrum \"" + delta1 + "\" --tol 1e-6", scratch);
    check(r.exit_code == 0 && starts_with(r.output, "-1 "), "spectrum of delta_1 starts at -1");
  }
  {
    write_file(scratch / "e3.elem", "algebra function 3\n1 0\n1 0\n1 0\n");
    const RunResult r = run(cli, "spectrum \"" + (scratch / "e3.elem").string() + "\" --tol 1e-3", scratch);
    std::istringstream lines(r.output);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) ++count;
    check(r.exit_code == 0 && count == 1, "identity spectrum clusters to one line");
  }
  {
    write_file(scratch / "f2.elem", "algebra function 2\n2 0\n5 0\n");
    const RunResult r = run(cli, "invert \"" + (scratch / "f2.elem").string() + "\"", scratch);
    check(r.exit_code == 0 && r.output == "0.5 0\n0.20000000000000001 0\n",
          "invert prints the pointwise reciprocal");
  }
  {
    write_file(scratch / "singular.elem", "algebra function 2\n1 0\n0 0\n");
    const RunResult r = run(cli, "invert \"" + (scratch / "singular.elem").string() + "\"", scratch);
    check(r.exit_code == 1 && r.output.empty(), "invert on a singular element exits 1");
    const RunResult left = run(cli, "one-sided-inverse \"" + (scratch / "singular.elem").string() + "\" --side left", scratch);
    check(left.exit_code == 1, "no one-sided inverse exits 1");
  }
  {
    const RunResult r = run(cli, "one-sided-inverse \"" + (scratch / "f2.elem").string() + "\" --side right", scratch);
    check(r.exit_code == 0 && r.output == "0.5 0\n0.20000000000000001 0\n",
          "right inverse agrees with invert");
  }
  {
    const RunResult r = run(cli, "resolvent \"" + delta1 + "\" --lambda 1,0 --error 1e-10", scratch);
    check(r.exit_code == 1 && r.output == "OUT-OF-DISK |lambda|=1 norm=1\n",
          "resolvent on the disk boundary reports OUT-OF-DISK");
  }
  {
    const RunResult r = run(cli, "resolvent \"" + delta1 + "\" --lambda 2,0 --error 1e-10", scratch);
    check(r.exit_code == 0, "resolvent inside the disk succeeds");
  }
  {
    write_file(scratch / "conv.elem", "algebra semigroup " + z2 + "\n1 0\n-2 0\n");
    const RunResult r = run(cli, "norm \"" + (scratch / "conv.elem").string() + "\" --kind conv-l1", scratch);
    check(r.exit_code == 0 && r.output == "3\n", "conv-l1 norm of (1, -2) is 3");
    const RunResult l1 = run(cli, "norm \"" + (scratch / "conv.elem").string() + "\" --kind l1", scratch);
    check(l1.exit_code == 0 && l1.output == "3\n", "l1 coordinate norm matches");
    const RunResult op = run(cli, "norm \"" + (scratch / "conv.elem").string() + "\" --kind op-l1", scratch);
    check(op.exit_code == 1, "op-* kinds are rejected for elements");
    const RunResult sup = run(cli, "norm \"" + (scratch / "conv.elem").string() + "\" --kind sup", scratch);
    check(sup.exit_code == 1, "sup norm on a semigroup algebra is a domain error");
  }
  {
    const RunResult r = run(cli,
                            "convolve \"" + (fixtures / "z2_f.vec").string() + "\" \"" +
                                (fixtures / "z2_g.vec").string() + "\" \"" + z2 + "\"",
                            scratch);
    check(r.exit_code == 0 && r.output == "11 0\n10 0\n", "convolve reproduces (11, 10)");
  }
  {
    const RunResult r = run(cli, "check-axioms --algebra \"function 4\" --kind sup --trials 200 --seed 5", scratch);
    check(r.exit_code == 0 && r.output.find("\nOK\n") != std::string::npos,
          "check-axioms passes the sup norm on a function algebra");
    const RunResult bad = run(cli, "check-axioms --algebra \"function 4\" --kind conv-l1 --trials 10 --seed 5", scratch);
    check(bad.exit_code == 1, "check-axioms with a mismatched kind exits 1");
  }
  {
    // the env var replaces the default tolerance bundle; with a coarse
    // truncation budget the resolvent stops after 7 terms
    const RunResult coarse =
        run(cli, "resolvent \"" + delta1 + "\" --lambda 2,0", scratch, "FINALG_DEFAULT_TOL=1e-2");
    check(coarse.exit_code == 0 && coarse.output == "0.6640625 0\n0.328125 0\n",
          "FINALG_DEFAULT_TOL overrides the resolvent error budget");
    const RunResult narrow = run(cli, "spectrum \"" + delta1 + "\"", scratch);
    check(narrow.exit_code == 0 && narrow.output == "-1 0 1\n1 0 1\n",
          "default cluster radius keeps the eigenvalues separate");
  }
  {
    const RunResult r = run(cli, "no-such-command", scratch);
    check(r.exit_code == 2, "unknown subcommand exits 2");
    const RunResult missing = run(cli, "spectrum", scratch);
    check(missing.exit_code == 2, "missing required argument exits 2");
    const RunResult absent = run(cli, "spectrum \"" + (scratch / "nope.elem").string() + "\"", scratch);
    check(absent.exit_code == 2, "unreadable element file exits 2");
  }

  if (failures) {
    std::cout << failures << " CLI checks failed\n";
    return 1;
  }
  std::cout << "all CLI checks passed\n";
  return 0;
}
