// End-to-end checks of the command-line tool: exact output bytes, exit
// codes, and determinism. Takes the binary path as argv[1].

#include <sys/wait.h>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& binary, const std::string& args) {
  const std::string cmd = binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string output;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) output.append(buf, got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-rmw>\n";
    return 2;
  }
  const std::string rmw = argv[1];

  {
    const RunResult r = run(rmw, "matrix --q 2 --n 1 --format csv");
    expect(r.exit_code == 0, "matrix csv exit code");
    expect(r.output == "b\\a,0,1\n1/2,1/2\n3/2,-1/2\n", "matrix csv bytes");
  }
  {
    const RunResult r = run(rmw, "matrix --q 1 --n 3");
    expect(r.exit_code == 2, "q=1 rejected with usage exit code");
  }
  {
    const RunResult a = run(rmw, "matrix --q 3 --n 4");
    const RunResult b = run(rmw, "matrix --q 3 --n 4");
    expect(a.exit_code == 0 && a.output == b.output, "matrix json determinism");
    expect(a.output.find("\"entries\"") != std::string::npos, "matrix json schema");
    expect(a.output.find("\"dimV\": \"15\"") != std::string::npos, "matrix json dimV");
  }
  {
    const RunResult r = run(rmw, "verify --q 3 --n 6");
    expect(r.exit_code == 0, "verify q3 n6 passes");
  }
  {
    const RunResult r = run(rmw, "verify --q-range 2:3 --n-range 0:4");
    expect(r.exit_code == 0, "verify sweep passes");
    expect(r.output.find("\"results\"") != std::string::npos, "sweep document shape");
  }
  {
    const RunResult r = run(rmw, "verify --q 2 --n 0");
    expect(r.exit_code == 0, "verify n=0 passes with grid checks skipped");
    expect(r.output.find("\"skipped\"") != std::string::npos, "n=0 skip list present");
  }
  {
    const RunResult r = run(rmw, "verify --q 2 --n 3 --checks inv,orth");
    expect(r.exit_code == 0, "check subset runs");
    expect(r.output.find("involution") != std::string::npos, "subset includes inv");
    expect(r.output.find("recurrence") == std::string::npos, "subset excludes recur");
  }
  {
    const RunResult r = run(rmw, "verify --q 2 --n 3 --checks inv,bogus");
    expect(r.exit_code == 2, "unknown check is a usage error");
  }
  {
    const RunResult r = run(rmw, "spectrum --q 2 --n 2 --format csv");
    expect(r.output == "a,d,y,x,c\n0,1,0,1,0\n1,3,2,1/2,4\n2,5,6,-1/2,12\n",
           "spectrum csv bytes");
  }
  {
    const RunResult r = run(rmw, "spectrum --q 2 --n 0");
    expect(r.exit_code == 2, "spectrum needs n >= 1");
  }
  {
    const RunResult r = run(rmw, "pieri --q 2 --b 0");
    expect(r.exit_code == 0, "pieri runs");
    expect(r.output.find("\"support\": [\n    0,\n    1\n  ]") != std::string::npos,
           "pieri b=0 support");
  }
  {
    const RunResult r = run(rmw, "oracle --q 2 --n 2");
    expect(r.exit_code == 0, "oracle within tolerance");
    expect(r.output.find("\"pass\": true") != std::string::npos, "oracle pass flag");
  }
  {
    const RunResult r = run(rmw, "oracle --q 2 --n 5 --cap 3");
    expect(r.exit_code == 2, "cap exceeded is a usage error");
  }
  {
    const RunResult r = run(rmw, "lp --q 2 --n 2 --distance 1");
    expect(r.exit_code == 0, "distance-1 lp feasible");
    expect(r.output.find("\"status\": \"feasible\"") != std::string::npos, "lp status");
  }
  {
    const RunResult r = run(rmw,
                            "lp --q 2 --n 2 --distance 1 "
                            "--constraint \"0,1,0;>=;1\" --constraint \"0,1,0;<=;0\"");
    expect(r.exit_code == 1, "contradictory lp infeasible exit code");
    expect(r.output.find("\"status\": \"infeasible\"") != std::string::npos,
           "lp infeasible status");
    expect(r.output.find("\"multipliers\"") != std::string::npos, "farkas emitted");
  }
  {
    const RunResult r = run(rmw, "lp --q 2 --n 2 --distance 1 --profile shadow");
    expect(r.exit_code == 2, "unknown profile is a usage error");
  }
  {
    const RunResult r = run(rmw, "lp --q 2 --n 2 --distance 9");
    expect(r.exit_code == 2, "distance out of range is a usage error");
  }
  {
    const RunResult direct = run(rmw, "spectrum --q 3 --n 2");
    const RunResult r = run(rmw, "spectrum --q 3 --n 2 --output /tmp/rmw_spectrum.json");
    expect(r.exit_code == 0 && r.output.empty(), "--output writes the file, not stdout");
    FILE* f = fopen("/tmp/rmw_spectrum.json", "rb");
    expect(f != nullptr, "--output file exists");
    if (f) {
      std::string content;
      char buf[4096];
      std::size_t got;
      while ((got = fread(buf, 1, sizeof(buf), f)) > 0) content.append(buf, got);
      fclose(f);
      expect(content == direct.output, "--output file matches stdout document");
      std::remove("/tmp/rmw_spectrum.json");
    }
  }
  {
    const RunResult plain = run(rmw, "spectrum --q 2 --n 2");
    const RunResult approx = run(rmw, "spectrum --q 2 --n 2 --approx");
    expect(approx.output.find("\"x_approx\"") != std::string::npos,
           "--approx adds floating companions");
    expect(plain.output.find("_approx") == std::string::npos,
           "no floats without --approx");
  }

  if (failures == 0) {
    std::cout << "all cli checks passed\n";
    return 0;
  }
  std::cerr << failures << " cli check(s) failed\n";
  return 1;
}
