#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args, const std::string& capture = "/dev/null") {
  const std::string line =
      std::string("\"") + EITSIM_CLI_PATH + "\" " + args + " > \"" + capture + "\" 2>&1";
  const int status = std::system(line.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path dir() {
  static const fs::path d = [] {
    const fs::path p = fs::temp_directory_path() / "eitsim_cli_test";
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return d;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = dir() / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("validate echoes a config that parses back to itself") {
  const fs::path out = dir() / "echo.cfg";
  CHECK(run("validate", out.string()) == 0);
  const fs::path again = dir() / "echo2.cfg";
  CHECK(run("validate --config \"" + out.string() + "\"", again.string()) == 0);
  CHECK(slurp(out) == slurp(again));
  CHECK(slurp(out).find("omega_ab = 3266576000000000 rad/s") != std::string::npos);
}

TEST_CASE("exit codes") {
  const fs::path bad = write("bad.cfg", "N = 1 banana\n");
  const fs::path log = dir() / "log.txt";
  CHECK(run("validate --config \"" + bad.string() + "\"", log.string()) == 2);
  CHECK(slurp(log).find("line 1") != std::string::npos);
  CHECK(run("levels --config \"" + (dir() / "missing.cfg").string() + "\"") == 4);
  const fs::path blocker = write("blocker", "x");
  CHECK(run("levels --out \"" + (blocker / "sub").string() + "\"") == 4);
  CHECK(run("sweep --seed 3") == 2);
  CHECK(run("spectrum --format xml") == 2);
  CHECK(run("") == 2);
  const fs::path pole = write("pole.cfg", "gamma_ab = 0 Grad/s\nOmega2 = 0 Grad/s\nsweep_Omega2 = 0 Grad/s\n");
  CHECK(run("sweep --config \"" + pole.string() + "\" --out \"" + dir().string() + "\"") == 3);
}

TEST_CASE("format flag overrides the config") {
  const fs::path out = dir() / "fmt";
  CHECK(run("levels --format json --out \"" + out.string() + "\"") == 0);
  CHECK(fs::exists(out / "levels.json"));
  CHECK_FALSE(fs::exists(out / "levels.csv"));
}
