#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "twirlc/io.hpp"

using namespace twirlc;
namespace fs = std::filesystem;

namespace {

const std::string kData = TWIRLC_DATA_DIR;
const std::string kBin = std::string(TWIRLC_BIN_DIR) + "/twirlc";

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("twirlc_cli_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = kBin + " " + args + " >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

nlohmann::json read_json(const std::string& path) {
  return nlohmann::json::parse(io::read_file(path));
}

}  // namespace

TEST_CASE("color subcommand on the bundled devices") {
  TempDir tmp;
  CHECK(run("color --device " + kData + "/devices/bilinear7.json --out " +
            tmp.file("a")) == 0);
  const Coloring c = io::load_coloring(tmp.file("a") + "/coloring.json");
  CHECK(c.chi() == 3);

  // empty device colors to nothing
  io::write_file(tmp.file("empty.json"), R"({"vertices":[],"hyperedges":[]})");
  CHECK(run("color --device " + tmp.file("empty.json") + " --out " +
            tmp.file("b")) == 0);
  CHECK(io::load_coloring(tmp.file("b") + "/coloring.json").chi() == 0);
}

TEST_CASE("compile zz on the square lattice gives the 8-frame schedule") {
  TempDir tmp;
  CHECK(run("compile --device " + kData + "/devices/square.json --coloring " +
            kData + "/colorings/square_paper.json --target zz --out " +
            tmp.file("o")) == 0);
  const Schedule s = io::load_schedule(tmp.file("o") + "/schedule.json");
  CHECK(s.length == 8);
  CHECK(s.colors == 6);
  const auto j = read_json(tmp.file("o") + "/verdict.json");
  CHECK(j["universal"] == true);

  // self-consistency: the emitted group verifies against its own device
  CHECK(run("verify --group " + tmp.file("o") + "/group.json --device " + kData +
            "/devices/square.json --coloring " + kData +
            "/colorings/square_paper.json --k 2 --out " + tmp.file("v")) == 0);
}

TEST_CASE("compile zzz on the square lattice gives the 16-frame schedule") {
  TempDir tmp;
  CHECK(run("compile --device " + kData + "/devices/square.json --coloring " +
            kData + "/colorings/square_paper.json --target zzz --out " +
            tmp.file("o")) == 0);
  CHECK(io::load_schedule(tmp.file("o") + "/schedule.json").length == 16);
}

TEST_CASE("compile chirality on the trilinear array") {
  TempDir tmp;
  CHECK(run("compile --device " + kData + "/devices/trilinear.json --coloring " +
            kData + "/colorings/trilinear_paper.json --target chirality --out " +
            tmp.file("o")) == 0);
  const AdditiveCode g = io::load_code(tmp.file("o") + "/group.json");
  CHECK(g.generators.size() == 4);
  const Schedule s = io::load_schedule(tmp.file("o") + "/schedule.json");
  CHECK(s.length == 16);
  CHECK(s.lifted.size() == 9);
}

TEST_CASE("compile selective kitaev with sign flip emits the 12-slot cycle") {
  TempDir tmp;
  CHECK(run("compile --device " + kData + "/devices/kitaev_folded.json"
            " --coloring " + kData + "/colorings/kitaev_identity.json" +
            " --target selective --preserve " + kData +
            "/hamiltonians/kitaev_preserve.json --suppress " + kData +
            "/hamiltonians/kitaev_suppress.json --flip-sign --out " +
            tmp.file("o")) == 0);
  const AdditiveCode g = io::load_code(tmp.file("o") + "/group.json");
  CHECK(g.generators.size() == 2);
  const Schedule s = io::load_schedule(tmp.file("o") + "/schedule.json");
  CHECK(s.length == 12);
}

TEST_CASE("bounded kitaev compile uses all four generators") {
  TempDir tmp;
  CHECK(run("compile --device " + kData + "/devices/kitaev_folded.json"
            " --coloring " + kData + "/colorings/kitaev_identity.json" +
            " --target selective --mode bounded --preserve " + kData +
            "/hamiltonians/kitaev_preserve.json --suppress " + kData +
            "/hamiltonians/kitaev_suppress.json --out " + tmp.file("o")) == 0);
  const Schedule s = io::load_schedule(tmp.file("o") + "/schedule.json");
  CHECK(s.mode == ControlMode::Bounded);
  CHECK(s.length == 64);
}

TEST_CASE("equal quotients compile to identical groups") {
  TempDir tmp;
  CHECK(run("compile --device " + kData + "/devices/bilinear7.json" +
            " --target universal2 --out " + tmp.file("a")) == 0);
  CHECK(run("compile --device " + kData + "/devices/ring7.json --coloring " +
            kData + "/colorings/ring7_paper.json --target universal2 --out " +
            tmp.file("b")) == 0);
  const AdditiveCode ga = io::load_code(tmp.file("a") + "/group.json");
  const AdditiveCode gb = io::load_code(tmp.file("b") + "/group.json");
  REQUIRE(ga.generators.size() == gb.generators.size());
  for (std::size_t i = 0; i < ga.generators.size(); ++i)
    CHECK(ga.generators[i] == gb.generators[i]);
}

TEST_CASE("verify reports a counterexample with exit code 2") {
  TempDir tmp;
  AdditiveCode c{3, {PauliString("XIX"), PauliString("XYZ"), PauliString("YIY"),
                     PauliString("YZX")}, Alphabet::F4};
  io::save_code(c, tmp.file("group.json"));
  io::write_file(tmp.file("tri.json"),
                 R"({"vertices":[1,2,3],)"
                 R"("hyperedges":[{"sites":[1,2,3],"model":"all"}]})");
  CHECK(run("verify --group " + tmp.file("group.json") + " --device " +
            tmp.file("tri.json") + " --k 2 --out " + tmp.file("v2")) == 0);
  CHECK(run("verify --group " + tmp.file("group.json") + " --device " +
            tmp.file("tri.json") + " --k 3 --out " + tmp.file("v3")) == 2);
}

TEST_CASE("infeasible synthesis exits with code 3") {
  TempDir tmp;
  CHECK(run("compile --device " + kData + "/devices/trilinear.json --target "
            "chirality --mode bounded --out " + tmp.file("o")) == 3);
}

TEST_CASE("missing input exits with code 4") {
  TempDir tmp;
  CHECK(run("color --device /nonexistent.json --out " + tmp.file("o")) == 4);
}

TEST_CASE("scaling emits the full table") {
  TempDir tmp;
  CHECK(run("scaling --chi-min 2 --chi-max 8 --out " + tmp.file("o")) == 0);
  const std::string csv = io::read_file(tmp.file("o") + "/scaling.csv");
  CHECK(csv.find("mod-RM,6,3,8") != std::string::npos);
  CHECK(csv.find("RM,6,4,16") != std::string::npos);
  CHECK(csv.find("lin-PG-d4,6,6,64") != std::string::npos);
  CHECK(csv.find("mod-lin-PG-d4,5,4,16") != std::string::npos);
}

TEST_CASE("simulate the kitaev cycle against the analog hamiltonian") {
  TempDir tmp;
  // build the 12-slot schedule through the CLI, then simulate it
  CHECK(run("compile --device " + kData + "/devices/kitaev_folded.json"
            " --coloring " + kData + "/colorings/kitaev_identity.json" +
            " --target selective --preserve " + kData +
            "/hamiltonians/kitaev_preserve.json --suppress " + kData +
            "/hamiltonians/kitaev_suppress.json --flip-sign --out " +
            tmp.file("o")) == 0);
  CHECK(run("simulate --schedule " + tmp.file("o") + "/schedule.json" +
            " --hamiltonian " + kData + "/hamiltonians/kitaev_analog.json" +
            " --out " + tmp.file("r")) == 0);
  const auto rep = read_json(tmp.file("r") + "/report.json");
  const double slope = rep["slope"].get<double>();
  CHECK(slope > 1.8);
  CHECK(slope < 2.2);
}
