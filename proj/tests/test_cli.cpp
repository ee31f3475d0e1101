#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "fracdim/cli.hpp"
#include "fracdim/error.hpp"
#include "fracdim/json_io.hpp"
#include "fracdim/tables.hpp"

using namespace fracdim;
using io::json;
namespace fs = std::filesystem;

namespace {

const std::string kData = FRACDIM_DATA_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "fracdim_test_cli";
  fs::create_directories(dir);
  return dir;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::IoError;
}

struct Result {
  int code;
  json report;
  std::string err;
};

Result run_in_process(cli::RunConfig c) {
  std::ostringstream out, err;
  int code = cli::run(c, out, err);
  json report;
  if (!out.str().empty()) report = json::parse(out.str());
  return {code, report, err.str()};
}

int run_binary(const std::string& args) {
  std::string cmd = std::string(FRACDIM_BINARY) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("grid parsing") {
  CHECK(io::parse_grid("1/4") == std::vector<Scalar>{Scalar(1, 4)});
  CHECK(io::parse_grid("1/3,1/9") == std::vector<Scalar>{Scalar(1, 3), Scalar(1, 9)});
  auto g = io::parse_grid("2^-4..2^-6");
  CHECK(g == std::vector<Scalar>{Scalar(1, 16), Scalar(1, 32), Scalar(1, 64)});
  CHECK(io::parse_grid("3^-1..3^-1") == std::vector<Scalar>{Scalar(1, 3)});
  CHECK(code_of([] { io::parse_grid(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_grid("2^-1..3^-4"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_grid("2^x..2^-4"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_grid("0,1/2"); }) == ErrorCode::NonPositiveScale);
}

TEST_CASE("cantor spec and system json") {
  json j = json::parse(R"({"kind":"explicit","ratios":["1/4","2/5"],"horizon":9})");
  auto spec = io::cantor_spec_from_json(j);
  CHECK(spec.ratio(3) == Scalar(1, 4));
  CHECK(io::cantor_spec_from_json(io::to_json(spec)) == spec);
  CHECK(code_of([] { io::cantor_spec_from_json(json::parse(R"({"kind":"constant","ratios":["1/2"],"horizon":3})")); }) ==
        ErrorCode::RatioOutOfRange);
  CHECK(code_of([] { io::cantor_spec_from_json(json::parse(R"({"kind":"wavy","ratios":["1/3"],"horizon":3})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { io::cantor_spec_from_json(json::parse(R"({"kind":"constant","ratios":[0.3],"horizon":3})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { io::cantor_spec_from_json(json::parse(R"({"kind":"constant","ratios":["1/3"]})")); }) ==
        ErrorCode::ParseError);

  json s = json::parse(R"({"cyclic":false,"levels":[[{"ratio":"1/2","offset":"3/4","orientation":-1}]]})");
  auto sys = io::system_from_json(s);
  CHECK(sys.level(1).front().orientation == -1);
  CHECK(io::system_from_json(io::to_json(sys)) == sys);
  CHECK(code_of([] { io::system_from_json(json::parse(R"({"cyclic":true,"levels":[[{"ratio":"3/2","offset":"0"}]]})")); }) ==
        ErrorCode::RatioOutOfRange);
}

TEST_CASE("shipped data files round-trip") {
  std::size_t seen = 0;
  for (const auto& entry : fs::directory_iterator(kData)) {
    if (entry.path().extension() != ".json") continue;
    ++seen;
    json j = io::read_json_file(entry.path().string());
    CAPTURE(entry.path().string());
    if (j.contains("open_intervals") || (j.contains("levels") && !j.contains("cyclic"))) {
      auto u = io::open_sets_from_json(j);
      CHECK(io::open_sets_from_json(io::to_json(u)) == u);
    } else if (j.contains("cyclic")) {
      auto sys = io::system_from_json(j);
      CHECK(io::system_from_json(io::to_json(sys)) == sys);
    } else if (j.contains("horizon")) {
      auto spec = io::cantor_spec_from_json(j);
      CHECK(io::cantor_spec_from_json(io::to_json(spec)) == spec);
    } else {
      auto spec = io::set_spec_from_json(j);
      CHECK(io::set_spec_from_json(io::to_json(spec)) == spec);
      CHECK(!io::materialize(spec).set.empty());
    }
  }
  CHECK(seen >= 10);
}

TEST_CASE("set materialization") {
  auto geo = io::materialize(io::set_spec_from_json(json::parse(R"({"kind":"geometric","ratio":"1/2","n_max":3})")));
  CHECK(geo.set == PointSet({0, 1, Scalar(1, 2), Scalar(1, 4), Scalar(1, 8)}).to_interval_set());
  auto inv = io::materialize(io::set_spec_from_json(json::parse(R"({"kind":"inverse-powers","alpha":"1","n_max":4})")));
  CHECK(inv.approximations.empty());
  CHECK(inv.set.size() == 5);
  CHECK(inv.set.contains(Scalar(1, 3)));
  auto half = io::materialize(io::set_spec_from_json(json::parse(R"({"kind":"inverse-powers","alpha":"1/2","n_max":4})")));
  CHECK(half.approximations.size() == 1);
  CHECK(half.set.contains(Scalar(1, 2)));
  CHECK(code_of([] {
          io::materialize(io::set_spec_from_json(json::parse(
              R"({"kind":"cantor-prefractal","spec":{"kind":"constant","ratios":["1/3"],"horizon":40},"depth":25})")));
        }) == ErrorCode::TooLarge);
  CHECK(code_of([] { io::set_spec_from_json(json::parse(R"({"kind":"intervals","intervals":[["1","0"]]})")); }) ==
        ErrorCode::MalformedInterval);
}

TEST_CASE("tables") {
  std::vector<BoxCount> counts{{Scalar(1, 2), 1}, {Scalar(1, 4), 2}, {Scalar(1, 8), 4}, {Scalar(1, 16), 8}};
  std::string t = io::loglog_table(counts);
  CHECK(t.rfind("delta,count,log10_inv_delta,log10_count\n", 0) == 0);
  CHECK(std::count(t.begin(), t.end(), '\n') == 5);
  CHECK(t.back() == '\n');
  CHECK(t.find("1/16,8,") != std::string::npos);

  LocalCoverProfile p;
  p.rows.push_back({Scalar(1, 4), Scalar(1, 16), 3, 2, Scalar(0), Scalar(1)});
  CHECK(io::profile_table(p) == "delta,rho,sup_count,inf_count,ratio\n1/4,1/16,3,2,1.5\n");

  fs::path path = scratch_dir() / "empty.csv";
  fs::remove(path);
  std::vector<BoxCount> none;
  CHECK(code_of([&] { io::emit_loglog_table(none, path.string()); }) == ErrorCode::EmptySet);
  CHECK(!fs::exists(path));
}

TEST_CASE("run: cantor") {
  cli::RunConfig c;
  c.command = cli::Command::Cantor;
  c.input = data("prop37.json");
  c.depth = 12;
  auto r = run_in_process(c);
  REQUIRE(r.code == 0);
  CHECK(r.report["prefractal"]["pieces"] == 4096);
  CHECK(r.report["box_sequence"].size() == 1024);
  CHECK(std::abs(r.report["lower_estimate"].get<double>() - 0.3785578521) <= 0.002);
  CHECK(r.report["box_counts"].size() == 12);

  c.depth = 25;
  CHECK(run_in_process(c).code == 1);
}

TEST_CASE("run: verify") {
  cli::RunConfig c;
  c.command = cli::Command::Verify;
  c.input = data("cantor-third.json");
  c.open_set = data("unit.json");
  auto r = run_in_process(c);
  CHECK(r.code == 0);
  CHECK(r.report["certificate"]["passed"] == true);
  CHECK(r.report["hippo"]["passed"] == true);

  c.input = data("overlap.json");
  auto bad = run_in_process(c);
  CHECK(bad.code == 1);
  CHECK(bad.report["certificate"]["checks"][0]["overlap_witness"] == json::array({"1/4", "1/2"}));
}

TEST_CASE("run: equihom on the halving-sequence set") {
  cli::RunConfig c;
  c.command = cli::Command::Equihom;
  c.input = data("prop38.json");
  c.delta_grid = "1/4";
  c.rho_grid = "2^-4..2^-12";
  auto r = run_in_process(c);
  REQUIRE(r.code == 0);
  CHECK(r.report["verdict"] == "growing");
  CHECK(r.report["rows"].size() == 9);
}

TEST_CASE("run: dims, assouad and ifs-run") {
  fs::path table = scratch_dir() / "dims.csv";
  cli::RunConfig c;
  c.command = cli::Command::Dims;
  c.input = data("third-prefractal.json");
  c.delta_grid = "3^-2..3^-9";
  c.exponent = 0.6309297535714574;
  c.table = table.string();
  auto r = run_in_process(c);
  REQUIRE(r.code == 0);
  CHECK(std::abs(r.report["upper_box"].get<double>() - 0.6309297536) <= 0.03);
  CHECK(r.report["attainment"]["c_high"].get<double>() <= 4.0);
  CHECK(fs::exists(table));

  cli::RunConfig a;
  a.command = cli::Command::Assouad;
  a.input = data("third-prefractal.json");
  a.delta_grid = "1/9";
  a.ratio_grid = "3^-2..3^-6";
  a.center = "0";
  auto ar = run_in_process(a);
  REQUIRE(ar.code == 0);
  CHECK(std::abs(ar.report["assouad"]["dimension"].get<double>() - 0.6309297536) <= 0.03);
  a.center = "1/2";
  CHECK(run_in_process(a).code == 1);

  cli::RunConfig f;
  f.command = cli::Command::IfsRun;
  f.input = data("cantor-third.json");
  f.depth = 3;
  auto fr = run_in_process(f);
  REQUIRE(fr.code == 0);
  CHECK(fr.report["decay"][2]["distance"] == "8/27");
  CHECK(fr.report["seed_radius"] == "4");
}

TEST_CASE("reports do not depend on the worker count") {
  cli::RunConfig c;
  c.command = cli::Command::Equihom;
  c.input = data("third-prefractal.json");
  c.delta_grid = "1/9,1/27";
  c.ratio_grid = "3^-1..3^-4";
  setenv("FRACDIM_THREADS", "1", 1);
  auto one = run_in_process(c);
  setenv("FRACDIM_THREADS", "4", 1);
  auto four = run_in_process(c);
  unsetenv("FRACDIM_THREADS");
  CHECK(one.report.dump() == four.report.dump());
}

TEST_CASE("binary exit codes") {
  fs::path out = scratch_dir() / "report.json";
  CHECK(run_binary("cantor --spec " + data("prop37.json") + " --depth 12 --report " + out.string()) == 0);
  CHECK(fs::exists(out));
  json r = io::read_json_file(out.string());
  CHECK(r["command"] == "cantor");
  CHECK(run_binary("verify --system " + data("cantor-third.json") + " --open-set " + data("unit.json")) == 0);
  CHECK(run_binary("verify --system " + data("overlap.json") + " --open-set " + data("unit.json")) == 1);
  CHECK(run_binary("equihom --set " + data("prop38.json") + " --delta 1/4 --rho-grid 2^-4..2^-12") == 0);
  CHECK(run_binary("dims --set /nonexistent.json") == 1);
  CHECK(run_binary("nonsense") == 1);
  CHECK(run_binary("--help") == 0);
}
