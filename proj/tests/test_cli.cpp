#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bincollatz/cli.hpp"
#include "bincollatz/errors.hpp"
#include "bincollatz/raster.hpp"

using namespace bincollatz;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("raster of 5") {
  const auto image = build_raster(run_trajectory(5, MapKind::Binary, 100));
  std::ostringstream out;
  write_pbm(image, out);
  CHECK(out.str() == "P1\n3 2\n1 0 1\n1 0 0\n");
}

TEST_CASE("raster round trip") {
  for (unsigned long x : {27UL, 31UL, 63728127UL}) {
    const auto rec = run_trajectory(x, MapKind::Binary, 100000);
    const auto image = build_raster(rec);
    CHECK(image.height == *rec.stopping_time + 1);
    CHECK(image.width == rec.max_length);
    std::stringstream pbm;
    write_pbm(image, pbm);
    const auto back = read_pbm(pbm);
    CHECK(back == image);
    for (std::size_t r = 0; r < back.height; ++r) CHECK(back.row_bits(r) == rec.fraction(r).to_bits());
  }
  std::istringstream packed("P1\n# comment\n3 1\n101\n");
  CHECK(read_pbm(packed).row_bits(0) == "101");
  std::istringstream bad("P4\n1 1\n1\n");
  CHECK_THROWS_AS(read_pbm(bad), MalformedInput);
  std::istringstream short_data("P1\n2 2\n1 0 1\n");
  CHECK_THROWS_AS(read_pbm(short_data), MalformedInput);
}

TEST_CASE("parse_start") {
  CHECK(std::get<BigInt>(cli::parse_start("12345678901234567890123")) == BigInt("12345678901234567890123"));
  CHECK(std::get<BinaryFraction>(cli::parse_start("bits:10110")).to_bits() == "1011");
  CHECK_THROWS_AS(cli::parse_start("12a"), MalformedInput);
  CHECK_THROWS_AS(cli::parse_start("bits:012"), MalformedInput);
  CHECK_THROWS_AS(cli::parse_start("0"), DomainError);
}

TEST_CASE("trajectory command") {
  auto r = run({"trajectory", "--start", "31", "--map", "b"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("step,value,bits,length\n0,31,11111,5\n"));
  CHECK(r.out.find("stopping_time=39 ") != std::string::npos);
  CHECK(r.out.find("max_length=12 max_length_count=3") != std::string::npos);

  r = run({"trajectory", "--start", "1", "--map", "c", "--max-steps", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0,1,1,1\n1,4,100,3\n2,2,10,2\n3,1,1,1\n") != std::string::npos);

  r = run({"trajectory", "--start", "bits:101", "--map", "b"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1,1,1,1\n") != std::string::npos);
  CHECK(r.out.find("stopping_time=1 ") != std::string::npos);

  r = run({"trajectory", "--start", "27", "--map", "r", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{\"bits\":\"11011\",\"length\":5,\"step\":0,\"value\":\"27\"}") != std::string::npos);
  CHECK(r.out.find("\"stopping_time\":41") != std::string::npos);

  CHECK(run({"trajectory", "--start", "x1"}).code == 2);
  CHECK(run({"trajectory", "--start", "6", "--map", "r"}).code == 2);
  CHECK(run({"trajectory", "--start", "6", "--map", "q"}).code == 2);
  CHECK(run({"trajectory"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("raster command") {
  const auto path = temp("bincollatz_cli_5.pbm");
  auto r = run({"raster", "--start", "5", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(slurp(path) == "P1\n3 2\n1 0 1\n1 0 0\n");
  std::filesystem::remove(path);
  CHECK(run({"raster", "--start", "5", "--out", "/nonexistent-dir/a.pbm"}).code == 3);
}

TEST_CASE("kstar, verify, families, audit commands") {
  auto r = run({"kstar", "--ell", "60", "--k-max", "1000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k_star=600\n") != std::string::npos);
  CHECK(r.out.find("c_k_star=0.507858") != std::string::npos);
  CHECK(r.out.find("eps_k_star=0.0134") != std::string::npos);
  CHECK(run({"kstar", "--ell", "60", "--k-max", "10"}).out.find("k_star=none") != std::string::npos);

  r = run({"verify", "--ell", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("status=all odd x < 2^12 converge") != std::string::npos);
  CHECK(run({"verify", "--ell", "8", "--step-cap", "3"}).code == 1);
  CHECK(run({"verify", "--ell", "40"}).code == 2);

  r = run({"families", "--kind", "alpha", "--k-max", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("status=all stop in 2 steps") != std::string::npos);
  r = run({"families", "--kind", "gamma", "--k-max", "10"});
  CHECK(r.code == 0);
  CHECK(r.out.find("unresolved=0") != std::string::npos);

  r = run({"audit", "--samples", "500", "--ell", "32", "--seed", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("violations=0\n") != std::string::npos);
  CHECK(run({"audit", "--ell", "4"}).code == 2);
}

TEST_CASE("table1 command is byte-deterministic") {
  const auto a = temp("bincollatz_t1_a.csv");
  const auto b = temp("bincollatz_t1_b.csv");
  const std::vector<std::string> base{"table1", "--lengths", "20,24", "--samples", "30", "--runs", "2", "--seed", "5"};
  auto args = base;
  args.insert(args.end(), {"--out", a.string()});
  CHECK(run(args).code == 0);
  args = base;
  args.insert(args.end(), {"--out", b.string(), "--workers", "2"});
  CHECK(run(args).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).starts_with("length,samples,runs,max_length_delta,max_stop_time,seed,rng_id,capped_count\n"));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  CHECK(run({"table1", "--lengths", "2"}).code == 2);
  CHECK(run({"table1", "--lengths", "5,x"}).code == 2);
  CHECK(run({"table1", "--lengths", "50", "--samples", "2", "--runs", "1", "--step-cap", "2"}).code == 1);
}
