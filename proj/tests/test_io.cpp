#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "lgk3/io.hpp"

using namespace lgk3;

TEST_CASE("format_double round trips losslessly") {
  Rng rng(5150);
  for (int i = 0; i < 1000; ++i) {
    const double v = (rng.uniform() - 0.5) * std::pow(10.0, rng.uniform(-12, 12));
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(std::stod(format_double(M_PI)) == M_PI);
  CHECK(std::stod(format_double(-1.0 / 3.0)) == -1.0 / 3.0);
}

TEST_CASE("pi-fraction literals") {
  CHECK(parse_angle("pi") == M_PI);
  CHECK(parse_angle("-pi") == -M_PI);
  CHECK(parse_angle("2pi") == 2 * M_PI);
  CHECK(parse_angle("pi/3") == M_PI / 3);
  CHECK(parse_angle("-2pi/5") == -2 * M_PI / 5);
  CHECK(parse_angle("0.5pi") == 0.5 * M_PI);
  CHECK(parse_angle(" pi / 4 ") == M_PI / 4);
  CHECK(parse_angle("1.25") == 1.25);
  CHECK(parse_angle("-3") == -3.0);

  CHECK_THROWS_AS(parse_angle("pie"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("pi/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle("2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_angle(""), std::invalid_argument);

  const auto list = parse_number_list("pi/3, 0.5, -pi");
  REQUIRE(list.size() == 3);
  CHECK(list[0] == M_PI / 3);
  CHECK(list[1] == 0.5);
  CHECK(list[2] == -M_PI);
}

TEST_CASE("map specs") {
  const AffineQubitMap ident = parse_map_spec("identity");
  CHECK(ident.is_unital());
  CHECK((ident.delta - Mat3::Identity()).norm() == 0.0);

  const AffineQubitMap diag = parse_map_spec("diag:0.5,0.5,1");
  CHECK(diag.delta(0, 0) == 0.5);
  CHECK(diag.delta(2, 2) == 1.0);

  const AffineQubitMap mat = parse_map_spec("matrix:1,0,0,0,1,0,0,0,-1");
  CHECK(mat.delta(2, 2) == -1.0);

  // rdr with pi literals reproduces the family's first map at gamma = 0.
  const AffineQubitMap rdr = parse_map_spec("rdr:0.4,pi/3,0|0.5,0.5,1|0,0,0");
  const Mat3 expected = rot_zyz(0.4, M_PI / 3, 0.0) * Vec3(0.5, 0.5, 1).asDiagonal();
  CHECK((rdr.delta - expected).norm() < 1e-15);

  const AffineQubitMap aff = parse_map_spec("affine:0,0,0.2|0.8,0,0,0,0.8,0,0,0,0.8");
  CHECK(aff.b(2) == 0.2);
  CHECK_FALSE(aff.is_unital());

  CHECK_THROWS_AS(parse_map_spec("diag:1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_spec("matrix:1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_spec("wat:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_spec("1,2,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_map_spec("rdr:0,0.3,0|1,1,1"), std::invalid_argument);

  const auto rec = map_record(aff);
  CHECK(rec[2] == 0.2);   // b_z
  CHECK(rec[3] == 0.8);   // delta(0,0)
  CHECK(rec[11] == 0.8);  // delta(2,2)
}

TEST_CASE("config files") {
  const std::string path = "/tmp/lgk3_test_config.txt";
  {
    std::ofstream out(path);
    out << "# experiment recipe\n"
        << "seed = 42\n"
        << "map12 = diag:0.5,0.5,1   # inline comment\n"
        << "seed = 43\n"
        << "\n";
  }
  const auto kv = parse_config_file(path);
  CHECK(kv.at("seed") == "43");  // later keys win
  CHECK(kv.at("map12") == "diag:0.5,0.5,1");
  CHECK(kv.size() == 2);
  std::remove(path.c_str());

  CHECK_THROWS_AS(parse_config_file("/nonexistent/nowhere.cfg"), std::runtime_error);

  {
    std::ofstream out(path);
    out << "keyvalue without equals\n";
  }
  CHECK_THROWS_AS(parse_config_file(path), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("json emission is ordered and stable") {
  JsonValue obj = JsonValue::object();
  obj.set("k3", JsonValue::real(1.5));
  obj.set("note", JsonValue::str("a\"b"));
  JsonValue arr = JsonValue::array();
  arr.push(JsonValue::integer(1)).push(JsonValue::boolean(false));
  obj.set("items", std::move(arr));

  const std::string a = obj.dump();
  const std::string b = obj.dump();
  CHECK(a == b);
  CHECK(a.find("\"k3\": 1.5") != std::string::npos);
  CHECK(a.find("\\\"") != std::string::npos);
  CHECK(a.find("\"k3\"") < a.find("\"note\""));  // insertion order preserved

  const ChannelReport report = classify(AffineQubitMap{});
  const std::string dumped = json_from_report(report).dump();
  CHECK(dumped.find("\"completely_positive\": true") != std::string::npos);
  CHECK(dumped.find("\"choi_eigenvalues\"") != std::string::npos);
}

TEST_CASE("csv emission") {
  CsvTable t;
  t.header = {"s", "max_k3"};
  t.rows.push_back({format_double(0.4), format_double(1.08)});
  const std::string out = t.dump();
  CHECK(out == "s,max_k3\n0.40000000000000002,1.0800000000000001\n");
}

TEST_CASE("write_text_file creates parents and reports failures") {
  const std::string dir = "/tmp/lgk3_io_test_dir";
  std::filesystem::remove_all(dir);
  const std::string path = dir + "/a/b/out.txt";
  write_text_file(path, "hello\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "hello");
  std::filesystem::remove_all(dir);

  // Writing onto an existing directory is an I/O failure.
  std::filesystem::create_directories(dir);
  CHECK_THROWS_AS(write_text_file(dir, "x"), std::runtime_error);
  std::filesystem::remove_all(dir);
}
