#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"

using namespace affconj;
using namespace affconj::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("affconj-cli-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "-" +
             std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string write(const std::string& name, const std::string& body) const {
    const auto p = path_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::string path() const { return path_.string(); }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

const char* kShear = R"({"matrix":[["1","1"],["0","1"]],"translation":["0","1"]})";
const char* kShift = R"({"matrix":[["1","0"],["0","1"]],"translation":["1","0"]})";

}  // namespace

TEST_CASE("document parsing") {
  const auto doc = parse_document(R"({"name":"f","matrix":[["1/2", 3],["-4","0"]],"translation":["0","7/3"]})");
  CHECK(doc.name == std::optional<std::string>("f"));
  CHECK(doc.op.matrix() == Matrix{{Rational(mpz_class(1), mpz_class(2)), 3}, {-4, 0}});
  CHECK(doc.op.translation() == Vector{0, Rational(mpz_class(7), mpz_class(3))});

  auto fails_with = [](const std::string& text, const std::string& field) {
    try {
      parse_document(text);
    } catch (const DocumentError& e) {
      return std::string(e.what()).rfind(field, 0) == 0;
    }
    return false;
  };
  CHECK(fails_with(R"({"matrix":[["1/0"]],"translation":["0"]})", "matrix[0][0]"));
  CHECK(fails_with(R"({"matrix":[["1.5"]],"translation":["0"]})", "matrix[0][0]"));
  CHECK(fails_with(R"({"matrix":[[1.5]],"translation":["0"]})", "matrix[0][0]"));
  CHECK(fails_with(R"({"matrix":[["1","2"]],"translation":["0"]})", "matrix[0]"));
  CHECK(fails_with(R"({"matrix":[["1"]],"translation":["0","1"]})", "translation"));
  CHECK(fails_with(R"({"matrix":[["1"]],"translation":["x"]})", "translation[0]"));
  CHECK(fails_with(R"({"translation":[]})", "matrix"));
  CHECK(fails_with(R"([1,2])", "document"));
  CHECK(fails_with(R"({"matrix":)", "document"));
}

TEST_CASE("document print/parse round trip (random)") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    OperatorDocument doc{seed % 2 ? std::optional<std::string>("op" + std::to_string(seed)) : std::nullopt,
                         random_affine_operator(GenConfig{static_cast<std::size_t>(seed % 6), 3, seed, 0.5})};
    // rational entries too
    if (doc.op.dim() > 0) {
      Matrix a = doc.op.matrix();
      a(0, 0) = a(0, 0) / Rational(7);
      doc.op = AffineOperator(a, doc.op.translation());
    }
    CHECK(parse_document(print_document(doc)) == doc);
  }
}

TEST_CASE("classify command") {
  TempDir dir;
  const auto shear = dir.write("shear.affop.json", kShear);
  const auto one = dir.write("one.affop.json", R"({"matrix":[["1"]],"translation":["0"]})");
  const auto bad = dir.write("bad.affop.json", R"({"matrix":[["1/0"]],"translation":["0"]})");

  auto r = run_cli({"classify", shear});
  CHECK(r.code == 0);
  CHECK(r.out == "no-fixed-point; q*=(x-1)^2; nilpotent partition []\n");

  r = run_cli({"classify", one});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("fixed-point; invariant factors: (x-1)\n", 0) == 0);

  r = run_cli({"classify", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("matrix[0][0]") != std::string::npos);

  r = run_cli({"classify", dir.path() + "/missing.json"});
  CHECK(r.code == 2);

  r = run_cli({"classify", "--json", shear});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["case"] == "no-fixed-point");
  CHECK(j["q_star"]["text"] == "(x-1)^2");
  CHECK(j["q_star"]["coefficients"] == nlohmann::json::array({"1", "-2", "1"}));
  CHECK(j["partition"] == nlohmann::json::array());
  CHECK_FALSE(j.contains("invariant_factors"));

  r = run_cli({"classify", "--json", one});
  const auto k = nlohmann::json::parse(r.out);
  CHECK(k["case"] == "fixed-point");
  CHECK(k["invariant_factors"][0]["text"] == "(x-1)");
  CHECK(k["fixed_point"] == nlohmann::json::array({"0"}));
  CHECK_FALSE(k.contains("q_star"));
}

TEST_CASE("classify batch") {
  TempDir dir;
  dir.write("a.affop.json", kShear);
  dir.write("b.affop.json", kShift);
  const auto r = run_cli({"classify", "--batch", dir.path()});
  CHECK(r.code == 0);
  CHECK(r.out.find("a.affop.json: no-fixed-point") != std::string::npos);
  CHECK(r.out.find("b.affop.json: no-fixed-point") != std::string::npos);
}

TEST_CASE("conjugate command exit codes") {
  TempDir dir;
  const auto f = dir.write("f.json", kShear);
  const auto g = dir.write("g.json", kShift);
  const auto fl = dir.write("fl.json", R"({"matrix":[["1","1"],["0","1"]],"translation":["0","0"]})");
  const auto id = dir.write("id.json", R"({"matrix":[["1","0"],["0","1"]],"translation":["0","0"]})");
  const auto three = dir.write("three.json", R"({"matrix":[["1","0","0"],["0","1","0"],["0","0","1"]],"translation":["1","0","0"]})");

  auto r = run_cli({"conjugate", f, g});
  CHECK(r.code == 0);
  CHECK(r.out == "CONJUGATE\n");

  r = run_cli({"conjugate", "--explain", fl, id});
  CHECK(r.code == 1);
  CHECK(r.out.find("NOT CONJUGATE") == 0);
  CHECK(r.out.find("invariant factors differ") != std::string::npos);

  r = run_cli({"conjugate", g, three});
  CHECK(r.code == 1);

  r = run_cli({"conjugate", f});
  CHECK(r.code == 2);
  r = run_cli({"conjugate", f, dir.path() + "/nope.json"});
  CHECK(r.code == 2);
}

TEST_CASE("canon and reduce commands") {
  TempDir dir;
  const auto f = dir.write("f.json", kShear);
  const auto r2 = dir.write("r.json", R"({"matrix":[["1","0"],["0","0"]],"translation":["1","1"]})");
  const auto fixed = dir.write("fixed.json", R"({"matrix":[["2"]],"translation":["1"]})");

  auto r = run_cli({"canon", f});
  CHECK(r.code == 0);
  const auto body = r.out.substr(0, r.out.find("\n}") + 2);
  CHECK(parse_document(body).op == AffineOperator(Matrix::identity(2), Vector{1, 0}));

  r = run_cli({"canon", "--json", f});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["representative"]["matrix"] == nlohmann::json::parse(R"([["1","0"],["0","1"]])"));
  CHECK(j["representative"]["translation"] == nlohmann::json::array({"1", "0"}));

  r = run_cli({"reduce", "--json", r2});
  CHECK(r.code == 0);
  const auto t = nlohmann::json::parse(r.out);
  CHECK(t["witness"]["shift"] == nlohmann::json::array({"0", "1"}));
  CHECK(t["reduced"]["translation"] == nlohmann::json::array({"1", "0"}));

  r = run_cli({"reduce", fixed});
  CHECK(r.code == 1);
  CHECK(r.out.find("fixed point") != std::string::npos);
}

TEST_CASE("selftest and random commands") {
  auto r = run_cli({"selftest", "100", "42"});
  CHECK(r.code == 0);
  CHECK(r.out.find("trials: 100") != std::string::npos);

  r = run_cli({"selftest", "--trials", "10", "--seed", "3", "--dim", "4", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["passed"] == true);

  r = run_cli({"random", "--seed", "7", "--dim", "3", "--bound", "2"});
  CHECK(r.code == 0);
  const auto doc = parse_document(r.out);
  CHECK(doc.op == random_affine_operator(GenConfig{3, 2, 7, 0.5}));

  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"selftest", "--bound", "0"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}
