// Runs the installed CLI binary and inspects its output.
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <doctest.h>
#include <fmt/format.h>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string &args) {
  const std::string cmd = std::string(THSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE *p = ::popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : s) {
    if (c == '"')
      quoted = !quoted;
    else if (c == sep && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else
      cur += c;
  }
  out.push_back(cur);
  return out;
}

std::vector<std::vector<std::string>> csv(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty())
      rows.push_back(split(line, ','));
  return rows;
}

} // namespace

//==============================================================================
TEST_CASE("spectrum reproduces the tabulated ground level") {
  auto r = run("spectrum --preset table2 --ch 0.01 --n 0 --kappa -2 --format csv");
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0][3] == "E");
  CHECK(std::abs(std::stod(rows[1][3]) - 0.0156445) < 5e-6);
  auto partner = run("spectrum --preset table2 --kappa 1 --n 0 --format csv");
  REQUIRE(partner.code == 0);
  CHECK(std::abs(std::stod(csv(partner.out)[1][3]) - std::stod(rows[1][3])) <
        1e-10);
}

TEST_CASE("text output uses seven decimals in fm units") {
  auto r = run("spectrum --preset table2 --n 0 --kappa -2");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("0.0156445") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("spectrum --bogus").code == 2);
  CHECK(run("table 4").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("verify --preset table3").code == 4);
  CHECK(run("wavefunction --preset table2 --n 0 --kappa -2 --points 5")
            .code == 0);
  CHECK(run("wavefunction --preset table2 --convention tabulated --n 0 "
            "--kappa -2 --points 5")
            .code == 3);
  CHECK(run("spectrum --preset table3 --convention standard --n 1 --kappa -1")
            .code == 3);
  CHECK(run("wavefunction --preset table3 --convention standard --n 1 "
            "--kappa -1")
            .code == 3);
  CHECK(run("spectrum --molecule H2 --units fm --n 0 --kappa -1").code == 2);
  CHECK(run("sweep --param bh --lo 1 --hi 0.5 --steps 3").code == 2);
}

TEST_CASE("CSV numbers round trip through 12 significant digits") {
  auto r = run("table 2 --format csv");
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 9);
  for (std::size_t i = 1; i < rows.size(); ++i)
    for (std::size_t j = 4; j < rows[i].size(); ++j) {
      const double v = std::stod(rows[i][j]);
      CHECK(fmt::format("{:.12g}", v) == rows[i][j]);
    }
}

TEST_CASE("table 3 values are negative, table 6 carries its golden row") {
  auto r = run("table 3 --format json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["meta"]["version"] == "1.0.0");
  REQUIRE(doc["rows"].size() == 8);
  for (const auto &row : doc["rows"])
    for (const char *col : {"morse-2", "morse-1", "c_h=-0.01"})
      CHECK(row[col].get<double>() < 0.0);
  auto t6 = run("table 6 --format json");
  REQUIRE(t6.code == 0);
  const auto d6 = nlohmann::json::parse(t6.out);
  const auto &last = d6["rows"][5];
  CHECK(last["n"] == 2);
  CHECK(last["kappa"] == -3);
  CHECK(last["I2:published"].get<double>() == -0.1712385573);
  CHECK(d6["meta"]["params"].contains("discrepancy_report"));
}

TEST_CASE("wavefunction emission is normalized with the right nodes") {
  auto r = run("wavefunction --preset table2 --convention standard --n 1 "
               "--kappa -2 --format csv --points 6001");
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 6002);
  double integral = 0.0, prev_r = -1.0, prev_d = 0.0, prev_f = 0.0;
  int sign_changes = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double rr = std::stod(rows[i][0]);
    const double f = std::stod(rows[i][1]);
    const double d = std::stod(rows[i][3]);
    CHECK(std::isfinite(f));
    CHECK(std::isfinite(d));
    if (i > 1) {
      CHECK(rr > prev_r);
      integral += 0.5 * (d + prev_d) * (rr - prev_r);
      if (f * prev_f < 0.0)
        ++sign_changes;
    }
    prev_r = rr;
    prev_d = d;
    prev_f = f;
  }
  CHECK(std::abs(integral - 1.0) < 1e-4);
  CHECK(sign_changes == 1);
}

TEST_CASE("sweep rows and molecules listing") {
  auto r = run("sweep --param ch --lo -0.1 --hi 0.1 --steps 5 --format json");
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["rows"].size() == 20);
  bool any_reason = false;
  for (const auto &row : doc["rows"])
    if (row["E"].is_null())
      any_reason = any_reason || !row["reason"].get<std::string>().empty();
    else
      CHECK(row["reason"] == "");
  CHECK(any_reason); // c_h = 0.1 exceeds exp(-alpha) at the preset
  auto m = run("molecules --format csv");
  REQUIRE(m.code == 0);
  CHECK(csv(m.out).size() == 3);
}

TEST_CASE("molecule spectrum is in eV") {
  auto r = run("spectrum --molecule H2 --symmetry spin --n 0 --kappa -1 "
               "--format csv");
  REQUIRE(r.code == 0);
  const double E = std::stod(csv(r.out)[1][3]);
  CHECK(E > 0.26);
  CHECK(E < 0.28);
}
