#include "thspec/registry.hpp"
#include "thspec/error.hpp"
#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <sstream>

#ifndef THSPEC_REGISTRY_PATH
#define THSPEC_REGISTRY_PATH ""
#endif

namespace thspec {

namespace {

constexpr std::string_view builtin_csv =
    "name,c_h,mu_amu,b_h_inv_angstrom,r_e_angstrom,D_wavenumber\n"
    "H2,0.170066,0.50391,1.61890,0.741,38318\n"
    "I2,-0.139013,10.612,2.12343,2.666,12547\n";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

double parse_number(std::string_view field, const std::string &where) {
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    fail(ErrorCode::Io, fmt::format("{}: '{}' is not a number", where, field));
  return v;
}

} // namespace

std::string_view builtin_registry_csv() noexcept { return builtin_csv; }

std::vector<MoleculeRecord> parse_registry(std::istream &in,
                                           const std::string &origin) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::vector<MoleculeRecord> records;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.starts_with("\xEF\xBB\xBF"))
      line.erase(0, 3);
    const auto body = trim(line);
    if (body.empty())
      continue;
    if (!have_header) {
      if (body != registry_header)
        fail(ErrorCode::Io,
             fmt::format("{}: expected header '{}'", origin, registry_header));
      have_header = true;
      continue;
    }
    const auto fields = split(body);
    const auto where = fmt::format("{}:{}", origin, lineno);
    if (fields.size() != 6)
      fail(ErrorCode::Io, fmt::format("{}: expected 6 fields, got {}", where,
                                      fields.size()));
    MoleculeRecord rec;
    rec.name = std::string(fields[0]);
    rec.c_h = parse_number(fields[1], where);
    rec.mu_amu = parse_number(fields[2], where);
    rec.b_h_inv_A = parse_number(fields[3], where);
    rec.r_e_A = parse_number(fields[4], where);
    rec.D_wavenumber = parse_number(fields[5], where);
    if (rec.name.empty() || !(rec.mu_amu > 0.0))
      fail(ErrorCode::Io, fmt::format("{}: invalid record", where));
    records.push_back(std::move(rec));
  }
  if (records.empty())
    fail(ErrorCode::Io, fmt::format("{}: empty registry", origin));
  return records;
}

std::vector<MoleculeRecord> load_registry_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::Io, fmt::format("cannot open registry '{}'", path));
  return parse_registry(in, path);
}

std::vector<MoleculeRecord> load_default_registry(std::string *origin) {
  if (const char *env = std::getenv("THSPEC_REGISTRY"); env && *env) {
    if (origin)
      *origin = env;
    return load_registry_file(env);
  }
  const std::string installed = THSPEC_REGISTRY_PATH;
  if (!installed.empty() && std::filesystem::exists(installed)) {
    if (origin)
      *origin = installed;
    return load_registry_file(installed);
  }
  if (origin)
    *origin = "<builtin>";
  std::istringstream in{std::string(builtin_csv)};
  return parse_registry(in, "<builtin>");
}

std::optional<MoleculeRecord>
find_molecule(const std::vector<MoleculeRecord> &records,
              std::string_view name) {
  const auto it = std::find_if(records.begin(), records.end(),
                               [&](const auto &r) { return r.name == name; });
  if (it == records.end())
    return std::nullopt;
  return *it;
}

} // namespace thspec
