#pragma once

#include "thspec/core_types.hpp"
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thspec {

inline constexpr std::string_view registry_header =
    "name,c_h,mu_amu,b_h_inv_angstrom,r_e_angstrom,D_wavenumber";

// Copy of data/molecules.csv compiled in, used when no file is reachable.
std::string_view builtin_registry_csv() noexcept;

std::vector<MoleculeRecord> parse_registry(std::istream &in,
                                           const std::string &origin);
std::vector<MoleculeRecord> load_registry_file(const std::string &path);

// THSPEC_REGISTRY if set, else the installed asset, else the builtin copy.
// `origin` receives the path actually used ("<builtin>" for the copy).
std::vector<MoleculeRecord> load_default_registry(std::string *origin = nullptr);

std::optional<MoleculeRecord>
find_molecule(const std::vector<MoleculeRecord> &records,
              std::string_view name);

} // namespace thspec
