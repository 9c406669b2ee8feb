#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "hinfsyn/plant.hpp"

namespace hinfsyn {

// Per-system tuning overrides a system file may carry.
struct SystemOverrides {
  std::optional<double> alpha0;
  std::optional<double> eps;
};

struct LoadedSystem {
  std::string name;
  Plant plant;
  SystemOverrides overrides;
};

// System files are JSON with explicit dimensions and row-major matrix
// arrays:
//
//   { "name": "...", "n": 2, "m": 2, "m1": 2, "r": 4,
//     "A": [...], "B": [...], "B1": [...], "C": [...], "D": [...],
//     "alpha0": 0.5, "eps": 1e-9 }        // the last two are optional
//
// Parsing is strict: unknown keys, wrong array lengths, and non-numeric
// entries are ParseErrors naming the field. load_system(write_system(x))
// reproduces every matrix entry bit-exactly.
LoadedSystem load_system(const std::filesystem::path& path);
void write_system(const LoadedSystem& system, const std::filesystem::path& path);

// Gain files are JSON: { "K": [row-major m*n array] }, validated against the
// plant the gain is meant for.
Gain load_gain(const std::filesystem::path& path, const Plant& plant);

}  // namespace hinfsyn
