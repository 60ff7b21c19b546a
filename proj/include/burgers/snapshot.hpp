#pragma once

#include <filesystem>
#include <string>

#include "burgers/grid.hpp"

namespace burgers {

/// Field snapshot container format (.bpfx), little-endian:
///   bytes 0..3   magic "BPFX"
///   u32          format version (1)
///   u32          n
///   u32          points_per_axis
///   u32          component count
///   f64          nu
///   f64          time_tag
///   f64[]        components concatenated, row-major multi-index order
///                (axis n-1 contiguous)
struct SnapshotMeta {
    double nu = 0.0;
};

void write_bpfx(const std::filesystem::path& path, const VectorField& field, double nu);

VectorField read_bpfx(const std::filesystem::path& path, SnapshotMeta* meta = nullptr);

}  // namespace burgers
