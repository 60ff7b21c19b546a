#include "burgers/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "burgers/errors.hpp"

namespace burgers {

namespace {

constexpr char magic[4] = {'B', 'P', 'F', 'X'};
constexpr std::uint32_t format_version = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
    os.write(b, 4);
}

void put_f64(std::ostream& os, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xffu);
    os.write(b, 8);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    return v;
}

double get_f64(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

}  // namespace

void write_bpfx(const std::filesystem::path& path, const VectorField& field, double nu) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw config_error("cannot open snapshot for writing: " + path.string());
    os.write(magic, 4);
    put_u32(os, format_version);
    put_u32(os, static_cast<std::uint32_t>(field.grid.n));
    put_u32(os, static_cast<std::uint32_t>(field.grid.points_per_axis));
    put_u32(os, static_cast<std::uint32_t>(field.components.size()));
    put_f64(os, nu);
    put_f64(os, field.time_tag);
    for (const auto& comp : field.components)
        for (double v : comp) put_f64(os, v);
    if (!os) throw config_error("snapshot write failed: " + path.string());
}

VectorField read_bpfx(const std::filesystem::path& path, SnapshotMeta* meta) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw config_error("cannot open snapshot: " + path.string());
    char head[4];
    is.read(head, 4);
    if (!is || std::memcmp(head, magic, 4) != 0)
        throw config_error("bad snapshot magic in " + path.string());
    const std::uint32_t version = get_u32(is);
    if (version != format_version)
        throw config_error("unsupported snapshot version in " + path.string());

    const std::uint32_t n = get_u32(is);
    const std::uint32_t points = get_u32(is);
    const std::uint32_t comps = get_u32(is);
    const double nu = get_f64(is);
    const double tag = get_f64(is);
    if (n < 1 || n > 3 || comps < 1 || comps > 3)
        throw config_error("snapshot header out of range in " + path.string());

    VectorField field;
    field.grid = make_grid(static_cast<int>(n), static_cast<int>(points));
    field.time_tag = tag;
    field.components.resize(comps);
    const std::size_t total = field.grid.total_points();
    for (auto& comp : field.components) {
        comp.resize(total);
        for (auto& v : comp) v = get_f64(is);
    }
    if (!is) throw config_error("snapshot truncated: " + path.string());
    if (meta != nullptr) meta->nu = nu;
    return field;
}

}  // namespace burgers
