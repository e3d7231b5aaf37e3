#include "geogen/npy.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <regex>

namespace geogen {
namespace {

constexpr char kMagic[6] = {'\x93', 'N', 'U', 'M', 'P', 'Y'};

static_assert(std::endian::native == std::endian::little,
              "NPY writer assumes a little-endian host");

}  // namespace

std::string npy_header(const GridSpec& spec) {
    std::string dict = "{'descr': '<f4', 'fortran_order': False, 'shape': (" +
                       std::to_string(spec.nx) + ", " + std::to_string(spec.ny) + ", " +
                       std::to_string(spec.nz) + "), }";
    // pad with spaces so 10 + len(dict) + padding + 1 is a multiple of 64
    const std::size_t unpadded = 10 + dict.size() + 1;
    const std::size_t padding = (64 - unpadded % 64) % 64;
    dict.append(padding, ' ');
    dict.push_back('\n');

    std::string header(kMagic, sizeof(kMagic));
    header.push_back('\x01');
    header.push_back('\x00');
    const std::uint16_t hlen = static_cast<std::uint16_t>(dict.size());
    header.push_back(static_cast<char>(hlen & 0xFF));
    header.push_back(static_cast<char>(hlen >> 8));
    header += dict;
    return header;
}

void write_npy(const VoxelGrid& grid, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("write_npy: cannot open " + path.string());
    const std::string header = npy_header(grid.spec());
    out.write(header.data(), static_cast<std::streamsize>(header.size()));
    out.write(reinterpret_cast<const char*>(grid.values().data()),
              static_cast<std::streamsize>(grid.values().size() * sizeof(float)));
    if (!out) throw IoError("write_npy: short write to " + path.string());
}

VoxelGrid read_npy(const std::filesystem::path& path) { return read_npy(path, GridSpec{}); }

VoxelGrid read_npy(const std::filesystem::path& path, const GridSpec& geometry) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("read_npy: cannot open " + path.string());

    char magic[6];
    if (!in.read(magic, 6) || std::memcmp(magic, kMagic, 6) != 0)
        throw FormatError("read_npy: bad magic in " + path.string());
    char version[2];
    if (!in.read(version, 2) || version[0] != 1 || version[1] != 0)
        throw FormatError("read_npy: unsupported version in " + path.string());
    unsigned char lenbytes[2];
    if (!in.read(reinterpret_cast<char*>(lenbytes), 2))
        throw FormatError("read_npy: truncated header length");
    const std::size_t hlen = lenbytes[0] | (static_cast<std::size_t>(lenbytes[1]) << 8);

    std::string dict(hlen, '\0');
    if (!in.read(dict.data(), static_cast<std::streamsize>(hlen)))
        throw FormatError("read_npy: truncated header dict");

    static const std::regex descr_re(R"('descr'\s*:\s*'<f4')");
    static const std::regex order_re(R"('fortran_order'\s*:\s*False)");
    static const std::regex shape_re(R"('shape'\s*:\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,?\s*\))");
    std::smatch m;
    if (!std::regex_search(dict, descr_re))
        throw FormatError("read_npy: dtype is not little-endian float32");
    if (!std::regex_search(dict, order_re))
        throw FormatError("read_npy: fortran-order arrays unsupported");
    if (!std::regex_search(dict, m, shape_re))
        throw FormatError("read_npy: shape is not a rank-3 tuple");

    GridSpec spec = geometry;
    spec.nx = std::stoi(m[1]);
    spec.ny = std::stoi(m[2]);
    spec.nz = std::stoi(m[3]);
    spec.validate();

    std::vector<float> values(spec.cell_count());
    if (!in.read(reinterpret_cast<char*>(values.data()),
                 static_cast<std::streamsize>(values.size() * sizeof(float))))
        throw FormatError("read_npy: payload shorter than header shape");
    char extra;
    if (in.read(&extra, 1)) throw FormatError("read_npy: payload longer than header shape");

    return VoxelGrid(spec, std::move(values));
}

}  // namespace geogen
