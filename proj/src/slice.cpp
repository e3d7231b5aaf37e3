#include "geogen/slice.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

namespace geogen {

void export_slice(const VoxelGrid& grid, SliceAxis axis, int index,
                  const std::filesystem::path& path) {
    const GridSpec& spec = grid.spec();
    int width = 0, height = 0;
    switch (axis) {
        case SliceAxis::X:
            if (index < 0 || index >= spec.nx) throw std::out_of_range("export_slice: x index");
            width = spec.ny;
            height = spec.nz;
            break;
        case SliceAxis::Y:
            if (index < 0 || index >= spec.ny) throw std::out_of_range("export_slice: y index");
            width = spec.nx;
            height = spec.nz;
            break;
        case SliceAxis::Z:
            if (index < 0 || index >= spec.nz) throw std::out_of_range("export_slice: z index");
            width = spec.nx;
            height = spec.ny;
            break;
    }

    const double scale = 255.0 / std::log10(kMaxResistivity);
    const auto pixel = [&](float v) {
        const double rho = std::clamp(static_cast<double>(v), kMinResistivity, kMaxResistivity);
        const int p = static_cast<int>(std::lround(scale * std::log10(rho)));
        return static_cast<unsigned char>(std::clamp(p, 0, 255));
    };

    std::vector<unsigned char> pixels(static_cast<std::size_t>(width) * height);
    std::size_t n = 0;
    for (int row = 0; row < height; ++row)
        for (int col = 0; col < width; ++col, ++n) {
            float v = 0.0f;
            switch (axis) {
                case SliceAxis::X: v = grid.at(index, col, row); break;
                case SliceAxis::Y: v = grid.at(col, index, row); break;
                case SliceAxis::Z: v = grid.at(col, row, index); break;
            }
            pixels[n] = pixel(v);
        }

    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("export_slice: cannot open " + path.string());
    out << "P5\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels.data()),
              static_cast<std::streamsize>(pixels.size()));
    if (!out) throw IoError("export_slice: short write");
}

}  // namespace geogen
