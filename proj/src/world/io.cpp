// SPDX-FileCopyrightText: 2026 The frontier-explore authors
// SPDX-License-Identifier: Apache-2.0

#include "frontier/world/io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "frontier/core/error.hpp"

namespace frontier {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 1;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = text.find('\n', pos);
        std::string_view raw = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        lines.push_back({number++, std::string(raw)});
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    // A trailing newline leaves one empty pseudo-line.
    if (!lines.empty() && lines.back().text.empty()) lines.pop_back();
    return lines;
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

double parse_double(const std::string& s, int line) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) throw ParseError(line, "expected a number, got '" + s + "'");
    return v;
}

int parse_int(const std::string& s, int line) {
    int v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) throw ParseError(line, "expected an integer, got '" + s + "'");
    return v;
}

const Line& header_line(const std::vector<Line>& lines, std::size_t i) {
    if (i >= lines.size()) throw ParseError(static_cast<int>(i) + 1, "truncated scene header");
    return lines[i];
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

VoxelGrid load_scene(std::string_view text) {
    const auto lines = split_lines(text);

    const Line& magic = header_line(lines, 0);
    if (words(magic.text) != std::vector<std::string>{"voxscene", "1"}) {
        throw ParseError(magic.number, "expected 'voxscene 1'");
    }
    const Line& dims_line = header_line(lines, 1);
    auto dw = words(dims_line.text);
    if (dw.size() != 4 || dw[0] != "dims") throw ParseError(dims_line.number, "expected 'dims nx ny nz'");
    Dims dims{parse_int(dw[1], dims_line.number), parse_int(dw[2], dims_line.number),
              parse_int(dw[3], dims_line.number)};
    if (dims.nx <= 0 || dims.ny <= 0 || dims.nz <= 0) {
        throw ParseError(dims_line.number, "dimensions must be positive");
    }
    const Line& res_line = header_line(lines, 2);
    auto rw = words(res_line.text);
    if (rw.size() != 2 || rw[0] != "res") throw ParseError(res_line.number, "expected 'res v'");
    const double res = parse_double(rw[1], res_line.number);
    if (!(res > 0.0)) throw ParseError(res_line.number, "resolution must be positive");
    const Line& origin_line = header_line(lines, 3);
    auto ow = words(origin_line.text);
    if (ow.size() != 4 || ow[0] != "origin") {
        throw ParseError(origin_line.number, "expected 'origin ox oy oz'");
    }
    const Vec3 origin(parse_double(ow[1], origin_line.number), parse_double(ow[2], origin_line.number),
                      parse_double(ow[3], origin_line.number));

    VoxelGrid grid(dims, res, origin, Cell::Unknown);
    const std::int64_t rows_expected = static_cast<std::int64_t>(dims.ny) * dims.nz;
    std::int64_t row = 0;
    int last_line = origin_line.number;
    for (std::size_t i = 4; i < lines.size(); ++i) {
        const Line& l = lines[i];
        last_line = l.number;
        if (l.text.empty()) continue;
        if (row >= rows_expected) {
            throw ParseError(l.number, "more cell rows than the header declares (" +
                                           std::to_string(dims.count()) + " cells)");
        }
        if (static_cast<int>(l.text.size()) != dims.nx) {
            throw ParseError(l.number, "row has " + std::to_string(l.text.size()) + " cells, expected " +
                                           std::to_string(dims.nx));
        }
        const int k = static_cast<int>(row / dims.ny);
        const int j = static_cast<int>(row % dims.ny);
        for (int x = 0; x < dims.nx; ++x) {
            Cell c;
            switch (l.text[static_cast<std::size_t>(x)]) {
                case 'O': c = Cell::Occupied; break;
                case 'F': c = Cell::Free; break;
                case 'U': c = Cell::Unknown; break;
                default: throw ParseError(l.number, "invalid cell character");
            }
            grid.set(x, j, k, c);
        }
        ++row;
    }
    if (row != rows_expected) {
        throw ParseError(last_line, "header declares " + std::to_string(dims.count()) + " cells, body has " +
                                        std::to_string(row * dims.nx));
    }
    return grid;
}

std::string save_scene(const VoxelGrid& grid) {
    const Dims& d = grid.dims();
    std::string out;
    out.reserve(static_cast<std::size_t>(d.count() + d.ny * d.nz + d.nz + 128));
    out += "voxscene 1\n";
    out += "dims " + std::to_string(d.nx) + " " + std::to_string(d.ny) + " " + std::to_string(d.nz) + "\n";
    out += "res " + format_double(grid.resolution()) + "\n";
    out += "origin " + format_double(grid.origin().x()) + " " + format_double(grid.origin().y()) + " " +
           format_double(grid.origin().z()) + "\n";
    for (int k = 0; k < d.nz; ++k) {
        if (k > 0) out += '\n';
        for (int j = 0; j < d.ny; ++j) {
            for (int i = 0; i < d.nx; ++i) {
                switch (grid.at(i, j, k)) {
                    case Cell::Occupied: out += 'O'; break;
                    case Cell::Free: out += 'F'; break;
                    case Cell::Unknown: out += 'U'; break;
                }
            }
            out += '\n';
        }
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

VoxelGrid read_scene_file(const std::filesystem::path& path) { return load_scene(read_text_file(path)); }

void write_scene_file(const std::filesystem::path& path, const VoxelGrid& grid) {
    write_text_file(path, save_scene(grid));
}

namespace {

void put_u32(std::string& out, std::uint32_t v) {
    for (int b = 0; b < 4; ++b) out += static_cast<char>((v >> (8 * b)) & 0xffu);
}

std::uint32_t get_u32(std::string_view s, std::size_t at) {
    std::uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + b])) << (8 * b);
    return v;
}

}  // namespace

std::string encode_fdep(const Raster<double>& image) {
    std::string out = "FDEP";
    put_u32(out, static_cast<std::uint32_t>(image.width()));
    put_u32(out, static_cast<std::uint32_t>(image.height()));
    put_u32(out, 0);
    out.reserve(16 + 4 * image.size());
    for (double v : image.data()) {
        put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
    }
    return out;
}

Raster<double> decode_fdep(std::string_view bytes) {
    if (bytes.size() < 16 || bytes.substr(0, 4) != "FDEP") throw ParseError(0, "not an FDEP image");
    const std::uint32_t w = get_u32(bytes, 4);
    const std::uint32_t h = get_u32(bytes, 8);
    const std::uint64_t n = static_cast<std::uint64_t>(w) * h;
    if (bytes.size() != 16 + 4 * n) throw ParseError(0, "FDEP payload size does not match its header");
    Raster<double> img(static_cast<int>(w), static_cast<int>(h), 0.0);
    for (std::uint64_t i = 0; i < n; ++i) {
        img[i] = static_cast<double>(std::bit_cast<float>(get_u32(bytes, 16 + 4 * i)));
    }
    return img;
}

void write_fdep_file(const std::filesystem::path& path, const Raster<double>& image) {
    write_text_file(path, encode_fdep(image));
}

Raster<double> read_fdep_file(const std::filesystem::path& path) { return decode_fdep(read_text_file(path)); }

std::string encode_pgm(const Mask& image) {
    std::string out = "P5\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n255\n";
    out.append(reinterpret_cast<const char*>(image.data().data()), image.size());
    return out;
}

void write_pgm_file(const std::filesystem::path& path, const Mask& image) {
    write_text_file(path, encode_pgm(image));
}

}  // namespace frontier
