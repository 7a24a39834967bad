#include "qbc/image.hpp"

#include <png.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include "qbc/error.hpp"

namespace qbc {

GrayImage::GrayImage(int w, int h, std::uint8_t fill) : width(w), height(h) {
    if (w <= 0 || h <= 0) throw DimensionError("image dimensions must be positive");
    data.assign(static_cast<std::size_t>(w) * h, fill);
}

namespace {

// Skips whitespace and '#' comment lines between PGM header tokens.
int next_pgm_token(std::istream& in) {
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (!std::isspace(c)) {
            in.unget();
            return c;
        }
        c = in.get();
    }
    return EOF;
}

long read_pgm_int(std::istream& in, const char* what) {
    if (next_pgm_token(in) == EOF) throw FormatError(std::string("PGM header truncated before ") + what);
    long v = 0;
    if (!(in >> v)) throw FormatError(std::string("PGM header: bad ") + what);
    return v;
}

GrayImage load_pgm(std::istream& in) {
    char p = 0, n = 0;
    in.get(p);
    in.get(n);
    if (p != 'P' || (n != '2' && n != '5')) throw FormatError("not a P2/P5 PGM");
    const bool binary = (n == '5');

    const long w = read_pgm_int(in, "width");
    const long h = read_pgm_int(in, "height");
    const long maxval = read_pgm_int(in, "maxval");
    if (w <= 0 || h <= 0) throw FormatError("PGM with zero or negative dimension");
    if (maxval != 255) throw FormatError("only maxval 255 PGM is supported");

    GrayImage img(static_cast<int>(w), static_cast<int>(h));
    if (binary) {
        in.get();  // single whitespace after maxval
        in.read(reinterpret_cast<char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
        if (static_cast<std::size_t>(in.gcount()) != img.data.size()) throw IoError("truncated P5 pixel data");
    } else {
        for (auto& px : img.data) {
            long v = 0;
            if (!(in >> v)) throw IoError("truncated P2 pixel data");
            if (v < 0 || v > 255) throw FormatError("P2 sample out of [0,255]");
            px = static_cast<std::uint8_t>(v);
        }
    }
    return img;
}

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

GrayImage load_png(const std::string& path) {
    std::unique_ptr<std::FILE, int (*)(std::FILE*)> fp(std::fopen(path.c_str(), "rb"), std::fclose);
    if (!fp) throw IoError("cannot open " + path);

    PngReader r;
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!r.png) throw IoError("libpng init failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw IoError("libpng init failed");
    if (setjmp(png_jmpbuf(r.png))) throw FormatError("corrupt PNG: " + path);

    png_init_io(r.png, fp.get());
    png_read_info(r.png, r.info);

    const png_uint_32 w = png_get_image_width(r.png, r.info);
    const png_uint_32 h = png_get_image_height(r.png, r.info);
    const int depth = png_get_bit_depth(r.png, r.info);
    int color = png_get_color_type(r.png, r.info);
    if (w == 0 || h == 0) throw FormatError("PNG with zero dimension");
    if (depth == 16) throw FormatError("16-bit PNG not supported");

    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(r.png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(r.png);
    png_set_strip_alpha(r.png);
    png_read_update_info(r.png, r.info);
    color = png_get_color_type(r.png, r.info);

    const int channels = png_get_channels(r.png, r.info);
    if (channels != 1 && channels != 3) throw FormatError("PNG must be 8-bit grayscale or RGB");

    std::vector<std::uint8_t> row(static_cast<std::size_t>(w) * channels);
    GrayImage img(static_cast<int>(w), static_cast<int>(h));
    for (png_uint_32 y = 0; y < h; ++y) {
        png_read_row(r.png, row.data(), nullptr);
        for (png_uint_32 x = 0; x < w; ++x) {
            if (channels == 1) {
                img.at(static_cast<int>(x), static_cast<int>(y)) = row[x];
            } else {
                const double lum = 0.299 * row[3 * x] + 0.587 * row[3 * x + 1] + 0.114 * row[3 * x + 2];
                img.at(static_cast<int>(x), static_cast<int>(y)) = static_cast<std::uint8_t>(std::lround(lum));
            }
        }
    }
    return img;
}

}  // namespace

GrayImage load_image(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    unsigned char magic[2] = {0, 0};
    in.read(reinterpret_cast<char*>(magic), 2);
    if (in.gcount() != 2) throw IoError("truncated file " + path);
    in.seekg(0);
    if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5')) return load_pgm(in);
    if (magic[0] == 0x89 && magic[1] == 'P') {
        in.close();
        return load_png(path);
    }
    throw FormatError("unsupported image format: " + path);
}

void save_pgm_p5(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()), static_cast<std::streamsize>(img.data.size()));
    if (!out) throw IoError("write failed: " + path);
}

void save_pgm_p2(const GrayImage& img, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "P2\n" << img.width << " " << img.height << "\n255\n";
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) out << int(img.at(x, y)) << (x + 1 == img.width ? '\n' : ' ');
    }
    if (!out) throw IoError("write failed: " + path);
}

GrayImage pad_to_block_multiple(const GrayImage& img, int block) {
    if (block < 1) throw ConfigError("block size must be >= 1");
    const int pw = (img.width + block - 1) / block * block;
    const int ph = (img.height + block - 1) / block * block;
    if (pw == img.width && ph == img.height) return img;

    GrayImage out(pw, ph);
    for (int y = 0; y < ph; ++y) {
        const int sy = y < img.height ? y : img.height - 1;
        for (int x = 0; x < pw; ++x) {
            const int sx = x < img.width ? x : img.width - 1;
            out.at(x, y) = img.at(sx, sy);
        }
    }
    return out;
}

GrayImage synth_image(SynthKind kind, int param, int width, int height) {
    GrayImage img(width, height);
    switch (kind) {
        case SynthKind::Constant:
            if (param < 0 || param > 255) throw ConfigError("constant value must be in [0,255]");
            for (auto& px : img.data) px = static_cast<std::uint8_t>(param);
            break;
        case SynthKind::Gradient:
            for (int y = 0; y < height; ++y)
                for (int x = 0; x < width; ++x) {
                    const int denom = width + height - 2;
                    img.at(x, y) = denom == 0 ? 0 : static_cast<std::uint8_t>(std::lround(255.0 * (x + y) / denom));
                }
            break;
        case SynthKind::Checkerboard:
            if (param < 1) throw ConfigError("checkerboard period must be >= 1");
            for (int y = 0; y < height; ++y)
                for (int x = 0; x < width; ++x) img.at(x, y) = ((x / param + y / param) % 2) ? 255 : 0;
            break;
    }
    return img;
}

GrayImage parse_synth_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 3 || parts[0] != "synth") throw ConfigError("bad synthetic spec: " + spec);

    auto parse_dims = [&](const std::string& s, int& w, int& h) {
        const auto x = s.find('x');
        if (x == std::string::npos) throw ConfigError("bad dimensions in synthetic spec: " + spec);
        w = std::stoi(s.substr(0, x));
        h = std::stoi(s.substr(x + 1));
    };

    int w = 0, h = 0;
    if (parts[1] == "gradient") {
        if (parts.size() != 3) throw ConfigError("gradient spec takes only dimensions: " + spec);
        parse_dims(parts[2], w, h);
        return synth_image(SynthKind::Gradient, 0, w, h);
    }
    if (parts.size() != 4) throw ConfigError("spec needs a parameter and dimensions: " + spec);
    parse_dims(parts[3], w, h);
    const int param = std::stoi(parts[2]);
    if (parts[1] == "constant") return synth_image(SynthKind::Constant, param, w, h);
    if (parts[1] == "checkerboard") return synth_image(SynthKind::Checkerboard, param, w, h);
    throw ConfigError("unknown synthetic kind: " + parts[1]);
}

}  // namespace qbc
