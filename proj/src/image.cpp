#include "tcover/image.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "tcover/error.hpp"
#include "tcover/path_json.hpp"

namespace tcover {

namespace {

constexpr std::int64_t kMaxSide = 1 << 16;

class HeaderReader {
  public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char c = bytes_[pos_];
            if (c == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    std::int64_t read_dimension(const char* what) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            throw InputError(std::string("PBM: missing ") + what);
        }
        std::int64_t value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > kMaxSide) throw InputError(std::string("PBM: ") + what + " too large");
            ++pos_;
        }
        if (value <= 0) throw InputError(std::string("PBM: ") + what + " must be positive");
        return value;
    }

    std::size_t& pos() { return pos_; }
    std::string_view bytes() const { return bytes_; }

  private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

BinaryImage::BinaryImage(std::int64_t width, std::int64_t height) : width_(width), height_(height) {
    if (width < 0 || height < 0) throw InputError("image dimensions must be non-negative");
    bits_.assign(static_cast<std::size_t>(width * height), 0);
}

bool BinaryImage::contains(const GridPoint& p) const {
    return in_bounds(p) && bits_[static_cast<std::size_t>(p.y * width_ + p.x)] != 0;
}

void BinaryImage::set(const GridPoint& p, bool value) {
    if (!in_bounds(p)) throw std::out_of_range("BinaryImage::set: " + to_string(p) + " outside the image");
    bits_[static_cast<std::size_t>(p.y * width_ + p.x)] = value ? 1 : 0;
}

std::vector<GridPoint> BinaryImage::foreground() const {
    std::vector<GridPoint> out;
    for (std::int64_t x = 0; x < width_; ++x) {
        for (std::int64_t y = 0; y < height_; ++y) {
            if (bits_[static_cast<std::size_t>(y * width_ + x)]) out.push_back({x, y});
        }
    }
    return out;
}

std::size_t BinaryImage::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BinaryImage load_image(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '1' && bytes[1] != '4')) {
        throw InputError("PBM: expected magic number P1 or P4");
    }
    const bool ascii = bytes[1] == '1';
    HeaderReader reader(bytes);
    reader.pos() = 2;
    if (reader.pos() < bytes.size() && !std::isspace(static_cast<unsigned char>(bytes[2])) && bytes[2] != '#') {
        throw InputError("PBM: malformed magic number");
    }
    const std::int64_t width = reader.read_dimension("width");
    const std::int64_t height = reader.read_dimension("height");
    BinaryImage image(width, height);

    std::size_t& pos = reader.pos();
    if (ascii) {
        for (std::int64_t y = 0; y < height; ++y) {
            for (std::int64_t x = 0; x < width; ++x) {
                reader.skip_space_and_comments();
                if (pos >= bytes.size()) throw InputError("PBM: truncated pixel data");
                const char c = bytes[pos++];
                if (c != '0' && c != '1') throw InputError(std::string("PBM: bad sample '") + c + "'");
                if (c == '1') image.set({x, y});
            }
        }
        return image;
    }

    if (pos >= bytes.size() || !std::isspace(static_cast<unsigned char>(bytes[pos]))) {
        throw InputError("PBM: missing whitespace before raster");
    }
    ++pos;
    const std::size_t row_bytes = static_cast<std::size_t>((width + 7) / 8);
    if (bytes.size() - pos < row_bytes * static_cast<std::size_t>(height)) throw InputError("PBM: truncated pixel data");
    for (std::int64_t y = 0; y < height; ++y) {
        const std::size_t row = pos + static_cast<std::size_t>(y) * row_bytes;
        for (std::int64_t x = 0; x < width; ++x) {
            const auto byte = static_cast<unsigned char>(bytes[row + static_cast<std::size_t>(x / 8)]);
            if (byte & (0x80u >> (x % 8))) image.set({x, y});
        }
    }
    return image;
}

BinaryImage load_image_file(const std::string& filename) { return load_image(read_file(filename)); }

std::string write_pbm(const BinaryImage& image, PbmFormat format) {
    std::string out = format == PbmFormat::P1 ? "P1\n" : "P4\n";
    out += std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n";
    for (std::int64_t y = 0; y < image.height(); ++y) {
        if (format == PbmFormat::P1) {
            for (std::int64_t x = 0; x < image.width(); ++x) {
                if (x) out += ' ';
                out += image.contains({x, y}) ? '1' : '0';
            }
            out += '\n';
        } else {
            for (std::int64_t x0 = 0; x0 < image.width(); x0 += 8) {
                unsigned char byte = 0;
                for (std::int64_t b = 0; b < 8 && x0 + b < image.width(); ++b) {
                    if (image.contains({x0 + b, y})) byte |= static_cast<unsigned char>(0x80u >> b);
                }
                out += static_cast<char>(byte);
            }
        }
    }
    return out;
}

std::vector<GridPoint> neighbourhood(const GridPoint& p, Adjacency adjacency) {
    if (adjacency == Adjacency::Four) return {{p.x - 1, p.y}, {p.x, p.y - 1}, {p.x, p.y + 1}, {p.x + 1, p.y}};
    if (adjacency == Adjacency::Eight) {
        return {{p.x - 1, p.y - 1}, {p.x - 1, p.y}, {p.x - 1, p.y + 1}, {p.x, p.y - 1},
                {p.x, p.y + 1},     {p.x + 1, p.y - 1}, {p.x + 1, p.y}, {p.x + 1, p.y + 1}};
    }
    throw InputError("images need adjacency 4 or 8");
}

std::vector<BinaryImage> split_components(const BinaryImage& image, Adjacency adjacency) {
    std::vector<BinaryImage> components;
    BinaryImage seen(image.width(), image.height());
    for (const auto& seed : image.foreground()) {
        if (seen.contains(seed)) continue;
        BinaryImage component(image.width(), image.height());
        std::deque<GridPoint> queue{seed};
        seen.set(seed);
        while (!queue.empty()) {
            const GridPoint p = queue.front();
            queue.pop_front();
            component.set(p);
            for (const auto& q : neighbourhood(p, adjacency)) {
                if (image.contains(q) && !seen.contains(q)) {
                    seen.set(q);
                    queue.push_back(q);
                }
            }
        }
        components.push_back(std::move(component));
    }
    return components;
}

}  // namespace tcover
