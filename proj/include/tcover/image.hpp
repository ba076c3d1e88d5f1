#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tcover/path.hpp"

namespace tcover {

/// Binary raster, origin top-left, x rightward, y downward.
class BinaryImage {
  public:
    BinaryImage() = default;
    BinaryImage(std::int64_t width, std::int64_t height);

    std::int64_t width() const { return width_; }
    std::int64_t height() const { return height_; }

    bool in_bounds(const GridPoint& p) const { return p.x >= 0 && p.y >= 0 && p.x < width_ && p.y < height_; }
    /// False outside the image.
    bool contains(const GridPoint& p) const;
    void set(const GridPoint& p, bool value = true);

    /// Foreground pixels ordered by (x, y).
    std::vector<GridPoint> foreground() const;
    std::size_t count() const;

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

  private:
    std::int64_t width_ = 0;
    std::int64_t height_ = 0;
    std::vector<std::uint8_t> bits_;
};

enum class PbmFormat { P1, P4 };

/// Parses PBM (P1 or P4, detected from the magic number). 1 = foreground.
/// Throws InputError on malformed headers, bad samples, truncated data or
/// non-positive dimensions.
BinaryImage load_image(std::string_view bytes);
BinaryImage load_image_file(const std::string& filename);

std::string write_pbm(const BinaryImage& image, PbmFormat format);

/// The alpha-neighbourhood of p (4 or 8 pixels), in a fixed order.
std::vector<GridPoint> neighbourhood(const GridPoint& p, Adjacency adjacency);

/// alpha-connected components of the foreground, each as an image of the
/// same size, ordered by their smallest pixel.
std::vector<BinaryImage> split_components(const BinaryImage& image, Adjacency adjacency);

}  // namespace tcover
