#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace fundusbench {

/// Declared value range of an ImageBuffer. Pipelines change it explicitly;
/// `standardized` means zero-centered backbone statistics (unbounded).
enum class ValueRange { u8_255, unit, standardized };

std::string to_string(ValueRange r);

/// Decoded image: height x width x 3 (RGB), row-major HWC floats.
struct ImageBuffer {
  int height = 0;
  int width = 0;
  ValueRange range = ValueRange::u8_255;
  std::vector<float> data;  // size = height * width * 3

  static constexpr int kChannels = 3;

  ImageBuffer() = default;
  ImageBuffer(int h, int w, ValueRange r, float fill = 0.0f)
      : height(h), width(w), range(r), data(static_cast<std::size_t>(h) * w * kChannels, fill) {}

  float& at(int y, int x, int c) {
    return data[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
  }
  float at(int y, int x, int c) const {
    return data[(static_cast<std::size_t>(y) * width + x) * kChannels + c];
  }

  std::size_t pixel_count() const { return static_cast<std::size_t>(height) * width; }
  bool empty() const { return data.empty(); }
};

/// Decodes an image file into an RGB u8-range buffer. Throws std::runtime_error
/// on unreadable or undecodable files.
ImageBuffer decode_image(const std::filesystem::path& path);

/// True if the file decodes successfully (used by ingestion validation).
bool image_decodable(const std::filesystem::path& path);

/// Writes a buffer as PNG. u8-range values are rounded, unit-range values are
/// scaled by 255; standardized buffers are clipped into [0,1] first.
void write_png(const ImageBuffer& img, const std::filesystem::path& path);

}  // namespace fundusbench
