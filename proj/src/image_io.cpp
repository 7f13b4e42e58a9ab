#include "egohand/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <csetjmp>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <vector>

#include <jpeglib.h>

namespace egohand {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::string& what, const std::string& path) {
  throw std::runtime_error(what + ": " + path);
}

Raster read_png_file(const std::string& path) {
  png_image img;
  std::memset(&img, 0, sizeof(img));
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&img, path.c_str())) fail("failed to read PNG", path);

  const bool gray = (img.format & PNG_FORMAT_FLAG_COLOR) == 0;
  img.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;

  Raster out(static_cast<int>(img.width), static_cast<int>(img.height), gray ? 1 : 3);
  if (!png_image_finish_read(&img, nullptr, out.data.data(), 0, nullptr)) {
    png_image_free(&img);
    fail("failed to decode PNG", path);
  }
  return out;
}

Raster read_jpeg_file(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) fail("cannot open image", path);

  jpeg_decompress_struct cinfo;
  jpeg_error_mgr jerr;
  cinfo.err = jpeg_std_error(&jerr);
  jerr.error_exit = [](j_common_ptr ci) {
    char msg[JMSG_LENGTH_MAX];
    (*ci->err->format_message)(ci, msg);
    throw std::runtime_error(std::string("JPEG decode error: ") + msg);
  };

  jpeg_create_decompress(&cinfo);
  try {
    jpeg_stdio_src(&cinfo, f.get());
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = cinfo.num_components == 1 ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_start_decompress(&cinfo);

    Raster out(static_cast<int>(cinfo.output_width), static_cast<int>(cinfo.output_height),
               cinfo.output_components == 1 ? 1 : 3);
    const std::size_t stride = static_cast<std::size_t>(out.width) * out.channels;
    while (cinfo.output_scanline < cinfo.output_height) {
      JSAMPROW row = out.data.data() + cinfo.output_scanline * stride;
      jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return out;
  } catch (...) {
    jpeg_destroy_decompress(&cinfo);
    throw;
  }
}

}  // namespace

Raster read_image(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) fail("cannot open image", path);
  unsigned char sig[8] = {0};
  const std::size_t n = std::fread(sig, 1, sizeof(sig), f.get());
  f.reset();

  if (n >= 8 && png_sig_cmp(sig, 0, 8) == 0) return read_png_file(path);
  if (n >= 2 && sig[0] == 0xFF && sig[1] == 0xD8) return read_jpeg_file(path);
  fail("unsupported image format (expected PNG or JPEG)", path);
}

void write_png(const Raster& image, const std::string& path) {
  png_image img;
  std::memset(&img, 0, sizeof(img));
  img.version = PNG_IMAGE_VERSION;
  img.width = static_cast<png_uint_32>(image.width);
  img.height = static_cast<png_uint_32>(image.height);
  img.format = image.channels == 1 ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
  if (!png_image_write_to_file(&img, path.c_str(), 0, image.data.data(), 0, nullptr)) {
    fail("failed to write PNG", path);
  }
}

BinaryMask read_mask_png(const std::string& path) {
  Raster img = read_image(path);
  BinaryMask mask(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      // For RGB inputs the first channel decides; masks are written as gray.
      mask.set(x, y, img.at(x, y, 0) >= 128);
    }
  }
  return mask;
}

void write_mask_png(const BinaryMask& mask, const std::string& path) {
  Raster img(mask.width, mask.height, 1, 0);
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (mask.at(x, y)) img.at(x, y) = 255;
    }
  }
  write_png(img, path);
}

}  // namespace egohand
