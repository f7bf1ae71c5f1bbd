/**
 * @file pgm_io.hpp
 * @brief Portable graymap (PGM) decoding and encoding.
 *
 * Reads binary (P5) and ASCII (P2) graymaps with maxval up to 65535; header
 * comments starting with '#' are skipped. The image modulus is maxval + 1.
 * The writer always emits canonical P5: "P5\n<width> <height>\n<maxval>\n"
 * followed by raw samples, one byte per pixel for maxval <= 255 and two bytes
 * big-endian otherwise. write then read is the identity on pixel data.
 */
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ringshift/gray_image.hpp"

namespace ringshift {

GrayImage parse_pgm(std::string_view bytes);
GrayImage read_pgm(const std::filesystem::path& path);

std::string serialize_pgm(const GrayImage& image);
void write_pgm(const GrayImage& image, const std::filesystem::path& path);

}  // namespace ringshift
