#pragma once

#include <stdexcept>
#include <string>

#include "jsmap/hardy.hpp"
#include "jsmap/kernel.hpp"
#include "jsmap/types.hpp"

namespace jsmap {

/// Parse failure carrying the 1-based row/column of the offending cell.
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, int row, int col)
      : std::runtime_error(message), row(row), col(col) {}
  int row = 0;
  int col = 0;
};

/// Reads a matrix from CSV. Two layouts are auto-detected: sparse triplets
/// "m,n,re,im" (1-based indices) and a dense grid of "re+imj" cells. For
/// triplets the size is the largest index seen, or `size_hint` if larger.
OperatorMatrix read_matrix_csv(const std::string& path, int size_hint = 0);

/// Structured matrix from JSON: {"kind":"diagonal","values":[...]},
/// {"kind":"toeplitz","offsets":{"-1":...},"N":...},
/// {"kind":"two_sided_toeplitz","offsets":{...},"N":...},
/// {"kind":"jordan","eigs":[...],"blocks":[...]},
/// {"kind":"dense","rows":[[...]]}. Complex entries are numbers or [re, im].
OperatorMatrix read_matrix_json(const std::string& path, int size_hint = 0);

/// Dispatches on the file extension (.json vs anything else -> CSV).
OperatorMatrix load_matrix(const std::string& path, int size_hint = 0);

/// Hardy element as a flat JSON array of [re, im] pairs, fiber-major
/// (component-by-component, modes 1..N inside each component).
HardyElement read_hardy_json(const std::string& path, int fiber_dim = 1);
std::string hardy_to_json(const HardyElement& f);
void write_hardy_json(const HardyElement& f, const std::string& path);

/// 17-significant-digit scientific notation: lossless and byte-stable.
std::string format_double(double value);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace jsmap
