#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stanley {

/// Coefficient field for homology computations.
struct Field {
  enum class Kind { GF2, GFp, Rationals };
  Kind kind = Kind::GF2;
  std::uint32_t p = 2;  ///< characteristic for GFp

  static Field gf2() { return {Kind::GF2, 2}; }
  static Field gfp(std::uint32_t p);
  static Field rationals() { return {Kind::Rationals, 0}; }

  friend bool operator==(const Field&, const Field&) = default;
};

/// Accepts "gf2", "gfp:P" (P prime) and "q".
Field parse_field(std::string_view text);
std::string to_string(const Field& field);

/// Dense integer matrix; entries are interpreted in the chosen field.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Exact rank over the field. Over the rationals this is fraction-free
/// (Bareiss) elimination on arbitrary-precision integers.
std::size_t rank(const IntMatrix& m, const Field& field);

}  // namespace stanley
