#include "stanley/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

#include "stanley/errors.hpp"

namespace stanley {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::size_t rank_gf2(const IntMatrix& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(m.rows, std::vector<std::uint64_t>(words, 0));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (m(r, c) & 1) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r != rank && (rows[r][w] & bit)) {
        for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

// p < 2^31, so every product below fits in 64 bits.
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::size_t rank_gfp(const IntMatrix& m, std::int64_t p) {
  std::vector<std::int64_t> a(m.data.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = ((m.data[i] % p) + p) % p;
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * m.cols + c]; };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t k = 0; k < m.cols; ++k) std::swap(at(pivot, k), at(rank, k));
    const std::int64_t inv = mod_pow(at(rank, c), p - 2, p);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (at(r, c) == 0) continue;
      const std::int64_t factor = at(r, c) * inv % p;
      for (std::size_t k = c; k < m.cols; ++k) {
        at(r, k) = ((at(r, k) - factor * at(rank, k)) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> a(m.data.begin(), m.data.end());
  auto at = [&](std::size_t r, std::size_t c) -> cpp_int& { return a[r * m.cols + c]; };
  cpp_int prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(at(pivot, k), at(rank, k));
    }
    const cpp_int pv = at(rank, c);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const cpp_int lead = at(r, c);
      for (std::size_t k = c + 1; k < m.cols; ++k) {
        // Bareiss step: the division is exact.
        at(r, k) = (pv * at(r, k) - lead * at(rank, k)) / prev;
      }
      at(r, c) = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

}  // namespace

Field Field::gfp(std::uint32_t p) {
  if (!is_prime(p)) throw ArgumentError("GF(p) needs a prime, got " + std::to_string(p));
  if (p == 2) return gf2();
  if (p > (1U << 31)) throw ArgumentError("characteristic too large");
  return {Kind::GFp, p};
}

Field parse_field(std::string_view text) {
  if (text == "gf2") return Field::gf2();
  if (text == "q" || text == "Q") return Field::rationals();
  if (text.substr(0, 4) == "gfp:") {
    try {
      const unsigned long p = std::stoul(std::string(text.substr(4)));
      return Field::gfp(static_cast<std::uint32_t>(p));
    } catch (const std::logic_error&) {
      throw ParseError("bad characteristic in '" + std::string(text) + "'");
    }
  }
  throw ParseError("unknown field '" + std::string(text) + "' (expected gf2, gfp:P or q)");
}

std::string to_string(const Field& field) {
  switch (field.kind) {
    case Field::Kind::GF2: return "gf2";
    case Field::Kind::GFp: return "gfp:" + std::to_string(field.p);
    case Field::Kind::Rationals: return "q";
  }
  return "?";
}

std::size_t rank(const IntMatrix& m, const Field& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  switch (field.kind) {
    case Field::Kind::GF2: return rank_gf2(m);
    case Field::Kind::GFp: return rank_gfp(m, field.p);
    case Field::Kind::Rationals: return rank_rational(m);
  }
  return 0;
}

}  // namespace stanley
