#include "stanley/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace stanley {

Monomial::Monomial(int n, std::uint64_t support) : bits_(support), n_(n) {
  if (n < 0 || n > kMaxVariables) {
    throw ArgumentError("variable count " + std::to_string(n) + " outside [0, 64]");
  }
  if (n < kMaxVariables && (support >> n) != 0) {
    throw ArgumentError("support uses a variable beyond x" + std::to_string(n));
  }
}

Monomial Monomial::variable(int n, int index) {
  if (index < 1 || index > n) {
    throw ArgumentError("variable x" + std::to_string(index) + " outside 1.." +
                        std::to_string(n));
  }
  return Monomial(n, std::uint64_t{1} << (index - 1));
}

Monomial Monomial::from_indices(int n, const std::vector<int>& one_based) {
  std::uint64_t bits = 0;
  for (int i : one_based) bits |= variable(n, i).support();
  return Monomial(n, bits);
}

std::vector<int> Monomial::variables() const {
  std::vector<int> out;
  for_each_variable(bits_, [&](int v) { out.push_back(v); });
  return out;
}

void check_same_ambient(const Monomial& a, const Monomial& b) {
  if (a.ambient() != b.ambient()) {
    throw AmbientMismatch("monomials live in " + std::to_string(a.ambient()) + " and " +
                          std::to_string(b.ambient()) + " variables");
  }
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) {
    throw ArgumentError(to_string(a) + " does not divide " + to_string(b));
  }
  return Monomial(b.ambient(), b.support() & ~a.support());
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for_each_variable(m.support(), [&](int v) {
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(v);
  });
  return out;
}

std::string to_string(const std::vector<Monomial>& ms) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += ", ";
    out += to_string(m);
  }
  return out;
}

Monomial parse_monomial(std::string_view text, int n) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) throw ParseError("empty monomial");
  if (compact == "1") return Monomial::unit(n);

  std::uint64_t bits = 0;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t next = std::min(compact.find('*', pos), compact.size());
    const std::string_view factor(compact.data() + pos, next - pos);
    if (factor.size() < 2 || factor[0] != 'x') {
      throw ParseError("bad factor '" + std::string(factor) + "' in '" + compact + "'");
    }
    int index = 0;
    const auto* first = factor.data() + 1;
    const auto* last = factor.data() + factor.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("bad variable index in '" + std::string(factor) + "'");
    }
    if (index < 1 || index > n) {
      throw ParseError("variable x" + std::to_string(index) + " outside 1.." + std::to_string(n));
    }
    const std::uint64_t bit = std::uint64_t{1} << (index - 1);
    if (bits & bit) throw ParseError("repeated variable in '" + compact + "' (not squarefree)");
    bits |= bit;
    pos = next + 1;
  }
  return Monomial(n, bits);
}

}  // namespace stanley
