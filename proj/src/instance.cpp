#include "stanley/instance.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace stanley {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Monomial> parse_list(std::string_view body, int n) {
  std::vector<Monomial> out;
  const std::string text = trim(body);
  if (text.empty() || text == "0" || text == "-") return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = std::min(text.find(',', pos), text.size());
    const std::string item = trim(std::string_view(text).substr(pos, next - pos));
    if (item.empty()) throw ParseError("empty entry in list '" + text + "'");
    out.push_back(parse_monomial(item, n));
    pos = next + 1;
  }
  return out;
}

int parse_int(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer for '" + key + "': '" + value + "'");
  }
}

}  // namespace

QuotientInstance QuotientInstance::make(int n, int d, std::vector<Monomial> F,
                                        std::vector<Monomial> E, std::vector<Monomial> J) {
  if (n < 1 || n > Monomial::kMaxVariables) {
    throw InvalidInstance("n = " + std::to_string(n) + " outside 1..64");
  }
  if (d < 1) throw InvalidInstance("d must be positive");
  if (F.empty()) throw InvalidInstance("F must contain at least one generator (r >= 1)");

  auto check_ring = [n](const Monomial& m) {
    if (m.ambient() != n) throw AmbientMismatch(to_string(m) + " not in the ring of the instance");
    if (m.is_unit()) throw InvalidInstance("the unit monomial cannot be a generator");
  };
  for (const auto& f : F) {
    check_ring(f);
    if (f.degree() != d) {
      throw InvalidInstance("F generator " + to_string(f) + " has degree " +
                            std::to_string(f.degree()) + ", expected d = " + std::to_string(d));
    }
  }
  for (const auto& e : E) {
    check_ring(e);
    if (e.degree() < d + 1) {
      throw InvalidInstance("E generator " + to_string(e) + " has degree below d+1");
    }
  }
  std::sort(F.begin(), F.end());
  std::sort(E.begin(), E.end());

  std::vector<Monomial> all = F;
  all.insert(all.end(), E.begin(), E.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i != j && divides(all[i], all[j])) {
        throw InvalidInstance("F and E are not a minimal generating set: " + to_string(all[i]) +
                              " divides " + to_string(all[j]));
      }
    }
  }

  QuotientInstance inst;
  inst.n = n;
  inst.d = d;
  inst.F = std::move(F);
  inst.E = std::move(E);
  for (const auto& j : J) {
    check_ring(j);
    if (j.degree() < d + 1) {
      throw InvalidInstance("J generator " + to_string(j) + " has degree below d+1");
    }
  }
  inst.J = MonomialIdeal(n, J);
  const MonomialIdeal I = inst.I();
  for (const auto& j : inst.J.generators()) {
    if (!I.contains(j)) throw InvalidInstance("J generator " + to_string(j) + " is not in I");
  }
  return inst;
}

MonomialIdeal QuotientInstance::I() const {
  std::vector<Monomial> gens = F;
  gens.insert(gens.end(), E.begin(), E.end());
  return MonomialIdeal(n, gens);
}

std::uint64_t QuotientInstance::F_support_union() const {
  std::uint64_t bits = 0;
  for (const auto& f : F) bits |= f.support();
  return bits;
}

QuotientInstance parse_instance(std::string_view text) {
  std::optional<int> n;
  int d = 1;
  std::string f_text, e_text, j_text;
  bool have_f = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    const auto eq = line.find('=');
    if (colon != std::string::npos && (eq == std::string::npos || colon < eq)) {
      const std::string key = trim(std::string_view(line).substr(0, colon));
      const std::string body = line.substr(colon + 1);
      if (key == "F") {
        f_text = body;
        have_f = true;
      } else if (key == "E") {
        e_text = body;
      } else if (key == "J") {
        j_text = body;
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown list '" + key + "'");
      }
    } else if (eq != std::string::npos) {
      const std::string key = trim(std::string_view(line).substr(0, eq));
      const std::string value = trim(std::string_view(line).substr(eq + 1));
      if (key == "n") n = parse_int(value, key);
      if (key == "d") d = parse_int(value, key);
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": cannot parse '" + line + "'");
    }
  }
  if (!n) throw ParseError("missing 'n = ...'");
  if (!have_f) throw ParseError("missing 'F: ...'");
  return QuotientInstance::make(*n, d, parse_list(f_text, *n), parse_list(e_text, *n),
                                parse_list(j_text, *n));
}

QuotientInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string format_instance(const QuotientInstance& inst) {
  std::ostringstream out;
  out << "n = " << inst.n << "\n";
  out << "d = " << inst.d << "\n";
  out << "F: " << to_string(inst.F) << "\n";
  out << "E: " << to_string(inst.E) << "\n";
  out << "J: " << to_string(inst.J.generators()) << "\n";
  return out.str();
}

}  // namespace stanley
