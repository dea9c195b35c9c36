#include "ajf/generators.hpp"

#include <stdexcept>

namespace ajf {

namespace {
constexpr std::array<GeneratorId, 15> kBasis = {
    GeneratorId::APlus, GeneratorId::AMinus, GeneratorId::BPlus, GeneratorId::BMinus,
    GeneratorId::CPlus, GeneratorId::CMinus, GeneratorId::DPlus, GeneratorId::DMinus,
    GeneratorId::EPlus, GeneratorId::EMinus, GeneratorId::FPlus, GeneratorId::FMinus,
    GeneratorId::L,     GeneratorId::M,     GeneratorId::Q};

constexpr std::array<GeneratorId, 12> kLadders = {
    GeneratorId::APlus, GeneratorId::AMinus, GeneratorId::BPlus, GeneratorId::BMinus,
    GeneratorId::CPlus, GeneratorId::CMinus, GeneratorId::DPlus, GeneratorId::DMinus,
    GeneratorId::EPlus, GeneratorId::EMinus, GeneratorId::FPlus, GeneratorId::FMinus};
}  // namespace

const std::array<GeneratorId, 15>& su22_basis() { return kBasis; }
const std::array<GeneratorId, 12>& ladder_generators() { return kLadders; }

bool is_ladder(GeneratorId g) {
  return static_cast<int>(g) <= static_cast<int>(GeneratorId::FMinus);
}

bool is_diagonal(GeneratorId g) { return !is_ladder(g); }

char family(GeneratorId g) {
  switch (g) {
    case GeneratorId::APlus: case GeneratorId::AMinus: case GeneratorId::A3: return 'A';
    case GeneratorId::BPlus: case GeneratorId::BMinus: case GeneratorId::B3: return 'B';
    case GeneratorId::CPlus: case GeneratorId::CMinus: case GeneratorId::C3: return 'C';
    case GeneratorId::DPlus: case GeneratorId::DMinus: case GeneratorId::D3: return 'D';
    case GeneratorId::EPlus: case GeneratorId::EMinus: case GeneratorId::E3: return 'E';
    case GeneratorId::FPlus: case GeneratorId::FMinus: case GeneratorId::F3: return 'F';
    default: throw std::invalid_argument("family: " + name(g) + " has no ladder family");
  }
}

int ladder_sign(GeneratorId g) {
  switch (g) {
    case GeneratorId::APlus: case GeneratorId::BPlus: case GeneratorId::CPlus:
    case GeneratorId::DPlus: case GeneratorId::EPlus: case GeneratorId::FPlus:
      return +1;
    case GeneratorId::AMinus: case GeneratorId::BMinus: case GeneratorId::CMinus:
    case GeneratorId::DMinus: case GeneratorId::EMinus: case GeneratorId::FMinus:
      return -1;
    default:
      throw std::invalid_argument("ladder_sign: " + name(g) + " is diagonal");
  }
}

GeneratorId partner(GeneratorId g) {
  const int i = static_cast<int>(g);
  if (!is_ladder(g)) throw std::invalid_argument("partner: " + name(g) + " is diagonal");
  return static_cast<GeneratorId>(i % 2 == 0 ? i + 1 : i - 1);
}

std::string name(GeneratorId g) {
  switch (g) {
    case GeneratorId::APlus: return "A+";
    case GeneratorId::AMinus: return "A-";
    case GeneratorId::BPlus: return "B+";
    case GeneratorId::BMinus: return "B-";
    case GeneratorId::CPlus: return "C+";
    case GeneratorId::CMinus: return "C-";
    case GeneratorId::DPlus: return "D+";
    case GeneratorId::DMinus: return "D-";
    case GeneratorId::EPlus: return "E+";
    case GeneratorId::EMinus: return "E-";
    case GeneratorId::FPlus: return "F+";
    case GeneratorId::FMinus: return "F-";
    case GeneratorId::L: return "L";
    case GeneratorId::M: return "M";
    case GeneratorId::Q: return "Q";
    case GeneratorId::A3: return "A3";
    case GeneratorId::B3: return "B3";
    case GeneratorId::C3: return "C3";
    case GeneratorId::D3: return "D3";
    case GeneratorId::E3: return "E3";
    case GeneratorId::F3: return "F3";
  }
  return "?";
}

std::optional<GeneratorId> parse_generator(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(GeneratorId::F3); ++i) {
    const auto g = static_cast<GeneratorId>(i);
    if (name(g) == s) return g;
  }
  return std::nullopt;
}

HalfInt cartan_eigenvalue(GeneratorId g, const IndexTriple& t) {
  // (m+q)/2 and (m-q)/2 are half-integers on the unitary range because
  // m+q and m-q are integers there.
  auto halve = [](HalfInt h) {
    if (h.twice % 2 != 0)
      throw std::domain_error("cartan_eigenvalue: eigenvalue is not a half-integer");
    return HalfInt::from_twice(h.twice / 2);
  };
  switch (g) {
    case GeneratorId::L: return t.l;
    case GeneratorId::M: case GeneratorId::A3: return t.m;
    case GeneratorId::Q: case GeneratorId::B3: return t.q;
    case GeneratorId::C3: return t.l + halve(t.m + t.q) + half();
    case GeneratorId::D3: return t.l + halve(t.m - t.q) + half();
    case GeneratorId::E3: return t.l + halve(t.q - t.m) + half();
    case GeneratorId::F3: return t.l - halve(t.m + t.q) + half();
    default:
      throw std::invalid_argument("cartan_eigenvalue: " + name(g) + " is not diagonal");
  }
}

}  // namespace ajf
