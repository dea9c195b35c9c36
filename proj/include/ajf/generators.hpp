#pragma once

#include <array>
#include <optional>
#include <string>

#include "ajf/half_int.hpp"
#include "ajf/indices.hpp"

namespace ajf {

/// The twelve ladder operators, the three independent diagonal operators
/// L, M, Q, and the six per-family diagonal combinations.
enum class GeneratorId {
  APlus, AMinus,
  BPlus, BMinus,
  CPlus, CMinus,
  DPlus, DMinus,
  EPlus, EMinus,
  FPlus, FMinus,
  L, M, Q,
  A3, B3, C3, D3, E3, F3,
};

/// The 15 operators spanning the closed algebra: 12 ladders plus L, M, Q.
const std::array<GeneratorId, 15>& su22_basis();

/// The 12 ladder operators in family order.
const std::array<GeneratorId, 12>& ladder_generators();

bool is_ladder(GeneratorId g);
bool is_diagonal(GeneratorId g);

/// Family letter 'A'..'F'; throws for L, M, Q.
char family(GeneratorId g);

/// +1 for raising, -1 for lowering; throws for diagonals.
int ladder_sign(GeneratorId g);

/// X+ <-> X- within a family; throws for diagonals.
GeneratorId partner(GeneratorId g);

std::string name(GeneratorId g);
std::optional<GeneratorId> parse_generator(const std::string& s);

/// Eigenvalue of a diagonal generator on the basis state t, exact:
///   L, M, Q   -> l, m, q
///   A3, B3    -> m, q
///   C3        -> l + (m+q)/2 + 1/2      D3 -> l + (m-q)/2 + 1/2
///   E3        -> l + (q-m)/2 + 1/2      F3 -> l - (m+q)/2 + 1/2
/// Throws std::invalid_argument for ladder generators.
HalfInt cartan_eigenvalue(GeneratorId g, const IndexTriple& t);

}  // namespace ajf
