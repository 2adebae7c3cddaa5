#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbk/word.hpp"

namespace sbk {

enum class Family {
  BraidPuncturedOrientable,
  BraidClosedOrientableAB,
  BraidPuncturedSphere,
  BraidPuncturedNonorientable,
  BraidClosedNonorientable,
  BraidClosedOrientableB,
  BraidClosedGM,
  PurePunctured,
  PureClosed,
  Pi1Power,  // direct power of pi1(F) on wall generators (mu domain)
  Subgroup,  // Reidemeister-Schreier / Tietze output
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
bool is_braid_family(Family f);
bool is_pure_family(Family f);

// Which strand the z_j generators commute past. FirstStrand keeps the
// nontrivial string of z_j on strand 1 (z_j commutes with sigma_i for
// i != 1); LastStrand emits the i != n-1 variant.
enum class ZConvention { FirstStrand, LastStrand };

struct SurfaceParams {
  int n{1};
  int g{0};
  int p{0};
  bool orientable{true};
  bool closed{false};  // closed <=> p == 0
};

struct Relator {
  std::string label;
  Word word;

  // Leading tag, e.g. "R4" from "R4(a;r=2)".
  std::string tag() const;
};

struct Presentation {
  Family family{Family::Subgroup};
  SurfaceParams params;
  ZConvention z_convention{ZConvention::FirstStrand};
  Alphabet alphabet;
  std::vector<Relator> relators;
  std::vector<std::string> notes;  // e.g. dropped trivially-true relations

  int index_of(const GenSym& g) const;  // -1 when absent
  bool has(const GenSym& g) const { return index_of(g) >= 0; }
  const Relator* find_relator(const std::string& label) const;
  std::size_t total_relator_length() const;
};

// Throws std::invalid_argument naming the violated constraint.
void validate_params(Family f, const SurfaceParams& p);

Presentation build_presentation(Family f, SurfaceParams p,
                                ZConvention zc = ZConvention::FirstStrand);

// ---- derived elements -------------------------------------------------

enum class DerivedName { Tau, Omega, Zeta, Beta, Gamma, Rho, Tre, PunctureLoop, A2, B2 };

// Words in the braid presentation alphabet of `pres`:
//   Tau(j)   = s_{n-1}..s_{j+1} s_j^2 s_{j+1}^-1..s_{n-1}^-1   1 <= j <= n-1
//   Omega(k) = s_{n-1}^-1..s_1^-1 c s_1..s_{n-1}, c = a/b by parity of k
//   Zeta(j)  = same with c = z_j                               1 <= j <= p-1
//   Beta     = Tau(1)..Tau(n-1)
//   Gamma    = Beta^-1 Tau(1) Beta
//   Rho(j)   = s_j..s_{n-1}, Rho(n) = identity
//   Tre      = s_1..s_{n-2} s_{n-1}^2 s_{n-2}..s_1
//   PunctureLoop = [a_1,b_1^-1]..[a_g,b_g^-1] Tre^-1 z_1..z_{p-1}
//   A2(s)/B2(s)  = s_1^-1 a_s s_1 / s_1^-1 b_s s_1
Word derived_element(const Presentation& pres, DerivedName name, int index = 0);

Word tre_word(int n);

// ---- pure braid index geometry -----------------------------------------

// Strand offset: strand indices run offset+1 .. offset+n, wall indices
// 1 .. offset (handles 1..2g, then boundary walls when p > 0).
int pure_offset(const SurfaceParams& params);
bool is_strand_index(int i, const SurfaceParams& params);
bool valid_pure_pair(int i, int j, const SurfaceParams& params);

// Band/wall expansion of A_{i,j} into the matching braid alphabet.
Word expand_pure_generator(int i, int j, const SurfaceParams& params);
Word expand_pure_generator(const Presentation& pure_pres, int i, int j);

// Braid family whose alphabet hosts the expansions for these params.
Family braid_family_for(const SurfaceParams& params);
Family pure_family_for(const SurfaceParams& params);

// ---- subgroup generating sets ------------------------------------------

// Generators of B^0: a_*, b_*, sigma_1..sigma_{n-2}, tau_*, omega_*,
// zeta_* as applicable to the family.
std::vector<Word> b0_generators(const Presentation& braid_pres);

// Expanded A_{i,j} over every valid pure index pair.
std::vector<Word> pure_subgroup_generators(const Presentation& braid_pres);

// ---- pi1(F)^n presented on wall generators (one boundary component) -----

// Generators A_{j,2g+k} (1 <= j <= 2g, 1 <= k <= n), relators
// [A_{j,2g+k}, A_{l,2g+q}] = 1 for k != q.
Presentation pi1_power_presentation(int g, int n);

}  // namespace sbk
