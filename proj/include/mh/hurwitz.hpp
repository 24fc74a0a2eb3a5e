#pragma once

// Macdonald-Hurwitz numbers: the genus constraint, the character-sum formula,
// the disconnected assembly, and the genus-reduction / cutting identities.

#include <optional>
#include <vector>

#include "mh/macdonald.hpp"

namespace mh {
namespace hurwitz {

using Profiles = std::vector<Partition>;

// g from (2-2h)d - (2-2g) = sum_i (d - l(Delta_i)); nullopt on parity failure.
std::optional<long> genus_from_profile(int h, int d, const Profiles& profiles);

struct MHResult {
    RatQT value;
    long genus = 0;          // meaningful only when constraint_ok
    bool constraint_ok = false;
};

// Connected-formula Macdonald-Hurwitz number. The character sum is evaluated
// for any integer genus satisfying the constraint; require_nonneg_genus
// restores the g >= 0 convention by zeroing negative-genus values.
MHResult mh(int h, int d, const Profiles& profiles, bool require_nonneg_genus = false);

// The raw character sum with no genus-parity gate. The genus-reduction,
// cutting, operator-closure and Frobenius identities hold for this sum but
// not for the gated mh: their orthogonality collapse runs over every
// intermediate profile, including those the parity gate would zero. At q=t
// the two agree (sign multiplicativity gates the classical sum on its own).
RatQT mh_character_sum(int h, int d, const Profiles& profiles);

// Disconnected assembly for a prescribed total genus g: sums over unordered
// component decompositions (degree splits and per-branch-point part
// distributions), each component a g_i >= 0 connected value, divided by the
// automorphism count of identical components.
RatQT mh_disconnected(int h, int d, const Profiles& profiles, long g, int max_components = 0);

// MH_h = sum_Delta MH_{h-1}(..., Delta, Delta) z_Delta(q,t), h >= 1.
bool verify_genus_reduction(int h, int d, const Profiles& profiles);

// MH_{h1+h2}(all) = sum_Delta MH_{h1}(first, Delta) z_Delta MH_{h2}(Delta, rest).
bool verify_cutting(int h1, int h2, int d, const Profiles& profiles, int split_at);

// Classical Hurwitz number from Murnaghan-Nakayama characters; equals the q=t
// specialization of mh (then t-independent).
Rational classical_mh(int h, int d, const Profiles& profiles);

}  // namespace hurwitz
}  // namespace mh
