#pragma once

#include <vector>

#include "hvol/distribution.hpp"
#include "hvol/family.hpp"
#include "hvol/protocol.hpp"
#include "hvol/rng.hpp"

namespace hvol {

/// Random mass vector: independent uniform(0,1) draws, normalized.
FiniteDistribution randomDistribution(Rng& rng, Eigen::Index outcomes);

DistributionFamily randomFamily(Rng& rng, Eigen::Index members,
                                Eigen::Index outcomes);

/// Random protocol over {0,1}^players.  Node shape: leaves appear with
/// probability `leafChance` below `maxDepth` and always at `maxDepth`; the
/// root is internal whenever maxDepth > 0.  Speakers, message probabilities
/// and leaf outputs are all drawn from `rng`.
ProtocolTree randomProtocol(Rng& rng, int players, int maxDepth,
                            double leafChance = 0.25);

/// Copy of a protocol with every message probability jittered by a uniform
/// offset in [-amplitude, amplitude], clamped to [0, 1].  Leaf outputs are
/// kept, so small amplitudes preserve "mostly correct" behavior.
ProtocolTree perturbProtocol(Rng& rng, const ProtocolTree& tree,
                             double amplitude);

}  // namespace hvol
