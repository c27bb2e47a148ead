#pragma once

#include <cstdint>
#include <vector>

#include "lqc/embed.hpp"
#include "lqc/nerve.hpp"

namespace lqc {

/// Nerve map of the star cover followed by an embedding of the nerve.
/// F sends each vertex of the fine edgewise subdivision of x to the set of
/// largest partition-of-unity weight (ties to the smaller set), a simplicial
/// approximation of the nerve map. G = gg_embed of the nerve. G o F is
/// realized on the pullback of G's subdivision along F.
struct NerveEmbedding {
  Cover cover;
  CellComplex nerve;
  Subdivision fine;
  std::vector<Index> f;  // fine vertex -> nerve vertex
  EmbeddedComplex g;
  Pullback pullback;
  std::vector<Point> coords;      // G o F on the pullback vertices
  CoarseCertificate f_cert;       // pullback -> G's subdivision, simplicial
  CoarseCertificate measured;     // G o F, per unit cell
  bool within_bound = false;      // measured <= f_cert * g.certificate
  CompositionCheck check;         // ratios; bounds filled even when violated
};

/// Throws NotSimplicialMap if the weight-argmax vertex map is not simplicial.
NerveEmbedding nerve_embedding(const CellComplex& x, const EmbedParams& params, std::uint32_t fine = 4);

}  // namespace lqc
