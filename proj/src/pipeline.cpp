#include "lqc/pipeline.hpp"

namespace lqc {

NerveEmbedding nerve_embedding(const CellComplex& x, const EmbedParams& params, std::uint32_t fine) {
  NerveEmbedding out;
  out.cover = star_cover(x);
  out.nerve = nerve_complex(out.cover);
  out.fine = edgewise_subdivide(x, fine);
  out.f.resize(out.fine.complex.cells(0));
  for (Index v = 0; v < out.f.size(); ++v) {
    const Carrier& c = out.fine.carriers[v];
    auto s = x.find(c.vertices);
    if (!s) throw ComplexError("carrier is not a simplex of the base complex");
    ComplexPoint p;
    p.dim = static_cast<int>(c.vertices.size()) - 1;
    p.simplex = *s;
    for (auto num : c.numerators) p.weights.push_back(static_cast<double>(num) / c.denominator);
    auto rho = partition_of_unity(out.cover, p);
    Index best = rho.weights.front().first;
    double w = rho.weights.front().second;
    for (auto [set, weight] : rho.weights)
      if (weight > w) best = set, w = weight;
    out.f[v] = best;
  }
  if (!is_simplicial_map(out.fine.complex, out.f, out.nerve))
    throw NotSimplicialMap("weight-argmax approximation of the nerve map is not simplicial");

  out.g = gg_embed(out.nerve, params);
  out.pullback = subdivide_pullback(out.fine.complex, out.f, out.nerve, out.g.subdivision);
  for (Index v : out.pullback.map) out.coords.push_back(out.g.coords[v]);
  out.f_cert = certify_simplicial(out.pullback.complex, out.pullback.map, out.g.complex());
  out.measured = certify_coarse(out.pullback.complex, out.coords);
  try {
    out.check = compose_certificates(out.f_cert, out.g.certificate, out.measured);
    out.within_bound = true;
  } catch (const CompositionBoundViolated&) {
    out.check.forward_bound = out.f_cert.forward * out.g.certificate.forward;
    out.check.backward_bound = out.f_cert.backward * out.g.certificate.backward;
    out.within_bound = false;
  }
  return out;
}

}  // namespace lqc
