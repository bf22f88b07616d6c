// Distributed under the MIT License.
// See LICENSE.txt for details.

#pragma once

#include "cotlift/phase_space.hpp"
#include "cotlift/tensors.hpp"

namespace cotlift {

/// The six M-tensor blocks of the Levi-Civita connection of the lifted
/// metric in the adapted frame:
///   nabla_{d^i} d^j     = Q^ij_h d^h + Qt^ijh delta_h
///   nabla_{delta_i} d^j = (-Gamma^j_ih + Pt_i^j_h) d^h + P_i^jh delta_h
///   nabla_{d^i} delta_j = P_j^ih delta_h + Pt_j^i_h d^h
///   nabla_{delta_i} delta_j = (Gamma^h_ij + St_ij^h) delta_h + S_ijh d^h
///
/// Storage: Q(i,j,h) = Q^ij_h, Qt(i,j,h) = Qt^ijh, P(j,i,h) = P_j^ih,
/// Pt(j,i,h) = Pt_j^i_h, S(i,j,h) = S_ijh, St(i,j,h) = St_ij^h.
struct ConnectionBlocks {
  Tensor3 Q, Qt, P, Pt, S, St;
};

/// Closed-form partial derivatives with respect to p_m of the six blocks;
/// first index is m, the rest follow the block's own layout.
struct ConnectionDerivatives {
  Tensor4 dQ, dQt, dP, dPt, dS, dSt;
};

struct ConnectionData {
  ConnectionBlocks blocks;
  ConnectionDerivatives derivs;
};

ConnectionBlocks connection_blocks(const PhasePoint& pt, const MetricCoefficients& mc);
ConnectionDerivatives connection_block_derivatives(const PhasePoint& pt,
                                                   const MetricCoefficients& mc);

/// Blocks and derivatives in one pass over the shared ingredient arrays
/// (the n^4 contractions downstream dominate; ingredients are cached here).
ConnectionData connection_data(const PhasePoint& pt, const MetricCoefficients& mc);

} // namespace cotlift
