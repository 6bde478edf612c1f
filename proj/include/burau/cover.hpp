#ifndef BURAU_COVER_HPP
#define BURAU_COVER_HPP

#include "burau/matrix.hpp"

namespace burau {

/// The action induced on the k-fold cyclic cover summand, as one integer
/// matrix in k x k blocks of size base_dim: block (i', i) holds the sum of
/// the decomposition terms M_e with e congruent to i' - i mod k.  The block
/// structure is circulant, and for k = 1 the matrix is M(1).
struct CoverAction {
    int k;
    int base_dim;
    IntMatrix matrix;
};

CoverAction build_cover_action(const LaurentMatrix& m, int k);

/// The block permutation advancing each block index by one mod k (the deck
/// transformation generator in the same basis).
IntMatrix block_shift_matrix(int k, int base_dim);

/// Exact integer check that the cover action commutes with the block shift.
bool shift_commutation_check(const CoverAction& cover);

struct CoverVerdict {
    int k;
    int dim;
    double max_match_distance;
    bool pass;
};

/// Compares the eigenvalue multiset of the cover action with the union over
/// j of the eigenvalues of M(e^{2 pi i j/k}); passes when the optimal
/// matching distance is at most tol.
CoverVerdict verify_direct_sum(const LaurentMatrix& m, int k, double tol);

}  // namespace burau

#endif
