#ifndef BURAU_BURAU_HPP
#define BURAU_BURAU_HPP

#include "burau/braid.hpp"
#include "burau/matrix.hpp"

namespace burau {

/// Reduced Burau image of sigma_index^sign on `strings` strands, an
/// (strings-1) x (strings-1) Laurent matrix.  Convention: sigma_1 is the
/// identity except for the top-left 2x2 block [[-t, 0], [1, 1]]; an interior
/// sigma_i is the identity except for the 3x3 block [[1, t, 0], [0, -t, 0],
/// [0, 1, 1]] on rows/columns i-1, i, i+1; sigma_{n-1} is the identity
/// except for the bottom-right 2x2 block [[1, t], [0, -t]].  Sign -1 gives
/// the exact inverse.  For strings == 2 the image is the 1x1 matrix [-t].
LaurentMatrix burau_generator(int index, int sign, int strings);

/// Reduced Burau matrix of a word: the left-to-right product of generator
/// images, computed exactly.
LaurentMatrix burau_matrix(const BraidWord& word);

}  // namespace burau

#endif
