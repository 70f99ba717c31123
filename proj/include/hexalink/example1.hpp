#pragma once

#include "hexalink/linkage.hpp"

namespace hexalink {

/// The built-in reference linkage: an angle-symmetric 6R linkage with the
/// parallel property (h1 || h4, h2 || h3, h5 || h6), whose configuration
/// curve contains (5t/4, t, t, 5t/4, t, t). Joints 1 and 4 share an axis in
/// this initial position (h4 = -h1 as dual quaternions).
Linkage<Rational> example1_linkage();

/// A point of the non-degenerate component of example1's configuration
/// curve: (5t/4, t, t).
SymConfiguration<Rational> example1_configuration(const Rational& t);

} // namespace hexalink
