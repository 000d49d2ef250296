#pragma once

#include "hoct/core.hpp"
#include "hoct/tree.hpp"

namespace hoct {

// Exact inverse of the forward transform: undoes every exchange recorded in
// the tree, rightmost context first, each subtree before its own node. The
// message must be the payload the tree was produced with; restoring with an
// empty tree is the identity.
void restore(Bytes& m, const CtTree& t);

}  // namespace hoct
