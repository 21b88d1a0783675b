#pragma once

// Declarative manifold and bundle expressions.
//
//   manifold := cp(n) | point | prod(manifold, manifold, ...) | proj(bundle)
//             | ecube() | ecube-base
//   bundle   := triv(k) | triv(k, manifold) | o1(manifold) | o1(i, manifold)
//             | sum(bundle, ...) | dual(bundle) | tangent(manifold)
//             | ex24(m, i1, i2) | ex25(m, i1, i2, i3) | cy3(m) | ecube_line()
//
// triv(k) without a base takes the base of its siblings in a sum, or a point.

#include <string>

#include "core/manifold.hpp"

namespace genus_forge {

ManifoldPtr parse_manifold(const std::string& text);
Bundle parse_bundle(const std::string& text);

}  // namespace genus_forge
