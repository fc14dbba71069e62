#pragma once

// Built-in example posets, addressed by name:
//   boolean:<m>            2^[m]
//   simplex_boundary:<m>   boundary of the m-simplex (a sphere of dimension m-1)
//   digon                  two edges on the same two vertices
//   glued_simplices:<d>    two d-simplices identified along their boundaries
//   rp2_six_vertex         the 6-vertex triangulation of the real projective plane
//   edge_plus_triangle     an edge and a disjoint triangle
//   two_triangles          two disjoint triangles
//   cone:<name>            product with 2^[1]
//   disjoint:<a>+<b>       disjoint union (shared least element)

#include <string>
#include <vector>

#include "facering/io.hpp"

namespace facering {

/// The names exercised by `corpus list` and the test suites.
std::vector<std::string> corpus_names();

/// Throws `Error(kInvalidInput)` for an unknown or malformed name.
PosetFile corpus_file(const std::string& name);
SimplicialPoset corpus_poset(const std::string& name);

}  // namespace facering
