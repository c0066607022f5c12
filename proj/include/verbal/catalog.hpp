#ifndef VERBAL_CATALOG_HPP
#define VERBAL_CATALOG_HPP

#include <string>
#include <vector>

#include "verbal/group.hpp"

namespace verbal {

// Case-insensitive catalog names: C<n>, D<n>, S<n>, Q8, UT<n>_<p>, Heis<p>,
// Wr<p>_<n>, B23, ES<p>+ / ES<p>-.  Strings containing a '.' or '/' are
// treated as paths to Cayley-table JSON files.
FiniteGroup group_by_name(const std::string& spec);

// The named groups swept by the verification suites, capped by order.
std::vector<FiniteGroup> catalog_groups(int max_order);

}  // namespace verbal

#endif
