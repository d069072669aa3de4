#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gw/decomposition.hpp"

namespace gw {

struct CatalogEntry {
  std::string name;
  std::string params;
  std::string summary;
};

std::vector<CatalogEntry> catalog_entries();

/// Builds a catalog space:
///   su2_trivial               SU(2)/{e}
///   stiefel_n      n >= 4     SO(n)/SO(n-2), blocks {1}, {2}, {3..n}
///   so_klm         k, l, m    so(k+l+m) / so(k)+so(l)+so(m)
///   product_s2_cubed          (S^2)^3 = so(3)^3 / so(2)^3
///   quad_diag_su2             su(2)^4 / diag su(2)
/// Throws Error(UnknownSpace) or Error(InvalidInput).
SpaceDescriptor catalog(std::string_view name, const std::vector<int>& params = {});

/// Parses "name" or "name:p1,p2,..." (e.g. "stiefel_n:4", "so_klm:2,2,1").
SpaceDescriptor catalog_from_ref(std::string_view ref);

}  // namespace gw
