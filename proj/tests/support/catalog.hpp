#pragma once

// The group catalog shared by the property tests and the acceptance run.

#include <string>
#include <string_view>
#include <vector>

#include "pcg/group.hpp"

namespace pcg::testing {

/// Every abelian p-group of order <= max_order (order >= p^2), as nested dp
/// specs of cyclic factors, one per partition of the exponent.
std::vector<std::string> abelian_p_group_specs(unsigned max_order);

struct DirectProductCase {
  std::string spec;
  char expected_case;  // 'a', 'b', 'c', or '-' for none
};
std::vector<DirectProductCase> direct_product_cases();

/// Order-2 automorphism variants: "heis3_c2:0" ... .
std::vector<std::string> heis3_c2_specs();

/// The full catalog, roughly by increasing order; psl3:4 comes last.
std::vector<std::string> catalog_specs();

/// Element whose rendering equals `text`; throws if absent.
groups::ElementId find_rendered(const groups::FiniteGroup& g, std::string_view text);

}  // namespace pcg::testing
