#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphiso/error.hpp"
#include "graphiso/graph.hpp"

namespace testing {

template <class F>
std::optional<graphiso::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const graphiso::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline graphiso::WeightedMultigraph make(std::vector<std::string> vertices,
                                         std::vector<graphiso::EdgeRecord> edges) {
  return graphiso::WeightedMultigraph::build(std::move(vertices), edges);
}

}  // namespace testing
