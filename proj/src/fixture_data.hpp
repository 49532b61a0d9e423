#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace chargraph::detail {

// (name, JSON text) pairs sorted by name; generated at build time.
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixtures();

}  // namespace chargraph::detail
