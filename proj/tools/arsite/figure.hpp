#pragma once

#include <optional>
#include <string>

#include "arsite/correspondence.hpp"
#include "arsite/hereditary.hpp"

namespace arsite::cli {

struct FigureLayers {
  bool region = true;
  bool hull = true;
  bool mu_line = true;
  bool lambda_line = true;
};

struct FigureSpec {
  HereditarySet set;
  std::optional<Lambda> lambda;
  std::size_t window = 10;
  FigureLayers layers;
};

/// Static SVG 1.1 drawing of E on the window [0, window]^2. Palette: region
/// cells yellow, hull of gamma(E) green, mu line red, lambda support line blue.
/// Throws WindowTooSmall when window < 1 + max coordinate of E.
std::string emit_figure(const FigureSpec& spec);

}  // namespace arsite::cli
