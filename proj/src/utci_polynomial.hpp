#pragma once

#include <array>
#include <cstddef>

namespace clima::comfort::detail {

struct UtciTerm {
  double coef;
  int ta;
  int va;
  int dtr;
  int pa;
};

inline constexpr std::size_t kUtciTermCount = 210;

extern const std::array<UtciTerm, kUtciTermCount> kUtciTerms;

}  // namespace clima::comfort::detail
