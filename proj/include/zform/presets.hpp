#ifndef ZFORM_PRESETS_HPP
#define ZFORM_PRESETS_HPP

#include "superalgebra.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zform {

namespace presets {

// Tables produced by tools/gen_presets.py from matrix realizations; kept in sync
// with data/algebras/*.alg.

inline constexpr std::string_view sl2 = R"ALG(
name sl2
cartan 1
root a even + -a : 2
root -a even - a : -2
coroot a : 1
coroot -a : -1
bracket h[1] x[a] : 2 x[a]
bracket h[1] x[-a] : -2 x[-a]
bracket x[a] h[1] : -2 x[a]
bracket x[a] x[-a] : 1 h[1]
bracket x[-a] h[1] : 2 x[-a]
bracket x[-a] x[a] : -1 h[1]
)ALG";

inline constexpr std::string_view sl3 = R"ALG(
name sl3
cartan 2
root a1 even + -a1 : 2 -1
root a2 even + -a2 : -1 2
root a1+a2 even + -a1-a2 : 1 1
root -a1 even - a1 : -2 1
root -a2 even - a2 : 1 -2
root -a1-a2 even - a1+a2 : -1 -1
coroot a1 : 1 0
coroot a2 : 0 1
coroot a1+a2 : 1 1
coroot -a1 : -1 0
coroot -a2 : 0 -1
coroot -a1-a2 : -1 -1
bracket h[1] x[a1] : 2 x[a1]
bracket h[1] x[a2] : -1 x[a2]
bracket h[1] x[a1+a2] : 1 x[a1+a2]
bracket h[1] x[-a1] : -2 x[-a1]
bracket h[1] x[-a2] : 1 x[-a2]
bracket h[1] x[-a1-a2] : -1 x[-a1-a2]
bracket h[2] x[a1] : -1 x[a1]
bracket h[2] x[a2] : 2 x[a2]
bracket h[2] x[a1+a2] : 1 x[a1+a2]
bracket h[2] x[-a1] : 1 x[-a1]
bracket h[2] x[-a2] : -2 x[-a2]
bracket h[2] x[-a1-a2] : -1 x[-a1-a2]
bracket x[a1] h[1] : -2 x[a1]
bracket x[a1] h[2] : 1 x[a1]
bracket x[a1] x[a2] : 1 x[a1+a2]
bracket x[a1] x[-a1] : 1 h[1]
bracket x[a1] x[-a1-a2] : -1 x[-a2]
bracket x[a2] h[1] : 1 x[a2]
bracket x[a2] h[2] : -2 x[a2]
bracket x[a2] x[a1] : -1 x[a1+a2]
bracket x[a2] x[-a2] : 1 h[2]
bracket x[a2] x[-a1-a2] : 1 x[-a1]
bracket x[a1+a2] h[1] : -1 x[a1+a2]
bracket x[a1+a2] h[2] : -1 x[a1+a2]
bracket x[a1+a2] x[-a1] : -1 x[a2]
bracket x[a1+a2] x[-a2] : 1 x[a1]
bracket x[a1+a2] x[-a1-a2] : 1 h[1] 1 h[2]
bracket x[-a1] h[1] : 2 x[-a1]
bracket x[-a1] h[2] : -1 x[-a1]
bracket x[-a1] x[a1] : -1 h[1]
bracket x[-a1] x[a1+a2] : 1 x[a2]
bracket x[-a1] x[-a2] : -1 x[-a1-a2]
bracket x[-a2] h[1] : -1 x[-a2]
bracket x[-a2] h[2] : 2 x[-a2]
bracket x[-a2] x[a2] : -1 h[2]
bracket x[-a2] x[a1+a2] : -1 x[a1]
bracket x[-a2] x[-a1] : 1 x[-a1-a2]
bracket x[-a1-a2] h[1] : 1 x[-a1-a2]
bracket x[-a1-a2] h[2] : 1 x[-a1-a2]
bracket x[-a1-a2] x[a1] : 1 x[-a2]
bracket x[-a1-a2] x[a2] : -1 x[-a1]
bracket x[-a1-a2] x[a1+a2] : -1 h[1] -1 h[2]
)ALG";

inline constexpr std::string_view sp4 = R"ALG(
name sp4
cartan 2
root a1 even + -a1 : 2 -1
root a2 even + -a2 : -2 2
root a1+a2 even + -a1-a2 : 0 1
root 2a1+a2 even + -2a1-a2 : 2 0
root -a1 even - a1 : -2 1
root -a2 even - a2 : 2 -2
root -a1-a2 even - a1+a2 : 0 -1
root -2a1-a2 even - 2a1+a2 : -2 0
coroot a1 : 1 0
coroot a2 : 0 1
coroot a1+a2 : 1 2
coroot 2a1+a2 : 1 1
coroot -a1 : -1 0
coroot -a2 : 0 -1
coroot -a1-a2 : -1 -2
coroot -2a1-a2 : -1 -1
bracket h[1] x[a1] : 2 x[a1]
bracket h[1] x[a2] : -2 x[a2]
bracket h[1] x[2a1+a2] : 2 x[2a1+a2]
bracket h[1] x[-a1] : -2 x[-a1]
bracket h[1] x[-a2] : 2 x[-a2]
bracket h[1] x[-2a1-a2] : -2 x[-2a1-a2]
bracket h[2] x[a1] : -1 x[a1]
bracket h[2] x[a2] : 2 x[a2]
bracket h[2] x[a1+a2] : 1 x[a1+a2]
bracket h[2] x[-a1] : 1 x[-a1]
bracket h[2] x[-a2] : -2 x[-a2]
bracket h[2] x[-a1-a2] : -1 x[-a1-a2]
bracket x[a1] h[1] : -2 x[a1]
bracket x[a1] h[2] : 1 x[a1]
bracket x[a1] x[a2] : 1 x[a1+a2]
bracket x[a1] x[a1+a2] : 2 x[2a1+a2]
bracket x[a1] x[-a1] : 1 h[1]
bracket x[a1] x[-a1-a2] : -2 x[-a2]
bracket x[a1] x[-2a1-a2] : -1 x[-a1-a2]
bracket x[a2] h[1] : 2 x[a2]
bracket x[a2] h[2] : -2 x[a2]
bracket x[a2] x[a1] : -1 x[a1+a2]
bracket x[a2] x[-a2] : 1 h[2]
bracket x[a2] x[-a1-a2] : 1 x[-a1]
bracket x[a1+a2] h[2] : -1 x[a1+a2]
bracket x[a1+a2] x[a1] : -2 x[2a1+a2]
bracket x[a1+a2] x[-a1] : -2 x[a2]
bracket x[a1+a2] x[-a2] : 1 x[a1]
bracket x[a1+a2] x[-a1-a2] : 1 h[1] 2 h[2]
bracket x[a1+a2] x[-2a1-a2] : 1 x[-a1]
bracket x[2a1+a2] h[1] : -2 x[2a1+a2]
bracket x[2a1+a2] x[-a1] : -1 x[a1+a2]
bracket x[2a1+a2] x[-a1-a2] : 1 x[a1]
bracket x[2a1+a2] x[-2a1-a2] : 1 h[1] 1 h[2]
bracket x[-a1] h[1] : 2 x[-a1]
bracket x[-a1] h[2] : -1 x[-a1]
bracket x[-a1] x[a1] : -1 h[1]
bracket x[-a1] x[a1+a2] : 2 x[a2]
bracket x[-a1] x[2a1+a2] : 1 x[a1+a2]
bracket x[-a1] x[-a2] : -1 x[-a1-a2]
bracket x[-a1] x[-a1-a2] : -2 x[-2a1-a2]
bracket x[-a2] h[1] : -2 x[-a2]
bracket x[-a2] h[2] : 2 x[-a2]
bracket x[-a2] x[a2] : -1 h[2]
bracket x[-a2] x[a1+a2] : -1 x[a1]
bracket x[-a2] x[-a1] : 1 x[-a1-a2]
bracket x[-a1-a2] h[2] : 1 x[-a1-a2]
bracket x[-a1-a2] x[a1] : 2 x[-a2]
bracket x[-a1-a2] x[a2] : -1 x[-a1]
bracket x[-a1-a2] x[a1+a2] : -1 h[1] -2 h[2]
bracket x[-a1-a2] x[2a1+a2] : -1 x[a1]
bracket x[-a1-a2] x[-a1] : 2 x[-2a1-a2]
bracket x[-2a1-a2] h[1] : 2 x[-2a1-a2]
bracket x[-2a1-a2] x[a1] : 1 x[-a1-a2]
bracket x[-2a1-a2] x[a1+a2] : -1 x[-a1]
bracket x[-2a1-a2] x[2a1+a2] : -1 h[1] -1 h[2]
)ALG";

inline constexpr std::string_view sl21 = R"ALG(
name sl21
cartan 2
root a1 even + -a1 : 2 -1
root a2 odd + -a2 : -1 0
root a1+a2 odd + -a1-a2 : 1 -1
root -a1 even - a1 : -2 1
root -a2 odd - a2 : 1 0
root -a1-a2 odd - a1+a2 : -1 1
coroot a1 : 1 0
coroot a2 : 0 1
coroot a1+a2 : 1 1
coroot -a1 : -1 0
coroot -a2 : 0 1
coroot -a1-a2 : 1 1
bracket h[1] x[a1] : 2 x[a1]
bracket h[1] x[a2] : -1 x[a2]
bracket h[1] x[a1+a2] : 1 x[a1+a2]
bracket h[1] x[-a1] : -2 x[-a1]
bracket h[1] x[-a2] : 1 x[-a2]
bracket h[1] x[-a1-a2] : -1 x[-a1-a2]
bracket h[2] x[a1] : -1 x[a1]
bracket h[2] x[a1+a2] : -1 x[a1+a2]
bracket h[2] x[-a1] : 1 x[-a1]
bracket h[2] x[-a1-a2] : 1 x[-a1-a2]
bracket x[a1] h[1] : -2 x[a1]
bracket x[a1] h[2] : 1 x[a1]
bracket x[a1] x[a2] : 1 x[a1+a2]
bracket x[a1] x[-a1] : 1 h[1]
bracket x[a1] x[-a1-a2] : -1 x[-a2]
bracket x[a2] h[1] : 1 x[a2]
bracket x[a2] x[a1] : -1 x[a1+a2]
bracket x[a2] x[-a2] : 1 h[2]
bracket x[a2] x[-a1-a2] : 1 x[-a1]
bracket x[a1+a2] h[1] : -1 x[a1+a2]
bracket x[a1+a2] h[2] : 1 x[a1+a2]
bracket x[a1+a2] x[-a1] : -1 x[a2]
bracket x[a1+a2] x[-a2] : 1 x[a1]
bracket x[a1+a2] x[-a1-a2] : 1 h[1] 1 h[2]
bracket x[-a1] h[1] : 2 x[-a1]
bracket x[-a1] h[2] : -1 x[-a1]
bracket x[-a1] x[a1] : -1 h[1]
bracket x[-a1] x[a1+a2] : 1 x[a2]
bracket x[-a1] x[-a2] : -1 x[-a1-a2]
bracket x[-a2] h[1] : -1 x[-a2]
bracket x[-a2] x[a2] : 1 h[2]
bracket x[-a2] x[a1+a2] : 1 x[a1]
bracket x[-a2] x[-a1] : 1 x[-a1-a2]
bracket x[-a1-a2] h[1] : 1 x[-a1-a2]
bracket x[-a1-a2] h[2] : -1 x[-a1-a2]
bracket x[-a1-a2] x[a1] : 1 x[-a2]
bracket x[-a1-a2] x[a2] : 1 x[-a1]
bracket x[-a1-a2] x[a1+a2] : 1 h[1] 1 h[2]
)ALG";

inline constexpr std::string_view osp12 = R"ALG(
name osp12
cartan 1
root g odd + -g : 1
root 2g even + -2g : 2
root -g odd - g : -1
root -2g even - 2g : -2
coroot g : 2
coroot 2g : 1
coroot -g : 2
coroot -2g : -1
bracket h[1] x[g] : 1 x[g]
bracket h[1] x[2g] : 2 x[2g]
bracket h[1] x[-g] : -1 x[-g]
bracket h[1] x[-2g] : -2 x[-2g]
bracket x[g] h[1] : -1 x[g]
bracket x[g] x[g] : 4 x[2g]
bracket x[g] x[-g] : 2 h[1]
bracket x[g] x[-2g] : 1 x[-g]
bracket x[2g] h[1] : -2 x[2g]
bracket x[2g] x[-g] : -1 x[g]
bracket x[2g] x[-2g] : 1 h[1]
bracket x[-g] h[1] : 1 x[-g]
bracket x[-g] x[g] : 2 h[1]
bracket x[-g] x[2g] : 1 x[g]
bracket x[-g] x[-g] : -4 x[-2g]
bracket x[-2g] h[1] : 2 x[-2g]
bracket x[-2g] x[g] : -1 x[-g]
bracket x[-2g] x[2g] : -1 h[1]
)ALG";

}  // namespace presets

inline constexpr std::array<std::string_view, 5> preset_names{"sl2", "sl3", "sp4", "sl21", "osp12"};

/// One of sl2, sl3, sp4, sl21, osp12; throws std::invalid_argument otherwise.
inline SuperAlgebraSpec preset(std::string_view name)
{
  if (name == "sl2") return load_spec(std::string(presets::sl2));
  if (name == "sl3") return load_spec(std::string(presets::sl3));
  if (name == "sp4") return load_spec(std::string(presets::sp4));
  if (name == "sl21") return load_spec(std::string(presets::sl21));
  if (name == "osp12") return load_spec(std::string(presets::osp12));
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

}  // namespace zform

#endif  // ZFORM_PRESETS_HPP
