#pragma once

namespace optomech {

// SI defining constants (2019 redefinition); hbar = h / 2pi.
inline constexpr double k_hbar = 1.0545718176461565e-34;  // J s
inline constexpr double k_boltzmann = 1.380649e-23;       // J / K
inline constexpr double k_light_speed = 299792458.0;      // m / s
inline constexpr double k_two_pi = 6.283185307179586476925286766559;

}  // namespace optomech
