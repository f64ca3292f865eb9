#pragma once

#include <iostream>
#include <string_view>

namespace forge::log {

enum class Level { Quiet, Info, Debug };

inline Level& level() {
  static Level l = Level::Info;
  return l;
}

/// Diagnostics go to standard error; standard output carries data only.
inline void info(std::string_view msg) {
  if (level() >= Level::Info) std::cerr << "[forge] " << msg << '\n';
}

inline void debug(std::string_view msg) {
  if (level() >= Level::Debug) std::cerr << "[forge:debug] " << msg << '\n';
}

}  // namespace forge::log
