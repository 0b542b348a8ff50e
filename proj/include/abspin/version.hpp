#pragma once

namespace abspin {

inline constexpr const char* project_version = "abspin 0.1.0";

}
