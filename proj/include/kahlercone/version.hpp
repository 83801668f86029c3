#pragma once

#define KAHLERCONE_VERSION_MAJOR 0
#define KAHLERCONE_VERSION_MINOR 1
#define KAHLERCONE_VERSION_PATCH 0
#define KAHLERCONE_VERSION_STRING "0.1.0"

namespace kcone {
inline const char* version_string() { return KAHLERCONE_VERSION_STRING; }
}
