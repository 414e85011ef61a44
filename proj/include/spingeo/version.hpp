#pragma once

namespace spingeo {

inline const char* version_string() { return "0.1.0"; }

}  // namespace spingeo
