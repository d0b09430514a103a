// SPDX-License-Identifier: Apache-2.0
#ifndef APRANK_VERSION_HPP
#define APRANK_VERSION_HPP

namespace aprank {

inline constexpr const char* kVersion = "0.1.0";

} // namespace aprank

#endif
