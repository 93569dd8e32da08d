// SPDX-FileCopyrightText: Copyright (c) 2026 ambtag contributors
// SPDX-License-Identifier: Apache-2.0

#ifndef AMBTAG_VERSION_HPP
#define AMBTAG_VERSION_HPP

namespace ambtag {
inline constexpr const char* kVersion = "0.3.0";
}

#endif
