// Copyright 2026 The qdotsim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace qdot {

inline constexpr const char* version = "0.1.0";

} // namespace qdot
