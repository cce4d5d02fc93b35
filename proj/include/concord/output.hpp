// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <json.hpp>

#include "concord/explain.hpp"

namespace concord {

// Machine-readable result documents. Field order is fixed (ordered_json) so
// equal runs emit byte-identical output; `timing_ms` is the one field a
// byte comparison must ignore.

nlohmann::ordered_json extension_json(const ValueFramework& vf, const Extension& extension);
nlohmann::ordered_json justification_json(const JustificationNode& node);
nlohmann::ordered_json explanation_json(const Explanation& explanation);

/// Counts of everything a scenario declares, for `check`.
nlohmann::ordered_json scenario_summary_json(const Scenario& scenario);

}  // namespace concord
