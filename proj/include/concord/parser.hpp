// Copyright 2026 The Concord Authors
// Licensed under the Apache License, Version 2.0 (https://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <string>

#include "concord/scenario.hpp"

namespace concord {

/// Parses scenario text. Rejections throw ParseError carrying the 1-based
/// position of the first offending byte or token; reference errors point at
/// the referencing token. Never crashes on arbitrary bytes.
Scenario parse_scenario(const std::string& source);

/// Canonical text form: byte-stable for equal scenarios, and
/// parse(serialize(s)) is structurally equal to s for every valid s.
std::string serialize_scenario(const Scenario& scenario);

/// Reads and parses a file; IoError if unreadable.
Scenario load_scenario_file(const std::string& path);

}  // namespace concord
