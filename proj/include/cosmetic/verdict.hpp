#pragma once

#include <optional>
#include <string>

namespace cosmetic {

/// Outcome of one obstruction filter applied to a candidate.
///
/// A failing verdict always carries a witness explaining the exclusion. The
/// linking-form filter also records its unit u when it passes.
struct ObstructionVerdict {
    std::string filter_name;
    bool passed = false;
    std::optional<std::string> witness;

    friend bool operator==(const ObstructionVerdict&, const ObstructionVerdict&) = default;
};

}  // namespace cosmetic
