#pragma once

namespace glmlab {

inline constexpr const char* kToolVersion = "0.1.0";

// Version of the JSONL result-record schema and of the preset table format.
// Bump on any incompatible field change.
inline constexpr int kSchemaVersion = 1;
inline constexpr int kPresetTableVersion = 1;

}  // namespace glmlab
