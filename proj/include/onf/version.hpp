#pragma once

namespace onf {

inline constexpr const char* kVersion = "1.0.0";

// File-format schema tags written into every emitted artifact.
inline constexpr const char* kPotentialFieldSchema = "potential_field v1";
inline constexpr const char* kTimeSeriesSchema = "time_series v1";
inline constexpr const char* kSpectrumSchema = "spectrum v1";

}  // namespace onf
