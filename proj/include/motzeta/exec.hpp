#pragma once

namespace motzeta {

/// Execution policy for kernels that have an OpenMP version next to the
/// serial reference.
enum class Exec { serial, parallel };

}  // namespace motzeta
