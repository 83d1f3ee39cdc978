#pragma once

namespace avdelay {

// Every parallel kernel has a serial twin that must produce bit-identical
// output; tests and the benchmark target exercise both.
enum class ParallelMode { Serial, OpenMP };

}  // namespace avdelay
