#pragma once

namespace persista {

// Worker count derived from PERSISTA_THREADS (0 or unset = hardware
// concurrency). Always at least 1.
int thread_cap();

}  // namespace persista
