#include "persista/threads.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace persista {

int thread_cap() {
    int n = 0;
    if (const char* env = std::getenv("PERSISTA_THREADS")) {
        try {
            n = std::stoi(env);
        } catch (const std::exception&) {
            n = 0;
        }
    }
    if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
    return n > 0 ? n : 1;
}

}  // namespace persista
