#include "orthochroma/parallel.hpp"

#include <cstdlib>
#include <string>

namespace orthochroma::par {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("ORTHOCHROMA_THREADS")) {
        try {
            int cap = std::stoi(env);
            if (cap >= 1 && cap < hw) return cap;
        } catch (...) {
            // ignore malformed values, fall through to hardware count
        }
    }
    return hw;
}

}  // namespace orthochroma::par
