#include "expwell/parallel.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace expwell {

int default_threads() {
    if (const char* env = std::getenv("EXPWELL_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    return omp_get_max_threads();
}

int resolve_threads(int requested) { return requested > 0 ? requested : default_threads(); }

}  // namespace expwell
