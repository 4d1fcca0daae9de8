#include "magmakit/config.hpp"

#include <cstdlib>
#include <string>

namespace mk {

namespace {

Caps initial_caps() {
    Caps c;
    if (const char* env = std::getenv("MAGMA_MAX_EXHAUSTIVE")) {
        try {
            auto v = std::stoul(env);
            if (v > 0) c.max_exhaustive = v;
        } catch (...) {
            // malformed override is ignored
        }
    }
    return c;
}

Caps& storage() {
    static Caps c = initial_caps();
    return c;
}

}  // namespace

const Caps& caps() { return storage(); }

void set_caps(const Caps& c) { storage() = c; }

ScopedCaps::ScopedCaps(const Caps& c) : saved_(caps()) { set_caps(c); }

ScopedCaps::~ScopedCaps() { set_caps(saved_); }

}  // namespace mk
