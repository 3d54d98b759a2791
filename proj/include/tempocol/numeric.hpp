#ifndef TEMPOCOL_NUMERIC_HPP
#define TEMPOCOL_NUMERIC_HPP

#include <cstdint>

namespace tempocol {

inline constexpr std::int64_t kCountCap = 4'000'000'000'000'000'000LL;

// base^exp clamped to kCountCap; base >= 0, exp >= 0.
inline std::int64_t saturating_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t result = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > kCountCap / base)
            return kCountCap;
        result *= base;
    }
    return result;
}

} // namespace tempocol

#endif
