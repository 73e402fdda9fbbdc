#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coloreul {

/// Resource caps for every enumerating operation. Exceeding one throws
/// CapExceeded before any work is done.
struct Limits {
    std::uint64_t max_group_size = 10'000'000;       // r^n * n!
    std::uint64_t max_bruteforce_maps = 50'000'000;  // (r(j+1))^#nonzero
    std::uint64_t max_product_terms = 200'000'000;   // |supp A| * |supp B|
    std::uint64_t max_extensions = 10'000'000;       // |L(P)| and |CL(P)|
};

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an identity that must hold by construction does not.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coloreul
