#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace upq {

// Semantic validation failure (bad datum, non-dominant weight, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

// A size guard on an intentionally exponential operation was exceeded.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& m) : std::runtime_error(m) {}
};

// U(p,q). q = 0 is allowed (compact factors show up when slicing data).
struct Signature {
    int p = 1;
    int q = 1;

    int n() const { return p + q; }
    int epsilon() const { return (p + q) % 2; }

    void check() const {
        if (p < 0 || q < 0 || p + q < 1)
            throw ValidationError("signature: need p,q >= 0 and p+q >= 1");
    }

    friend bool operator==(const Signature&, const Signature&) = default;
};

// Highest weight of an irreducible K-type, K = U(p) x U(q).
// Both halves weakly decreasing integer vectors.
struct KTypeWeight {
    std::vector<long long> left;
    std::vector<long long> right;

    bool dominant() const {
        auto ok = [](const std::vector<long long>& v) {
            for (size_t i = 1; i < v.size(); ++i)
                if (v[i - 1] < v[i]) return false;
            return true;
        };
        return ok(left) && ok(right);
    }

    Signature sig() const { return {int(left.size()), int(right.size())}; }

    friend bool operator==(const KTypeWeight&, const KTypeWeight&) = default;
};

enum class Level { PPlus, PMinus, PFull };

std::string level_str(Level l);

}  // namespace upq
