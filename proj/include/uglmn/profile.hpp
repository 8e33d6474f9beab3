#pragma once

#include <compare>

namespace uglmn {

/// Super dimension m|n. Indices 1..m are even, m+1..m+n are odd.
struct Profile {
    int m = 0;
    int n = 0;

    constexpr int size() const { return m + n; }
    friend constexpr bool operator==(const Profile&, const Profile&) = default;
    friend constexpr auto operator<=>(const Profile&, const Profile&) = default;
};

/// Throws std::invalid_argument unless m, n >= 0 and m + n > 0.
void validate_profile(const Profile& p);

}  // namespace uglmn
