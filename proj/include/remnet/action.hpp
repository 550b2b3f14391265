#pragma once

#include <cstdint>
#include <string>

namespace remnet {

// On/off configuration of the pico base stations: bit b set = PBS b active.
// The macro BS is always active and is not part of the mask. The integer
// value of the bit vector doubles as the dense table index.
class Action {
public:
    static constexpr int kMaxPbsCount = 20;

    Action() = default;
    Action(std::uint32_t bits, int pbs_count);

    static Action all_on(int pbs_count);
    static Action all_off(int pbs_count);

    // Size of the dense action table: 2^pbs_count.
    static std::uint32_t table_size(int pbs_count);

    std::uint32_t index() const noexcept { return bits_; }
    int pbs_count() const noexcept { return pbs_count_; }
    bool pbs_active(int pbs) const;
    int active_count() const noexcept;
    bool is_all_on() const noexcept;

    friend bool operator==(const Action&, const Action&) = default;

private:
    std::uint32_t bits_ = 0;
    int pbs_count_ = 0;
};

// Bit string, one char per PBS in index order, e.g. "10110".
std::string to_string(const Action& action);

} // namespace remnet
